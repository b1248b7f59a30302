"""Explicit complexes: cyclic polytopes, Gale-evenness balls, small named spheres,
and the realizer for 2-sphere m-vectors."""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .bounds import two_sphere_m_admissible
from .complex import SimplicialComplex, join, m_vector, polygon, simplex, simplex_boundary
from .transforms import stack


def gale_evenness(I: Sequence[int], n: int) -> bool:
    """Any two elements of [n] outside I are separated by an even number of elements of I."""
    inside = set(I)
    count = 0
    seen_gap = False
    for v in range(1, n + 1):
        if v in inside:
            count += 1
        else:
            if seen_gap and count % 2:
                return False
            seen_gap = True
            count = 0
    return True


def cyclic_boundary(d: int, n: int) -> SimplicialComplex:
    """Boundary complex of the cyclic d-polytope on vertices 1..n."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if n <= d:
        raise ValueError(f"cyclic polytope C({d},{n}) needs n > d")
    return SimplicialComplex(I for I in combinations(range(1, n + 1), d) if gale_evenness(I, n))


def ball_B(d2k: int, interval: tuple[int, int], host_n: int | None = None) -> SimplicialComplex:
    """Facets {i1, i1+1, ..., ik, ik+1} with a <= i1, ik+1 <= b and i_j <= i_{j+1} - 2."""
    if d2k < 2 or d2k % 2:
        raise ValueError("dimension parameter must be a positive even integer")
    a, b = interval
    if host_n is not None and not (1 <= a <= b <= host_n):
        raise ValueError(f"interval [{a},{b}] must lie in [1,{host_n}]")
    k = d2k // 2
    facets = []
    for starts in combinations(range(a, b), k):
        if starts[-1] + 1 > b:
            continue
        if all(starts[j + 1] - starts[j] >= 2 for j in range(k - 1)):
            facets.append([v for s in starts for v in (s, s + 1)])
    if not facets:
        raise ValueError(f"B({d2k},[{a},{b}]) has no facets")
    return SimplicialComplex(facets)


def squeezed_ball_C(i: int, k: int) -> SimplicialComplex | None:
    """Facets {3, ..., 2k-2, 2k-3+j, 2k-2+j} for 2 <= j <= i; None (the void complex) for i = 1."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if i < 1:
        raise ValueError("i must be >= 1")
    if i == 1:
        return None
    core = list(range(3, 2 * k - 1))
    return SimplicialComplex(core + [2 * k - 3 + j, 2 * k - 2 + j] for j in range(2, i + 1))


def ball_D(k: int, i: int, n: int) -> SimplicialComplex:
    """The ball {1,n} * B(2k,[2,n-1]) together with {1,2,n-1,n} * C_i."""
    base = join(simplex([1, n]), ball_B(2 * k, (2, n - 1), n))
    C = squeezed_ball_C(i, k)
    if C is None:
        return base
    extra = join(simplex([1, 2, n - 1, n]), C)
    return SimplicialComplex(base.facets + extra.facets)


_GS8 = (
    (1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 4, 5), (1, 3, 4, 6), (1, 3, 5, 6), (1, 4, 5, 7), (1, 4, 6, 7),
    (1, 5, 6, 8), (1, 5, 7, 8), (1, 6, 7, 8), (2, 3, 4, 8), (2, 3, 5, 6), (2, 3, 6, 7), (2, 3, 7, 8),
    (2, 4, 5, 8), (2, 5, 6, 8), (2, 6, 7, 8), (3, 4, 6, 7), (3, 4, 7, 8), (4, 5, 7, 8),
)

_P042 = (
    (1, 3, 6, 8, 9), (1, 3, 4, 8, 9), (3, 4, 6, 8, 9), (2, 4, 6, 8, 9), (1, 3, 5, 6, 8), (1, 2, 3, 5, 6),
    (2, 3, 5, 6, 8), (1, 3, 4, 5, 8), (2, 3, 6, 7, 8), (2, 4, 6, 7, 8), (3, 4, 6, 7, 8), (1, 2, 3, 6, 7),
    (1, 5, 6, 8, 9), (2, 3, 5, 7, 8), (3, 4, 6, 7, 9), (1, 2, 4, 5, 9), (1, 2, 4, 5, 7), (1, 2, 4, 7, 9),
    (2, 5, 6, 8, 9), (2, 4, 5, 8, 9), (2, 4, 5, 7, 8), (2, 4, 6, 7, 9), (1, 3, 6, 7, 9), (1, 2, 6, 7, 9),
    (1, 2, 5, 6, 9), (1, 2, 3, 5, 7), (3, 4, 5, 7, 8), (1, 3, 4, 7, 9), (1, 3, 4, 5, 7), (1, 4, 5, 8, 9),
)

P042_MISSING_TRIANGLES = (
    (9, 2, 3), (2, 3, 4), (9, 5, 7), (5, 6, 7), (8, 1, 7), (8, 1, 2), (9, 3, 5), (4, 5, 6), (8, 9, 7), (1, 4, 6),
)
P042_EDGES = ((1, 9), (3, 6))


def gs8() -> SimplicialComplex:
    """The 8-vertex neighborly 3-sphere of Grunbaum and Sreedharan."""
    return SimplicialComplex(_GS8)


def p042() -> SimplicialComplex:
    """A 9-vertex neighborly 4-sphere whose missing faces are all triangles."""
    return SimplicialComplex(_P042)


def bipyramid(p: int) -> SimplicialComplex:
    """Bipyramid over the p-gon 1..p with apexes p+1 and p+2."""
    return join(polygon(range(1, p + 1)), simplex_boundary([p + 1, p + 2]))


def stacked_sphere(d: int, n: int) -> SimplicialComplex:
    """A stacked (d-1)-sphere on 1..n: each new vertex stacked on a facet through the previous one."""
    if n < d + 1:
        raise ValueError("need n >= d + 1")
    K = simplex_boundary(range(1, d + 2))
    for v in range(d + 2, n + 1):
        facet = next(f for f in K.facets if v - 1 in f)
        K = stack(K, facet, v)
    return K


def realize_2sphere(n: int, m2: int) -> SimplicialComplex:
    """A 2-sphere with n vertices and exactly m2 missing triangles.

    For m2 <= n - 6: the bipyramid over an (n - m2 - 2)-gon followed by m2
    stackings, each on a facet through the most recent vertex.  For
    m2 = n - 4: a stacked sphere.  Every stacking turns the stacked facet into
    a missing triangle and creates no other.
    """
    if not two_sphere_m_admissible(n, m2):
        raise ValueError(
            f"no 2-sphere with {n} vertices has m2={m2}: need 0 <= m2 <= n-6 or m2 = n-4"
        )
    if m2 == n - 4:
        K = stacked_sphere(3, n)
    else:
        p = n - m2 - 2
        K = bipyramid(p)
        last = p + 2
        for v in range(p + 3, n + 1):
            facet = next(f for f in K.facets if last in f)
            K = stack(K, facet, v)
            last = v
    got = m_vector(K)
    if got[1] != m2 or got[2] != 0:
        raise AssertionError(f"realizer produced m={got}, wanted m2={m2}")
    return K
