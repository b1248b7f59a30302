"""f-, h-, g- and m-vectors, pseudopowers and stackedness tests."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .complex import (
    BallDecomposition,
    SimplicialComplex,
    iter_subsets,
    m_vector,
    neighborliness,
)


def macaulay_representation(m: int, k: int) -> list[tuple[int, int]]:
    """The k-binomial expansion of m as a list of (a_j, j), j decreasing."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    out = []
    j = k
    while m > 0 and j > 0:
        a = j
        while comb(a + 1, j) <= m:
            a += 1
        out.append((a, j))
        m -= comb(a, j)
        j -= 1
    return out


def pseudopower_upper(m: int, k: int) -> int:
    """m^<k>."""
    return sum(comb(a + 1, j + 1) for a, j in macaulay_representation(m, k))


def pseudopower_lower(m: int, k: int) -> int:
    """m_<k>."""
    return sum(comb(a - 1, j - 1) for a, j in macaulay_representation(m, k))


def h_from_f(f: Sequence[int], d: int | None = None) -> tuple[int, ...]:
    """h-vector from (f_{-1}, ..., f_{d-1}); d defaults to len(f) - 1."""
    if d is None:
        d = len(f) - 1
    fv = list(f) + [0] * (d + 1 - len(f))
    return tuple(
        sum((-1) ** (j - i) * comb(d - i, d - j) * fv[i] for i in range(j + 1)) for j in range(d + 1)
    )


def f_from_h(h: Sequence[int]) -> tuple[int, ...]:
    d = len(h) - 1
    return tuple(sum(comb(d - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 1))


def g_from_h(h: Sequence[int]) -> tuple[int, ...]:
    d = len(h) - 1
    return (1,) + tuple(h[j] - h[j - 1] for j in range(1, d // 2 + 1))


def g_at(g: Sequence[int], j: int) -> int:
    """g_j, read as 0 beyond the stored range (the odd-d middle convention)."""
    return g[j] if 0 <= j < len(g) else 0


def is_eulerian(K: SimplicialComplex) -> bool:
    """Every face link (including the link of the empty face) has the Euler
    characteristic of a sphere of the right dimension.

    With d = dim K + 1 this is equivalent to: for every face F, the sum of
    (-1)^|G| over faces G containing F equals (-1)^d.
    """
    d = K.dim + 1
    acc: dict[int, int] = {}
    for size, level in enumerate(K.face_levels):
        sign = -1 if size % 2 else 1
        for g in level:
            for sub in iter_subsets(g):
                acc[sub] = acc.get(sub, 0) + sign
    target = (-1) ** d
    return all(v == target for v in acc.values())


@dataclass(frozen=True)
class FaceProfile:
    f: tuple[int, ...]
    h: tuple[int, ...]
    g: tuple[int, ...]
    m: tuple[int, ...]
    d: int
    n: int
    neighborliness: int
    is_flag: bool
    is_eulerian: bool

    @property
    def is_neighborly(self) -> bool:
        return self.neighborliness >= self.d // 2

    def m_at(self, i: int) -> int:
        """m_i with m_i = 0 outside 1..d."""
        return self.m[i - 1] if 1 <= i <= self.d else 0


def face_profile(K: SimplicialComplex, eulerian: bool = True) -> FaceProfile:
    """All the numerical data of K; ``eulerian=False`` skips the link scan."""
    f = K.f_vector
    d = K.dim + 1
    h = h_from_f(f, d)
    m = m_vector(K)
    return FaceProfile(
        f=f,
        h=h,
        g=g_from_h(h),
        m=m,
        d=d,
        n=K.n,
        neighborliness=neighborliness(K),
        is_flag=all(x == 0 for x in m[1:]),
        is_eulerian=is_eulerian(K) if eulerian else False,
    )


def dehn_sommerville_check(p: FaceProfile) -> bool:
    return all(p.h[i] == p.h[p.d - i] for i in range(p.d + 1))


def sphere_stacked_degree(p: FaceProfile) -> int | None:
    """Smallest i <= floor(d/2) - 1 for which the sphere is i-stacked, or None.

    Decided by g_{i+1} = 0 and cross-checked against m_{d-i} = g_i; the two
    characterizations must agree.
    """
    found = None
    for i in range(0, p.d // 2):
        by_g = g_at(p.g, i + 1) == 0
        by_m = p.m_at(p.d - i) == g_at(p.g, i)
        if by_g != by_m:
            raise ValueError(
                f"stackedness criteria disagree at i={i}: g_{i + 1}={g_at(p.g, i + 1)}, "
                f"m_{p.d - i}={p.m_at(p.d - i)}, g_{i}={g_at(p.g, i)}"
            )
        if by_g and found is None:
            found = i
    return found


def ball_is_i_stacked(B: BallDecomposition, i: int) -> bool:
    """No interior face of dimension <= dim(B) - i - 1."""
    d = B.dim
    return all(len(f) - 1 >= d - i for f in B.minimal_interior_faces)


def ball_exactly_i_stacked(B: BallDecomposition, i: int) -> bool:
    """All minimal interior faces have dimension dim(B) - i."""
    d = B.dim
    return all(len(f) - 1 == d - i for f in B.minimal_interior_faces)


def ball_stacked_degree(B: BallDecomposition) -> int:
    """Least i with B i-stacked."""
    d = B.dim
    return max(d - (len(f) - 1) for f in B.minimal_interior_faces)
