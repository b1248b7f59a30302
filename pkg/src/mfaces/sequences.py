"""Flip sequences of neighborly spheres starting at cyclic polytopes, and the
sewn spheres built from them."""
from __future__ import annotations

from math import comb

from .complex import SimplicialComplex, ball_decomposition, bits, link, missing_face_masks, neighborliness
from .generators import ball_D, cyclic_boundary
from .transforms import FlipMove, bistellar_flip, sew, verify_shelling


def missing_dim3_cyclic5(n: int) -> set[frozenset[int]]:
    """{1, i, j, n} with 3 <= i, j <= n-2 and j - i >= 2."""
    return {
        frozenset((1, i, j, n)) for i in range(3, n - 1) for j in range(i + 2, n - 1)
    }


def flip_set(n: int, i: int) -> set[frozenset[int]]:
    """S_{i-1}: the missing 3-faces through {1, i+1, n}, destroyed when Delta_i is formed."""
    return {frozenset((1, i + 1, j, n)) for j in range(i + 3, n - 1)}


def _missing_of_size(K: SimplicialComplex, size: int) -> set[frozenset[int]]:
    groups = missing_face_masks(K)
    if size >= len(groups):
        return set()
    return {frozenset(bits(m)) for m in groups[size]}


def delta_sequence(n: int, extended: bool = False) -> list[SimplicialComplex]:
    """Delta_1 = boundary of C(5,n) and Delta_i = flip of Delta_{i-1} on the star of {1,i+1,n}.

    Returns Delta_1, ..., Delta_{n-6}; with ``extended`` also Delta_{n-5}.
    Each member is checked to be neighborly with the predicted missing 3-faces.
    """
    if n < 8:
        raise ValueError("the flip sequence needs n >= 8")
    K = cyclic_boundary(5, n)
    M = missing_dim3_cyclic5(n)
    if _missing_of_size(K, 4) != M:
        raise AssertionError("missing 3-faces of the cyclic 4-sphere differ from the predicted set")
    out = [K]
    last = n - 5 if extended else n - 6
    for i in range(2, last + 1):
        move = FlipMove((1, i + 1, n), (2, i + 2, n - 1))
        try:
            K = bistellar_flip(K, move)
        except ValueError as exc:
            raise ValueError(f"flip {i} failed: {exc}") from exc
        if neighborliness(K) < 2:
            raise AssertionError(f"Delta_{i} is not neighborly")
        got = _missing_of_size(K, 4)
        if i <= n - 6:
            M = M - flip_set(n, i)
            if got != M or len(got) != comb(n - 4 - i, 2):
                raise AssertionError(f"Delta_{i} has unexpected missing 3-faces")
        elif got != {frozenset((2, n - 3, n - 2, n - 1))}:
            raise AssertionError(f"Delta_{i} has unexpected missing 3-faces {sorted(map(sorted, got))}")
        out.append(K)
    return out


def delta_link_facets(n: int, i: int) -> set[tuple[int, ...]]:
    """Predicted facets of the link of {1, n} in Delta_i."""
    facets = {(2, i + 2, n - 1), (2, n - 2, n - 1)}
    for j in range(i + 2, n - 2):
        facets.add((2, j, j + 1))
        facets.add((j, j + 1, n - 1))
    return facets


def delta_2k_m(k: int, n: int, i: int) -> int:
    return comb(n - k - 3, k) - sum(n - 2 * k - 1 - l for l in range(1, i))


def delta_sequence_2k(k: int, n: int, check_balls: bool = True) -> list[SimplicialComplex]:
    """Delta^{2k}_1 = boundary of C(2k+1, n); Delta^{2k}_i flips the star of
    {1, 3, ..., 2k-3} + {2k-3+i, n}.  Members are checked neighborly with the
    predicted m_{k+1}, and (with ``check_balls``) equal to the boundary of D^k_i.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if n < 2 * k + 4:
        raise ValueError(f"need n >= {2 * k + 4}")
    K = cyclic_boundary(2 * k + 1, n)
    out = []
    odd = list(range(1, 2 * k - 2, 2))
    for i in range(1, n - 2 * k - 1):
        if i > 1:
            A = tuple(sorted(odd + [2 * k - 3 + i, n]))
            try:
                B = link(K, A).vertices
                K = bistellar_flip(K, FlipMove(A, B))
            except ValueError as exc:
                raise ValueError(f"index {i}: {exc}") from exc
        if neighborliness(K) < k:
            raise AssertionError(f"index {i}: not neighborly")
        m = len(_missing_of_size(K, k + 2))
        if m != delta_2k_m(k, n, i):
            raise AssertionError(f"index {i}: m_{k + 1}={m}, predicted {delta_2k_m(k, n, i)}")
        if check_balls:
            bd = ball_decomposition(ball_D(k, i, n)).boundary
            if bd != K:
                raise AssertionError(f"index {i}: boundary of D^{k}_{i} differs from the flipped sphere")
        out.append(K)
    return out


def ball_Bk_order(n: int, k: int) -> list[tuple[int, ...]]:
    """Facets of B_k in their shelling order."""
    if not 2 <= k <= n - 4:
        raise ValueError(f"need 2 <= k <= n-4, got k={k}, n={n}")
    first = [(1, j, j + 1, j + 2, j + 3) for j in range(2, n - 3)]
    second = [(j, j + 1, j + 2, j + 3, n) for j in range(2, k + 1)]
    return first + second


def ball_Bk(n: int, k: int) -> SimplicialComplex:
    return SimplicialComplex(ball_Bk_order(n, k))


def ball_Bk_predicted_restrictions(n: int, k: int) -> list[tuple[int, ...]]:
    return [()] + [(v,) for v in range(6, n + 1)] + [(v, n) for v in range(6, k + 4)]


def ball_Bk_predicted_minimal_interior(n: int, k: int) -> list[tuple[int, ...]]:
    if k == 2:
        return [(2, 3, 4, 5)] + [(1, j, j + 1, j + 2) for j in range(3, n - 3)]
    return [(j, j + 1, j + 2) for j in range(3, k + 1)] + [(1, j, j + 1, j + 2) for j in range(k + 1, n - 3)]


def gamma_m3(n: int, i: int, k: int) -> int:
    return comb(n - 4 - i, 2) + (n - 5 if k == 2 else n - k - 4)


def gamma(n: int, i: int, k: int, deltas: list[SimplicialComplex] | None = None) -> SimplicialComplex:
    """Sew vertex n+1 onto B_k inside Delta_i."""
    if not 1 <= i <= n - 6:
        raise ValueError(f"need 1 <= i <= n-6, got i={i}")
    D = (deltas or delta_sequence(n))[i - 1]
    rec = verify_shelling(ball_Bk_order(n, k))
    if any(len(r) > 2 for r in rec.restriction_faces):
        raise AssertionError("B_k has a restriction face with more than two vertices")
    return sew(D, ball_Bk(n, k), n + 1)


def gamma_family(n: int) -> dict[tuple[int, int], SimplicialComplex]:
    deltas = delta_sequence(n)
    return {(i, k): gamma(n, i, k, deltas) for i in range(1, n - 5) for k in range(2, n - 3)}


