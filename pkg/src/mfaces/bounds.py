"""Exact evaluators for upper and lower bounds on m-numbers."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .vectors import FaceProfile, f_from_h, g_at, pseudopower_lower, pseudopower_upper


@dataclass(frozen=True)
class BoundReport:
    """One inequality evaluated exactly.

    ``kind`` is "upper" or "lower".  ``observed``, ``satisfied`` and ``slack``
    are None when no observed value was supplied.
    """

    name: str
    kind: str
    index: int
    value: Fraction
    observed: int | None = None
    satisfied: bool | None = None
    slack: Fraction | None = None

    @classmethod
    def evaluate(cls, name: str, kind: str, index: int, value, observed: int | None) -> BoundReport:
        value = Fraction(value)
        if observed is None:
            return cls(name, kind, index, value)
        slack = value - observed if kind == "upper" else observed - value
        return cls(name, kind, index, value, observed, slack >= 0, slack)


def _check_g(g: Sequence[int], d: int) -> list[int]:
    if d < 1:
        raise ValueError("d must be >= 1")
    g = [int(x) for x in g]
    if len(g) != d // 2 + 1:
        raise ValueError(f"g-vector for d={d} must have {d // 2 + 1} entries, got {len(g)}")
    if g[0] != 1:
        raise ValueError("g_0 must be 1")
    if any(x < 0 for x in g):
        raise ValueError("g-vector entries must be non-negative")
    return g


def m_upper_bounds(g: Sequence[int], d: int, m: Sequence[int] | None = None) -> list[BoundReport]:
    """Upper bounds on m_k and m_{d-k} from the g-vector of a (d-1)-sphere.

    For 1 <= k <= ceil(d/2) - 1:
        m_k     <= g_k^<k> - g_{k+1}
        m_{d-k} <= g_k - (g_{k+1})_<k+1>
    and, when d = 2k, m_k <= g_k^<k> + g_k.  g_j is read as 0 past floor(d/2).
    """
    g = _check_g(g, d)
    if m is not None and len(m) != d:
        raise ValueError(f"m-vector must have {d} entries")

    def obs(i: int) -> int | None:
        return None if m is None else m[i - 1]

    reports = []
    for k in range(1, (d + 1) // 2):
        gk, gk1 = g_at(g, k), g_at(g, k + 1)
        reports.append(
            BoundReport.evaluate(f"m{k}<=g{k}^<{k}>-g{k + 1}", "upper", k, pseudopower_upper(gk, k) - gk1, obs(k))
        )
        reports.append(
            BoundReport.evaluate(
                f"m{d - k}<=g{k}-(g{k + 1})_<{k + 1}>", "upper", d - k, gk - pseudopower_lower(gk1, k + 1), obs(d - k)
            )
        )
    if d % 2 == 0:
        k = d // 2
        gk = g_at(g, k)
        reports.append(BoundReport.evaluate(f"m{k}<=g{k}^<{k}>+g{k}", "upper", k, pseudopower_upper(gk, k) + gk, obs(k)))
    return reports


def goodman_bound(n: int, f1: int) -> Fraction:
    """Lower bound on the number of triangles of a graph with n vertices and f1 edges."""
    if n <= 0:
        raise ValueError("n must be positive")
    return Fraction(f1 * (4 * f1 - n * n), 3 * n)


def generalized_mk_bound(k: int, n: int, f_km1: int, f_k: int) -> Fraction:
    """Lower bound on m_k for any complex of dimension >= k-1 on n vertices."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if n < k:
        raise ValueError("need n >= k")
    quad = Fraction(k * k, (k + 1) * comb(n, k - 1)) * f_km1 * f_km1
    lin = Fraction(n * (k - 1) - k * (k - 2), k + 1) * f_km1
    return quad - lin - f_k


def cyclic_h(d: int, n: int) -> tuple[int, ...]:
    if n <= d:
        raise ValueError("need n > d")
    half = [comb(n - d + i - 1, i) for i in range(d // 2 + 1)]
    return tuple(half[i] if i <= d // 2 else half[d - i] for i in range(d + 1))


def cyclic_f(d: int, n: int) -> tuple[int, ...]:
    """f-vector (f_{-1}, ..., f_{d-1}) of the cyclic d-polytope with n vertices."""
    return f_from_h(cyclic_h(d, n))


def nearly_neighborly_f_k(k: int, d: int, n: int, f_km1: int) -> int:
    """f_k of a nearly neighborly Eulerian (d-1)-complex, d in {2k, 2k+1}."""
    if d not in (2 * k, 2 * k + 1):
        raise ValueError(f"d must be 2k or 2k+1 (k={k}), got {d}")
    coeff = d // 2 + 1 + (-1) ** (d - 1)
    return cyclic_f(d, n)[k + 1] - coeff * (comb(n, k) - f_km1)


def nearly_neighborly_bound(k: int, d: int, n: int, f_km1: int) -> Fraction:
    """Lower bound on m_k of a nearly neighborly Eulerian (d-1)-complex in terms of f_{k-1} alone."""
    return generalized_mk_bound(k, n, f_km1, nearly_neighborly_f_k(k, d, n, f_km1))


def eulerian_m2_bound(d: int, n: int, f1: int) -> Fraction:
    """Lower bound on m_2 of a 3- or 4-dimensional Eulerian complex."""
    if d == 4:
        return goodman_bound(n, f1) - 2 * (f1 - n)
    if d == 5:
        return goodman_bound(n, f1) - (4 * f1 - 10 * n + 20)
    raise ValueError(f"only d in {{4, 5}} is supported, got {d}")


def flag_edge_cap(d: int, n: int) -> Fraction:
    """Strict upper bound on f_1 of a flag Eulerian (d-1)-complex, d in {4, 5}."""
    if d == 4:
        return Fraction(n * n, 4) + Fraction(3 * n, 2)
    if d == 5:
        return Fraction(n * n, 4) + 3 * n
    raise ValueError(f"only d in {{4, 5}} is supported, got {d}")


def two_sphere_m_admissible(n: int, m2: int) -> bool:
    """Whether some simplicial 2-sphere with n vertices has exactly m2 missing triangles."""
    if n < 4:
        raise ValueError("a 2-sphere has at least 4 vertices")
    g1 = n - 4
    return 0 <= m2 <= g1 - 2 or m2 == g1


def lower_bound_reports(p: FaceProfile) -> list[BoundReport]:
    """Generalized clique bound on m_k for 2 <= k <= floor(d/2), plus the
    Eulerian m_2 bound when it applies."""
    out = []
    for k in range(2, p.d // 2 + 1):
        if k + 1 >= len(p.f):
            break
        value = generalized_mk_bound(k, p.n, p.f[k], p.f[k + 1])
        out.append(BoundReport.evaluate(f"m{k}>=clique(f{k - 1},f{k})", "lower", k, value, p.m_at(k)))
    if p.is_eulerian and p.d in (4, 5):
        out.append(BoundReport.evaluate("m2>=eulerian(f1)", "lower", 2, eulerian_m2_bound(p.d, p.n, p.f[2]), p.m_at(2)))
    return out


def all_bound_reports(p: FaceProfile) -> list[BoundReport]:
    return m_upper_bounds(p.g, p.d, p.m) + lower_bound_reports(p)
