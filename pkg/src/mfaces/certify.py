"""One-directional non-polytopality tests read off vertex links.

Each rule compares a number computed from some vertex link with the value
every polytopal sphere must have.  A mismatch certifies non-polytopality;
agreement proves nothing, so the default verdict is INCONCLUSIVE.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .complex import SimplicialComplex, bits, is_k_neighborly, link, missing_face_masks, neighborliness
from .homology import verify_sphere
from .vectors import face_profile, g_at, sphere_stacked_degree

NOT_POLYTOPAL = "NOT_POLYTOPAL"
INCONCLUSIVE = "INCONCLUSIVE"

RULE_LINK_COUNT = "link-m-count"
RULE_SINGLE_MISSING = "single-missing-face"
RULE_LINK_DIMENSION = "link-missing-dimension"


@dataclass(frozen=True)
class Certificate:
    verdict: str
    rule: str | None = None
    witness_vertex: int | None = None
    observed: int | None = None
    expected: int | None = None
    k: int | None = None
    n: int | None = None
    d: int | None = None
    reason: str = ""

    @property
    def is_certified(self) -> bool:
        return self.verdict == NOT_POLYTOPAL

    def describe(self) -> str:
        if not self.is_certified:
            return f"{self.verdict}: {self.reason}"
        return (
            f"{self.verdict} by {self.rule}: vertex {self.witness_vertex} has "
            f"{self.reason} = {self.observed}, expected {self.expected} (k={self.k}, n={self.n}, d={self.d})"
        )


def _m_count(K: SimplicialComplex, size: int) -> int:
    groups = missing_face_masks(K)
    return len(groups[size]) if size < len(groups) else 0


def _missing_sizes(K: SimplicialComplex) -> set[int]:
    return {s for s, grp in enumerate(missing_face_masks(K)) if grp}


def link_dimension_witness(K: SimplicialComplex, k: int) -> int | None:
    """First vertex whose link has missing faces only in dimension k-1."""
    for v in K.vertices:
        if _missing_sizes(link(K, [v])) == {k}:
            return v
    return None


def nonpolytopality_certificate(K: SimplicialComplex, k: int | None = None) -> Certificate:
    """Try the three link rules in turn; raise if K is not a sphere."""
    res = verify_sphere(K, "quick")
    if not res:
        raise ValueError(f"input is not a sphere: {res.reason}")
    d = K.dim + 1
    n = K.n
    if k is None:
        k = d // 2
    elif k != d // 2:
        raise ValueError(f"k={k} does not match a {d - 1}-sphere (expected k={d // 2})")
    nb = neighborliness(K)
    ctx = dict(k=k, n=n, d=d)

    if d == 2 * k and k >= 2 and n >= 2 * k + 2:
        expected = comb(n - k - 3, k - 1)
        if nb >= k:
            for v in K.vertices:
                obs = _m_count(link(K, [v]), k + 1)
                if obs != expected:
                    return Certificate(NOT_POLYTOPAL, RULE_LINK_COUNT, v, obs, expected, reason=f"m_{k}(lk v)", **ctx)
        elif nb == k - 1 and len(K.face_levels[k]) == comb(n, k) - 1:
            F = next(iter(missing_face_masks(K)[k]))
            for v in bits(F):
                obs = _m_count(link(K, [v]), k + 1)
                if obs != expected - 1:
                    return Certificate(
                        NOT_POLYTOPAL, RULE_SINGLE_MISSING, v, obs, expected - 1, reason=f"m_{k}(lk v)", **ctx
                    )

    if k >= 2 and nb >= k:
        v = link_dimension_witness(K, k)
        if v is not None:
            # a polytopal link needs a missing face of dimension >= k
            return Certificate(
                NOT_POLYTOPAL, RULE_LINK_DIMENSION, v, 0, 1,
                reason=f"number of missing faces of dimension >= {k} in lk v", **ctx,
            )

    return Certificate(INCONCLUSIVE, reason="every vertex link agrees with the polytopal values", **ctx)


@dataclass(frozen=True)
class LinkReport:
    vertex: int
    neighborly_ok: bool
    stacked_degree: int | None
    stacked_ok: bool | None
    m_mid: int | None = None
    g_mid: int | None = None

    @property
    def passes(self) -> bool:
        return self.neighborly_ok and self.stacked_ok is not False


@dataclass(frozen=True)
class LinkCheck:
    d: int
    links: tuple[LinkReport, ...] = field(default=())

    @property
    def failing(self) -> tuple[int, ...]:
        return tuple(r.vertex for r in self.links if not r.passes)

    @property
    def passes(self) -> bool:
        return not self.failing


def vertex_link_check(K: SimplicialComplex) -> LinkCheck:
    """Vertex links of a polytopal neighborly (d-1)-sphere are
    (floor(d/2)-1)-neighborly on V minus v and (ceil(d/2)-1)-stacked.

    Stackedness is decidable from face numbers only when d is even: a
    (d-2)-sphere is (d/2-1)-stacked iff m_{d/2} = g_{d/2-1}.  For odd d the
    stacked clause is reported as None.
    """
    d = K.dim + 1
    need = d // 2 - 1
    out = []
    for v in K.vertices:
        L = link(K, [v])
        rest = [u for u in K.vertices if u != v]
        nb_ok = is_k_neighborly(L, need, rest)
        p = face_profile(L, eulerian=False)
        deg = sphere_stacked_degree(p)
        if d % 2 == 0 and d >= 4:
            i = d // 2 - 1
            m_mid, g_mid = p.m_at(p.d - i), g_at(p.g, i)
            out.append(LinkReport(v, nb_ok, deg, m_mid == g_mid, m_mid, g_mid))
        else:
            out.append(LinkReport(v, nb_ok, deg, None))
    return LinkCheck(d, tuple(out))
