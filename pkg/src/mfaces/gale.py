"""Combinatorial Gale diagrams of simplicial d-polytopes with d+3 vertices.

A diagram with N diameters is stored as its 2N diameter ends in cyclic order;
end p and end p+N are antipodal.  Each end carries a (possibly empty) tuple of
vertex labels, the diagram points sitting at that direction.  Only the cyclic
order matters, so every question is answered exactly from positions.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .complex import SimplicialComplex, ridge_counts


@dataclass(frozen=True)
class GaleCircle:
    ends: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        ends = tuple(tuple(e) for e in self.ends)
        object.__setattr__(self, "ends", ends)
        if len(ends) < 2 or len(ends) % 2:
            raise ValueError("a diagram needs an even positive number of diameter ends")
        N = len(ends) // 2
        for p in range(N):
            if ends[p] and ends[p + N]:
                raise ValueError(f"diameter {p} has points at both ends (not simplicial)")
            if not ends[p] and not ends[p + N]:
                raise ValueError(f"diameter {p} carries no points")
        labels = [v for e in ends for v in e]
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct")

    @property
    def N(self) -> int:
        return len(self.ends) // 2

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(sorted(v for e in self.ends for v in e))

    @property
    def slots(self) -> tuple[int, ...]:
        """Occupied positions in cyclic order."""
        return tuple(p for p, e in enumerate(self.ends) if e)

    @property
    def multiplicity(self) -> dict[int, int]:
        return {p: len(e) for p, e in enumerate(self.ends) if e}

    def antipode(self, p: int) -> int:
        return (p + self.N) % (2 * self.N)

    @property
    def position_of(self) -> dict[int, int]:
        return {v: p for p, e in enumerate(self.ends) for v in e}

    @property
    def dimension(self) -> int:
        """Dimension d of the polytope (number of points minus 3)."""
        return len(self.labels) - 3


def origin_in_relint(positions: Iterable[int], N: int) -> bool:
    """Whether the origin lies in the relative interior of the convex hull of
    unit vectors at the given end positions (a multiset) of a circle with N
    diameters."""
    occ = set(positions)
    if not occ:
        raise ValueError("need at least one point")
    total = 2 * N
    if any(not 0 <= p < total for p in occ):
        raise ValueError(f"positions must lie in 0..{total - 1}")
    if len(occ) == 2:
        a, b = sorted(occ)
        if b - a == N:
            return True  # a segment through the origin
    # every open half-plane must contain a point; the binding half-planes are
    # the open arcs strictly between two antipodal ends
    for p in range(total):
        if not any((p + s) % total in occ for s in range(1, N)):
            return False
    return True


def diagram_neighborliness(G: GaleCircle) -> int:
    """Least number of diagram points in an open half-plane.

    The polytope is (t-1)-neighborly when this count is t.
    """
    total = 2 * G.N
    mult = [len(e) for e in G.ends]
    return min(sum(mult[(p + s) % total] for s in range(1, G.N)) for p in range(total))


def faces_from_diagram(G: GaleCircle) -> SimplicialComplex:
    """Boundary complex: F is a facet iff the origin is interior to the
    triangle of the three points outside F."""
    pos = G.position_of
    labels = G.labels
    everything = set(labels)
    facets = []
    for T in combinations(labels, 3):
        if origin_in_relint((pos[v] for v in T), G.N):
            facets.append(sorted(everything - set(T)))
    if not facets:
        raise ValueError("invalid diagram: no facets")
    K = SimplicialComplex(facets)
    if not K.is_pure or any(c != 2 for c in ridge_counts(K).values()) or K.vertex_mask != SimplicialComplex([labels]).vertex_mask:
        raise ValueError("invalid diagram")
    return K


def is_face_in_diagram(G: GaleCircle, F: Iterable[int]) -> bool:
    pos = G.position_of
    rest = set(G.labels) - set(F)
    if not rest:
        return False
    return origin_in_relint((pos[v] for v in rest), G.N)


def rotate(G: GaleCircle, shift: int) -> GaleCircle:
    total = len(G.ends)
    return GaleCircle(tuple(G.ends[(p - shift) % total] for p in range(total)))


def _drop_diameter(ends: list[tuple[int, ...]], p: int) -> list[tuple[int, ...]]:
    N = len(ends) // 2
    q = (p + N) % (2 * N)
    return [e for i, e in enumerate(ends) if i not in (p, q)]


def merge(G: GaleCircle, p: int, q: int) -> GaleCircle:
    """Move the points at end q onto end p and delete q's diameter.

    Legal only when no other diameter end lies strictly between p and q.
    """
    total = len(G.ends)
    p, q = p % total, q % total
    if not G.ends[p] or not G.ends[q] or p == q:
        raise ValueError("merge needs two distinct occupied ends")
    fwd = (q - p) % total
    if fwd == 1 or fwd == total - 1:
        ends = list(G.ends)
        ends[p] = tuple(sorted(ends[p] + ends[q]))
        return GaleCircle(tuple(_drop_diameter(ends, q)))
    # name a separating diameter along the shorter arc
    step = 1 if fwd <= total - fwd else -1
    between = (p + step) % total
    diam = between % G.N
    raise ValueError(f"ends {p} and {q} are separated by diameter {diam} (end {between})")


def restrict(G: GaleCircle, remove: Iterable[int]) -> GaleCircle:
    """Delete points; the result is the diagram of the link of the removed face."""
    gone = set(remove)
    if not gone <= set(G.labels):
        raise ValueError("cannot remove labels that are not in the diagram")
    ends = [tuple(v for v in e if v not in gone) for e in G.ends]
    N = len(ends) // 2
    keep = [p for p in range(N) if ends[p] or ends[p + N]]
    new = [ends[p] for p in keep] + [ends[p + N] for p in keep]
    return GaleCircle(tuple(new))


def relabel(G: GaleCircle, mapping: dict[int, int]) -> GaleCircle:
    return GaleCircle(tuple(tuple(sorted(mapping.get(v, v) for v in e)) for e in G.ends))


def qk_labels(i: int) -> dict[int, tuple[int, int]]:
    """Labels (x_j, y_j) for -i <= j <= i, following z_0, z_1, z_-1, ..., z_i, z_-i."""
    order = [0] + [s * j for j in range(1, i + 1) for s in (1, -1)]
    return {j: (2 * idx + 1, 2 * idx + 2) for idx, j in enumerate(order)}


def qk_diagram(k: int) -> GaleCircle:
    """Double points at the vertices of a regular (2i+1)-gon, k = 2i - 1."""
    if k < 1 or k % 2 == 0:
        raise ValueError("k must be a positive odd integer")
    i = (k + 1) // 2
    N = 2 * i + 1
    lab = qk_labels(i)
    ends: list[tuple[int, ...]] = [() for _ in range(2 * N)]
    for j, (x, y) in lab.items():
        ends[(2 * j) % (2 * N)] = (x, y)
    return GaleCircle(tuple(ends))


def qk_edges(k: int) -> list[tuple[int, int]]:
    """The edge sequence e_1, ..., e_k joining almost antipodal points."""
    if k < 1 or k % 2 == 0:
        raise ValueError("k must be a positive odd integer")
    i = (k + 1) // 2
    lab = qk_labels(i)

    def x(j: int) -> int:
        return lab[j][0]

    def y(j: int) -> int:
        return lab[j][1]

    seq = [(x(0), x(i)), (y(0), x(-i))]
    j = 1
    while len(seq) < k:
        seq += [
            (x(-j), y(i - j + 1)),
            (x(j), y(-(i - j + 1))),
            (y(-j), x(i - j)),
            (y(j), x(-(i - j))),
        ]
        j += 1
    return [tuple(sorted(e)) for e in seq[:k]]


def build_qk(k: int) -> tuple[SimplicialComplex, list[tuple[int, int]]]:
    """Boundary complex of Q_k and its edge sequence."""
    return faces_from_diagram(qk_diagram(k)), qk_edges(k)


def qk_missing_faces(k: int) -> list[tuple[int, ...]]:
    """The 2i+1 rotations of i consecutive double points."""
    i = (k + 1) // 2
    lab = qk_labels(i)
    N = 2 * i + 1
    # polygon vertex at angle index a (mod N) is z_j with j = a or a - N
    by_angle = {j % N: j for j in lab}
    out = []
    for start in range(N):
        pts = []
        for s in range(i):
            pts += lab[by_angle[(start + s) % N]]
        out.append(tuple(sorted(pts)))
    return sorted(out)


def diagram_from_positions(points: Sequence[tuple[int, int]], N: int) -> GaleCircle:
    """Build a diagram from (label, position) pairs."""
    ends: list[list[int]] = [[] for _ in range(2 * N)]
    for v, p in points:
        ends[p].append(v)
    return GaleCircle(tuple(tuple(sorted(e)) for e in ends))
