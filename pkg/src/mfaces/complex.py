"""Simplicial complexes given by their facets.

Faces are handled internally as integer bitmasks (bit ``v`` set for vertex
label ``v``), so subset tests are single ``&`` operations and any number of
labels is supported.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

Face = tuple[int, ...]


def to_mask(face: Iterable[int]) -> int:
    mask = 0
    for v in face:
        if v <= 0:
            raise ValueError(f"vertex labels must be positive integers, got {v}")
        mask |= 1 << v
    return mask


def bits(mask: int) -> Face:
    """Sorted vertex labels of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _remove_dominated(masks: Iterable[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        size = m.bit_count()
        if not any(k.bit_count() > size and m & k == m for k in kept):
            kept.append(m)
    return kept


class SimplicialComplex:
    """An immutable simplicial complex stored by its facets.

    Equality and hashing are by facet set; labels are never renamed.
    """

    __slots__ = ("_masks", "_vmask", "__dict__")

    def __init__(self, facets: Iterable[Iterable[int]]):
        masks = []
        for f in facets:
            m = to_mask(f)
            if m == 0:
                raise ValueError("facets must be nonempty")
            masks.append(m)
        if not masks:
            raise ValueError("empty complex not supported")
        self._init_masks(masks)

    def _init_masks(self, masks: Iterable[int]) -> None:
        kept = _remove_dominated(masks)
        kept.sort(key=bits)
        self._masks = tuple(kept)
        vmask = 0
        for m in kept:
            vmask |= m
        self._vmask = vmask

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> SimplicialComplex:
        masks = [m for m in masks]
        if not masks or any(m == 0 for m in masks):
            raise ValueError("empty complex not supported")
        obj = cls.__new__(cls)
        obj._init_masks(masks)
        return obj

    # -- basic data -------------------------------------------------------

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def vertex_mask(self) -> int:
        return self._vmask

    @cached_property
    def facets(self) -> tuple[Face, ...]:
        return tuple(bits(m) for m in self._masks)

    @cached_property
    def vertices(self) -> Face:
        return bits(self._vmask)

    @property
    def n(self) -> int:
        return self._vmask.bit_count()

    @cached_property
    def dim(self) -> int:
        return max(m.bit_count() for m in self._masks) - 1

    @cached_property
    def is_pure(self) -> bool:
        size = self.dim + 1
        return all(m.bit_count() == size for m in self._masks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, dim={self.dim}, facets={len(self._masks)})"

    def __len__(self) -> int:
        return len(self._masks)

    # -- faces --------------------------------------------------------------

    @cached_property
    def face_levels(self) -> tuple[frozenset[int], ...]:
        """``face_levels[s]`` is the set of face masks of cardinality ``s``."""
        top = self.dim + 1
        levels: list[set[int]] = [set() for _ in range(top + 1)]
        for m in self._masks:
            levels[m.bit_count()].add(m)
        for s in range(top, 1, -1):
            lower = levels[s - 1]
            for m in levels[s]:
                rest = m
                while rest:
                    low = rest & -rest
                    lower.add(m ^ low)
                    rest ^= low
        levels[0] = {0}
        return tuple(frozenset(lv) for lv in levels)

    def faces(self, size: int | None = None) -> list[Face]:
        """Faces as sorted tuples, either of one cardinality or all of them."""
        levels = self.face_levels
        if size is None:
            sel: Iterable[int] = (m for lv in levels for m in lv)
        elif 0 <= size < len(levels):
            sel = levels[size]
        else:
            return []
        return sorted((bits(m) for m in sel), key=lambda f: (len(f), f))

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """(f_{-1}, f_0, ..., f_{dim})."""
        return tuple(len(lv) for lv in self.face_levels)

    def is_face_mask(self, mask: int) -> bool:
        size = mask.bit_count()
        levels = self.face_levels
        return size < len(levels) and mask in levels[size]

    def facets_containing(self, mask: int) -> list[int]:
        return [m for m in self._masks if m & mask == mask]

    # -- derived complexes ----------------------------------------------------

    def relabel(self, mapping: dict[int, int]) -> SimplicialComplex:
        return SimplicialComplex([mapping.get(v, v) for v in f] for f in self.facets)


def from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex(facets)


def simplex(vertices: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex([tuple(vertices)])


def simplex_boundary(vertices: Sequence[int]) -> SimplicialComplex:
    vs = tuple(vertices)
    if len(vs) < 2:
        raise ValueError("boundary of a 0-simplex is the empty-face complex")
    return SimplicialComplex(combinations(vs, len(vs) - 1))


def polygon(vertices: Sequence[int]) -> SimplicialComplex:
    vs = tuple(vertices)
    if len(vs) < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    return SimplicialComplex((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def octahedron() -> SimplicialComplex:
    """Boundary of the cross-polytope on antipodal pairs (1,2), (3,4), (5,6)."""
    return SimplicialComplex((a, b, c) for a in (1, 2) for b in (3, 4) for c in (5, 6))


def is_face(K: SimplicialComplex, F: Iterable[int]) -> bool:
    mask = to_mask(F)
    return any(mask & m == mask for m in K.masks)


def _check_face(K: SimplicialComplex, mask: int) -> None:
    if not any(mask & m == mask for m in K.masks):
        raise ValueError(f"{bits(mask)} is not a face")


def link(K: SimplicialComplex, F: Iterable[int]) -> SimplicialComplex:
    mask = to_mask(F)
    if mask == 0:
        return K
    _check_face(K, mask)
    rest = [m ^ mask for m in K.masks if m & mask == mask]
    if not any(rest):
        raise ValueError(f"link of the facet {bits(mask)} is the empty-face complex")
    return SimplicialComplex.from_masks(m for m in rest if m)


def star(K: SimplicialComplex, F: Iterable[int]) -> SimplicialComplex:
    mask = to_mask(F)
    _check_face(K, mask)
    return SimplicialComplex.from_masks(m for m in K.masks if m & mask == mask)


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    if K1.vertex_mask & K2.vertex_mask:
        raise ValueError("join requires disjoint vertex sets")
    return SimplicialComplex.from_masks(a | b for a in K1.masks for b in K2.masks)


def cone(K: SimplicialComplex, apex: int) -> SimplicialComplex:
    return join(K, simplex([apex]))


def induced(K: SimplicialComplex, W: Iterable[int]) -> SimplicialComplex:
    wmask = to_mask(W)
    parts = [m & wmask for m in K.masks]
    if not any(parts):
        raise ValueError("induced subcomplex is empty")
    return SimplicialComplex.from_masks(p for p in parts if p)


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise ValueError("skeleton dimension must be >= 0")
    size = k + 1
    out: set[int] = set()
    for m in K.masks:
        if m.bit_count() <= size:
            out.add(m)
        else:
            out.update(to_mask(c) for c in combinations(bits(m), size))
    return SimplicialComplex.from_masks(out)


def missing_face_masks(K: SimplicialComplex) -> list[set[int]]:
    """Missing faces grouped by cardinality: entry ``s`` holds those of size ``s``."""
    levels = K.face_levels
    top = len(levels)  # dim + 2
    vertices = K.vertices
    out: list[set[int]] = [set() for _ in range(top + 1)]
    for s in range(2, top + 1):
        below = levels[s - 1]
        here = levels[s] if s < len(levels) else frozenset()
        found = out[s]
        for g in below:
            hi = g.bit_length() - 1
            for v in vertices:
                if v <= hi:
                    continue
                cand = g | (1 << v)
                if cand in here:
                    continue
                ok = True
                rest = g
                while rest:
                    low = rest & -rest
                    if cand ^ low not in below:
                        ok = False
                        break
                    rest ^= low
                if ok:
                    found.add(cand)
    return out


def missing_faces(K: SimplicialComplex) -> list[Face]:
    """All missing faces, ordered by cardinality then lexicographically."""
    groups = missing_face_masks(K)
    return [bits(m) for grp in groups for m in sorted(grp, key=bits)]


def m_vector(K: SimplicialComplex) -> tuple[int, ...]:
    """(m_1, ..., m_d) where m_i counts missing faces with i+1 vertices."""
    groups = missing_face_masks(K)
    d = K.dim + 1
    return tuple(len(groups[i + 1]) if i + 1 < len(groups) else 0 for i in range(1, d + 1))


def from_missing_faces(vertices: Iterable[int], missing: Iterable[Iterable[int]]) -> SimplicialComplex:
    """The complex on ``vertices`` whose faces are the sets containing no missing face."""
    vs = sorted(set(vertices))
    miss = [to_mask(f) for f in missing]
    # grow maximal faces: depth-first over vertices in order
    facets: list[int] = []

    def extend(mask: int, start: int) -> None:
        grew = False
        for idx in range(start, len(vs)):
            cand = mask | (1 << vs[idx])
            if any(mm & cand == mm for mm in miss):
                continue
            grew = True
            extend(cand, idx + 1)
        if not grew:
            facets.append(mask)

    extend(0, 0)
    return SimplicialComplex.from_masks(f for f in facets if f)


def ridge_counts(K: SimplicialComplex) -> dict[int, int]:
    counts: dict[int, int] = {}
    for m in K.masks:
        rest = m
        while rest:
            low = rest & -rest
            r = m ^ low
            counts[r] = counts.get(r, 0) + 1
            rest ^= low
    return counts


@dataclass(frozen=True)
class BallDecomposition:
    ball: SimplicialComplex
    boundary: SimplicialComplex
    interior_faces: tuple[Face, ...]
    minimal_interior_faces: tuple[Face, ...]

    @property
    def dim(self) -> int:
        return self.ball.dim


def ball_decomposition(B: SimplicialComplex) -> BallDecomposition:
    if not B.is_pure:
        raise ValueError("ball must be pure")
    counts = ridge_counts(B)
    bad = [r for r, c in counts.items() if c > 2]
    if bad:
        raise ValueError(f"not a pseudomanifold with boundary: ridge {bits(bad[0])} lies in {counts[bad[0]]} facets")
    bmasks = [r for r, c in counts.items() if c == 1 and r]
    if not bmasks:
        raise ValueError("not a ball: empty boundary")
    boundary = SimplicialComplex.from_masks(bmasks)
    blevels = boundary.face_levels
    interior: list[int] = []
    for s, lv in enumerate(B.face_levels):
        for m in lv:
            if s >= len(blevels) or m not in blevels[s]:
                interior.append(m)
    interior_set = set(interior)
    minimal = []
    for m in interior:
        rest = m
        is_min = True
        while rest:
            low = rest & -rest
            if m ^ low in interior_set:
                is_min = False
                break
            rest ^= low
        if is_min:
            minimal.append(m)
    key = lambda f: (len(f), f)  # noqa: E731
    return BallDecomposition(
        ball=B,
        boundary=boundary,
        interior_faces=tuple(sorted((bits(m) for m in interior), key=key)),
        minimal_interior_faces=tuple(sorted((bits(m) for m in minimal), key=key)),
    )


def boundary(B: SimplicialComplex) -> SimplicialComplex:
    return ball_decomposition(B).boundary


def is_k_neighborly(K: SimplicialComplex, k: int, vertices: Iterable[int] | None = None) -> bool:
    """Every k-subset of the vertex set (default V(K)) is a face."""
    if vertices is not None and to_mask(vertices) != K.vertex_mask:
        return False
    levels = K.face_levels
    if k >= len(levels):
        return False
    return len(levels[k]) == comb(K.n, k)


def neighborliness(K: SimplicialComplex) -> int:
    """Largest i with f_{i-1} = C(n, i)."""
    n = K.n
    best = 0
    for i, lv in enumerate(K.face_levels):
        if i == 0:
            continue
        if len(lv) == comb(n, i):
            best = i
        else:
            break
    return best


def iter_subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0 and ``mask``."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
