"""Reduced simplicial homology and sphere recognition."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .complex import SimplicialComplex, bits, ridge_counts

FIELDS = ("gf2", "rational")


def _boundary_rows(K: SimplicialComplex, size: int) -> tuple[list[int], dict[int, int]]:
    """Faces of the given cardinality, and an index map for faces one smaller."""
    levels = K.face_levels
    lower = sorted(levels[size - 1])
    return sorted(levels[size]), {m: i for i, m in enumerate(lower)}


def _rank_gf2(rows: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            low = row & -row
            p = pivots.get(low)
            if p is None:
                pivots[low] = row
                break
            row ^= p
    return len(pivots)


def _rank_rational(rows: Iterable[dict[int, int]]) -> int:
    # sparse fraction-free elimination; rows are normalized by their content
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = dict(row)
        while row:
            col = min(row)
            p = pivots.get(col)
            if p is None:
                pivots[col] = row
                break
            a, b = p[col], row[col]
            new: dict[int, int] = {}
            for c, v in row.items():
                new[c] = v * a
            for c, v in p.items():
                x = new.get(c, 0) - v * b
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            if new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
            row = new
    return len(pivots)


def boundary_rank(K: SimplicialComplex, size: int, field: str = "gf2") -> int:
    """Rank of the boundary map from faces of ``size`` vertices to faces of ``size-1``."""
    if size < 1 or size >= len(K.face_levels):
        return 0
    faces, index = _boundary_rows(K, size)
    if field == "gf2":
        rows = []
        for m in faces:
            r = 0
            rest = m
            while rest:
                low = rest & -rest
                r |= 1 << index[m ^ low]
                rest ^= low
            rows.append(r)
        return _rank_gf2(rows)
    if field == "rational":
        srows = []
        for m in faces:
            r = {}
            rest = m
            sign = 1
            while rest:
                low = rest & -rest
                r[index[m ^ low]] = sign
                sign = -sign
                rest ^= low
            srows.append(r)
        return _rank_rational(srows)
    raise ValueError(f"unknown field {field!r}; expected one of {FIELDS}")


def betti(K: SimplicialComplex, field: str = "gf2") -> tuple[int, ...]:
    """Reduced Betti numbers (b_0, ..., b_dim)."""
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}; expected one of {FIELDS}")
    f = K.f_vector
    top = K.dim + 1
    ranks = [boundary_rank(K, s, field) for s in range(top + 2)]
    return tuple(f[i + 1] - ranks[i + 1] - ranks[i + 2] for i in range(top))


def euler_reduced(K: SimplicialComplex) -> int:
    return sum((c if s % 2 else -c) for s, c in enumerate(K.f_vector))


def _connected(K: SimplicialComplex) -> bool:
    masks = K.masks
    seen = masks[0]
    changed = True
    remaining = list(masks[1:])
    while changed and remaining:
        changed = False
        rest = []
        for m in remaining:
            if m & seen:
                seen |= m
                changed = True
            else:
                rest.append(m)
        remaining = rest
    return not remaining


def collapses_to_point(faces: set[int]) -> bool:
    """Greedy elementary collapses on a downward-closed family of nonempty faces."""
    cof: dict[int, set[int]] = {m: set() for m in faces}
    for m in faces:
        rest = m
        while rest:
            low = rest & -rest
            sub = m ^ low
            if sub:
                cof[sub].add(m)
            rest ^= low
    alive = set(faces)
    queue = deque(m for m in faces if len(cof[m]) == 1)
    while queue:
        s = queue.popleft()
        if s not in alive or len(cof[s]) != 1:
            continue
        (t,) = cof[s]
        if cof[t]:
            continue
        for x in (s, t):
            alive.discard(x)
            rest = x
            while rest:
                low = rest & -rest
                sub = x ^ low
                rest ^= low
                if sub and sub in alive:
                    cof[sub].discard(x)
                    left = len(cof[sub])
                    if left == 1:
                        queue.append(sub)
                    elif left == 0:
                        # sub became maximal, so its own facets may now be free
                        r2 = sub
                        while r2:
                            lo2 = r2 & -r2
                            s2 = sub ^ lo2
                            r2 ^= lo2
                            if s2 and s2 in alive and len(cof[s2]) == 1:
                                queue.append(s2)
    return len(alive) == 1


def _all_faces(K: SimplicialComplex) -> set[int]:
    out: set[int] = set()
    for lv in K.face_levels[1:]:
        out |= lv
    return out


def is_homology_sphere(K: SimplicialComplex, field: str = "gf2") -> bool:
    """Reduced homology equals that of a sphere of dimension dim K."""
    d = K.dim
    if d == 0:
        return K.n == 2
    faces = _all_faces(K)
    top = K.masks[0]
    if len(K.masks) == d + 2 and K.n == d + 2 and K.is_pure:
        return True  # boundary of a simplex
    if K.is_pure:
        faces.discard(top)
        if collapses_to_point(faces):
            return True
    b = betti(K, field)
    return all(x == 0 for x in b[:-1]) and b[-1] == 1


@dataclass(frozen=True)
class SphereCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _quick(K: SimplicialComplex) -> SphereCheck:
    d = K.dim
    if not K.is_pure:
        return SphereCheck(False, "not pure")
    if d == 0:
        return SphereCheck(K.n == 2, "" if K.n == 2 else "a 0-sphere has exactly two points")
    for r, c in ridge_counts(K).items():
        if c != 2:
            return SphereCheck(False, f"ridge {bits(r)} lies in {c} facets")
    if not _connected(K):
        return SphereCheck(False, "not connected")
    chi = euler_reduced(K)
    if chi != (-1) ** d:
        return SphereCheck(False, f"reduced Euler characteristic {chi} != {(-1) ** d}")
    return SphereCheck(True)


def _link_masks(K: SimplicialComplex, F: int) -> list[int]:
    return [m ^ F for m in K.masks if m & F == F]


def _small_link_ok(masks: list[int], dim: int) -> bool:
    """Links of dimension 1 and 2 checked combinatorially."""
    L = SimplicialComplex.from_masks(masks)
    if L.dim != dim or not L.is_pure:
        return False
    if dim == 1:
        deg: dict[int, int] = {}
        for m in masks:
            for v in bits(m):
                deg[v] = deg.get(v, 0) + 1
        return all(x == 2 for x in deg.values()) and _connected(L)
    q = _quick(L)
    return q.ok


def verify_sphere(K: SimplicialComplex, level: str = "quick", field: str = "gf2") -> SphereCheck:
    """Recognize (homology) spheres.

    ``quick``: pure, every ridge in exactly two facets, connected, and the
    reduced Euler characteristic of a sphere.
    ``full``: additionally K is a homology sphere and so is the link of every
    face (a homology manifold with sphere homology).
    """
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    q = _quick(K)
    if not q or level == "quick":
        return q
    d = K.dim
    if not is_homology_sphere(K, field):
        return SphereCheck(False, "homology differs from a sphere")
    levels = K.face_levels
    for size in range(1, d):
        link_dim = d - size
        for F in sorted(levels[size]):
            masks = _link_masks(K, F)
            if link_dim <= 2:
                ok = _small_link_ok(masks, link_dim)
            else:
                L = SimplicialComplex.from_masks(masks)
                ok = L.dim == link_dim and L.is_pure and _quick(L).ok and is_homology_sphere(L, field)
            if not ok:
                return SphereCheck(False, f"link of {bits(F)} is not a homology sphere")
    return SphereCheck(True)
