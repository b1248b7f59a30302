"""Bistellar flips, sewing, complements of balls and shelling checks."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import (
    Face,
    SimplicialComplex,
    ball_decomposition,
    bits,
    link,
    simplex_boundary,
    to_mask,
)
from .homology import verify_sphere


@dataclass(frozen=True)
class FlipMove:
    """Replace the induced subcomplex A * boundary(B) by boundary(A) * B."""

    A: Face
    B: Face

    def __post_init__(self):
        a, b = tuple(sorted(self.A)), tuple(sorted(self.B))
        if not a or not b:
            raise ValueError("both sides of a flip must be nonempty")
        if set(a) & set(b):
            raise ValueError("A and B must be disjoint")
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "B", b)

    @property
    def j(self) -> int:
        return len(self.A)

    def inverse(self) -> FlipMove:
        return FlipMove(self.B, self.A)


def _boundary_masks(face: Sequence[int]) -> list[int]:
    if len(face) == 1:
        return [0]
    return list(simplex_boundary(face).masks)


def bistellar_flip(K: SimplicialComplex, move: FlipMove, check: bool = True) -> SimplicialComplex:
    """Apply a bistellar flip to a (d-1)-sphere.

    The flip needs |A| + |B| = d + 1, the link of A equal to the boundary of
    the simplex on B, and B not a face (so A * boundary(B) is induced).  With
    |B| = 1 a new vertex is inserted; with |A| = 1 the vertex A is removed.
    """
    d = K.dim + 1
    A, B = move.A, move.B
    if len(A) + len(B) != d + 1:
        raise ValueError(f"|A|+|B| must be {d + 1} for a {d - 1}-sphere, got {len(A) + len(B)}")
    amask, bmask = to_mask(A), to_mask(B)
    if not any(m & amask == amask for m in K.masks):
        raise ValueError(f"A={A} is not a face")
    lk = link(K, A) if len(A) < d else None
    expected = set(_boundary_masks(B))
    got = set(lk.masks) if lk is not None else {0}
    if got != expected:
        raise ValueError(f"not induced: link of {A} is not the boundary of the simplex on {B}")
    if len(B) > 1 and any(m & bmask == bmask for m in K.masks):
        raise ValueError(f"not induced: B={B} is already a face")
    if len(B) == 1 and bmask & K.vertex_mask:
        raise ValueError(f"vertex {B[0]} to insert already exists")
    kept = [m for m in K.masks if m & amask != amask]
    added = [bmask | r for r in _boundary_masks(A)]
    out = SimplicialComplex.from_masks(kept + added)
    if check:
        res = verify_sphere(out, "quick")
        if not res:
            raise ValueError(f"flip output is not a sphere: {res.reason}")
    return out


def stack(K: SimplicialComplex, facet: Sequence[int], new_vertex: int) -> SimplicialComplex:
    """Stack a new vertex onto a facet (a flip with |B| = 1)."""
    return bistellar_flip(K, FlipMove(tuple(facet), (new_vertex,)))


def complement_ball(G: SimplicialComplex, D: SimplicialComplex) -> SimplicialComplex:
    """The subcomplex generated by the facets of G that are not facets of D."""
    gset = set(G.masks)
    if D.dim != G.dim or not D.is_pure or not G.is_pure:
        raise ValueError("complement needs pure complexes of the same dimension")
    missing = [m for m in D.masks if m not in gset]
    if missing:
        raise ValueError(f"D is not contained in G: facet {bits(missing[0])}")
    dset = set(D.masks)
    rest = [m for m in G.masks if m not in dset]
    if not rest:
        raise ValueError("complement is empty")
    return SimplicialComplex.from_masks(rest)


def sew(K: SimplicialComplex, B: SimplicialComplex, new_vertex: int, check: bool = True) -> SimplicialComplex:
    """Replace the ball B inside the sphere K by the cone over its boundary."""
    if new_vertex in K.vertices or new_vertex <= 0:
        raise ValueError(f"new vertex {new_vertex} must be a fresh positive label")
    if B.dim != K.dim or not B.is_pure:
        raise ValueError("B must be pure of the same dimension as K")
    kset = set(K.masks)
    for m in B.masks:
        if m not in kset:
            raise ValueError(f"B is not a ball inside K: {bits(m)} is not a facet of K")
    bd = ball_decomposition(B)
    apex = 1 << new_vertex
    bset = set(B.masks)
    out = SimplicialComplex.from_masks([m for m in K.masks if m not in bset] + [m | apex for m in bd.boundary.masks])
    if check:
        res = verify_sphere(out, "quick")
        if not res:
            raise ValueError(f"sewing output is not a sphere: {res.reason}")
    return out


@dataclass(frozen=True)
class ShellingRecord:
    facets: tuple[Face, ...]
    restriction_faces: tuple[Face, ...] = field(default=())


def verify_shelling(facets_in_order: Iterable[Iterable[int]]) -> ShellingRecord:
    """Check a shelling order and compute its restriction faces."""
    order = [tuple(sorted(f)) for f in facets_in_order]
    if not order:
        raise ValueError("no facets")
    size = len(order[0])
    if any(len(f) != size for f in order):
        raise ValueError("shelling needs a pure complex")
    masks = [to_mask(f) for f in order]
    restrictions: list[Face] = [()]
    for i in range(1, len(masks)):
        F = masks[i]
        inter = {F & masks[j] for j in range(i)}
        maximal = [x for x in inter if not any(x != y and x & y == x for y in inter)]
        if any(x.bit_count() != size - 1 for x in maximal):
            raise ValueError(f"facet {order[i]} meets its predecessors in a complex that is not pure of codimension 1")
        r = 0
        for x in maximal:
            r |= F ^ x
        restrictions.append(bits(r))
    return ShellingRecord(tuple(order), tuple(restrictions))


def flip_candidates(K: SimplicialComplex, sizes: Iterable[int] | None = None) -> list[FlipMove]:
    """All legal flips with |A| in ``sizes`` (default 2..d-1) in a (d-1)-sphere."""
    d = K.dim + 1
    out = []
    for j in sizes if sizes is not None else range(2, d):
        if not 1 < j < d:
            raise ValueError("candidate enumeration covers 2 <= |A| <= d-1")
        for A in sorted(K.face_levels[j]):
            lk = [m & ~A for m in K.masks if m & A == A]
            if len(lk) != d + 1 - j:
                continue
            B = 0
            for m in lk:
                B |= m
            if B.bit_count() != d + 1 - j or any(m & B == B for m in K.masks):
                continue
            out.append(FlipMove(bits(A), bits(B)))
    return out


def flip_walk(K: SimplicialComplex, steps: int, seed: int, stack_every: int = 0) -> SimplicialComplex:
    """A seeded random walk of flips; with ``stack_every`` > 0 a new vertex is
    stacked on a facet every that many steps."""
    rng = random.Random(seed)
    for s in range(1, steps + 1):
        if stack_every and s % stack_every == 0:
            facet = rng.choice(sorted(K.facets))
            K = stack(K, facet, max(K.vertices) + 1)
            continue
        moves = flip_candidates(K)
        if not moves:
            continue
        K = bistellar_flip(K, rng.choice(moves))
    return K
