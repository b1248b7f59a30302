"""Canonical forms of simplicial complexes by colour refinement plus backtracking."""
from __future__ import annotations

from .complex import SimplicialComplex, bits

Canon = tuple[tuple[int, ...], ...]


def _refine(colors: dict[int, int], facets: list[tuple[int, ...]]) -> dict[int, int]:
    """Iterate colour refinement to a fixed point; colour ids are canonical ranks."""
    containing: dict[int, list[tuple[int, ...]]] = {v: [] for v in colors}
    for f in facets:
        for v in f:
            containing[v].append(f)
    while True:
        sig = {
            v: (colors[v], tuple(sorted(tuple(sorted(colors[u] for u in f if u != v)) for f in containing[v])))
            for v in colors
        }
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in colors}
        if len(ranks) == len(set(colors.values())):
            return new
        colors = new


def canonical_form(K: SimplicialComplex) -> Canon:
    """Lexicographically least facet list over all labelings 1..n reachable
    from the refinement tree; equal for two complexes iff they are isomorphic."""
    facets = [bits(m) for m in K.masks]
    start = _refine({v: 0 for v in K.vertices}, facets)
    best: Canon | None = None

    def search(colors: dict[int, int]) -> None:
        nonlocal best
        cells: dict[int, list[int]] = {}
        for v, c in colors.items():
            cells.setdefault(c, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            form = tuple(sorted(tuple(sorted(colors[v] + 1 for v in f)) for f in facets))
            if best is None or form < best:
                best = form
            return
        # individualize each vertex of the first non-singleton cell
        for v in sorted(cells[target]):
            split = {u: 2 * c + (1 if c == target and u != v else 0) for u, c in colors.items()}
            search(_refine(split, facets))

    search(start)
    assert best is not None
    return best


def is_isomorphic(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    if K1.n != K2.n or len(K1.masks) != len(K2.masks) or K1.f_vector != K2.f_vector:
        return False
    return canonical_form(K1) == canonical_form(K2)


def canonical_complex(K: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(canonical_form(K))
