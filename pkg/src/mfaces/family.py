"""Inductive construction of neighborly 2k-spheres all of whose missing faces
have dimension k, by repeated sewing along a sequence of disjoint edges.

Every hypothesis of the underlying lemmas is checked at run time; a failure
raises ``FamilyCheckError`` naming the clause that broke.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from .complex import (
    SimplicialComplex,
    ball_decomposition,
    bits,
    is_face,
    is_k_neighborly,
    join,
    link,
    missing_face_masks,
    simplex,
)
from .gale import build_qk
from .generators import P042_EDGES, p042
from .homology import verify_sphere
from .transforms import complement_ball, sew
from .vectors import ball_exactly_i_stacked


class FamilyCheckError(AssertionError):
    pass


@dataclass(frozen=True)
class FamilyState:
    sigma: SimplicialComplex
    edges: tuple[tuple[int, int], ...]
    k: int
    log: tuple[str, ...] = field(default=())

    @property
    def n(self) -> int:
        return self.sigma.n


def _missing_dims(K: SimplicialComplex) -> set[int]:
    return {s - 1 for s, grp in enumerate(missing_face_masks(K)) if grp}


def _is_j_neighborly_on(K: SimplicialComplex, j: int, vmask: int) -> bool:
    return is_k_neighborly(K, j, bits(vmask))


def _induced_on_skeleton(B: SimplicialComplex, S: SimplicialComplex, j: int) -> bool:
    """Every missing face of B of dimension >= j+1 is a missing face of S."""
    bm = missing_face_masks(B)
    sm = missing_face_masks(S)
    for size in range(j + 2, len(bm)):
        for m in bm[size]:
            if size >= len(sm) or m not in sm[size]:
                return False
    return True


def check_state(state: FamilyState, level: str = "quick") -> None:
    """Verify that (sigma, edges) meets every hypothesis of the sewing step."""
    k, S, E = state.k, state.sigma, state.edges
    if len(E) != k:
        raise FamilyCheckError(f"need {k} edges, got {len(E)}")
    used = [v for e in E for v in e]
    if len(set(used)) != len(used):
        raise FamilyCheckError("edges are not pairwise disjoint")
    res = verify_sphere(S, level)
    if not res or S.dim != 2 * k:
        raise FamilyCheckError(f"sigma is not a {2 * k}-sphere: {res.reason}")
    if _missing_dims(S) != {k}:
        raise FamilyCheckError(f"sigma has missing faces of dimensions {sorted(_missing_dims(S))}, expected only {k}")
    F: list[int] = []
    for j in range(0, k + 1):
        if j:
            F += list(E[j - 1])
        if not is_face(S, F):
            raise FamilyCheckError(f"F_{j} = {sorted(F)} is not a face")
        if j == k:
            break
        G = link(S, F)
        r = k - j
        if j < k - 1:
            rest = S.vertex_mask
            for v in F:
                rest &= ~(1 << v)
            if G.dim != 2 * r or not verify_sphere(G, "quick") or not _is_j_neighborly_on(G, r, rest):
                raise FamilyCheckError(
                    f"(*) fails at j={j}: link of F_{j} is not a {r}-neighborly {2 * r}-sphere on the remaining vertices"
                )
        if r % 2 == 1 and _missing_dims(G) != {r}:
            raise FamilyCheckError(f"(**) fails at j={j}: link of F_{j} has missing faces outside dimension {r}")


def build_balls(state: FamilyState) -> list[tuple[SimplicialComplex, SimplicialComplex, SimplicialComplex]]:
    """The triples (Gamma_j, D_j, B_j) for j = 1..k, every property checked."""
    k, S, E = state.k, state.sigma, state.edges
    gammas = []
    F: list[int] = []
    for j in range(0, k + 1):
        if j:
            F += list(E[j - 1])
        gammas.append(link(S, F) if F else S)
    # gammas[t] = link of F_t = Gamma_{k-t}
    def Gamma(j: int) -> SimplicialComplex:
        return gammas[k - j]

    out = []
    prev_B = None
    for j in range(1, k + 1):
        Gj = Gamma(j)
        e = E[k - j]
        D = join(simplex(e), Gamma(0)) if j == 1 else join(simplex(e), prev_B)
        try:
            B = complement_ball(Gj, D)
        except ValueError as exc:
            raise FamilyCheckError(f"D_{j} is not a subcomplex of Gamma_{j}: {exc}") from exc
        dd = ball_decomposition(D)
        bd = ball_decomposition(B)
        vm = Gj.vertex_mask
        if j > 1 and not _is_j_neighborly_on(D, j - 1, vm):
            raise FamilyCheckError(f"D_{j} is not {j - 1}-neighborly on V(Gamma_{j})")
        if not ball_exactly_i_stacked(dd, j):
            raise FamilyCheckError(f"D_{j} is not exactly {j}-stacked")
        if not _induced_on_skeleton(D, Gj, j - 1):
            raise FamilyCheckError(f"D_{j} is not induced on its {j - 1}-skeleton")
        if not _is_j_neighborly_on(B, j, vm):
            raise FamilyCheckError(f"B_{j} is not {j}-neighborly on V(Gamma_{j})")
        if not ball_exactly_i_stacked(bd, j + 1):
            raise FamilyCheckError(f"B_{j} is not exactly {j + 1}-stacked")
        if not _induced_on_skeleton(B, Gj, j):
            raise FamilyCheckError(f"B_{j} is not induced on its {j}-skeleton")
        out.append((Gj, D, B))
        prev_B = B
    return out


def normalize_labels(state: FamilyState) -> tuple[FamilyState, dict[int, int]]:
    """Relabel so that e_j = {n+1-2j, n+2-2j} and the other vertices are 1..n-2k in order."""
    n, k = state.n, state.k
    mapping: dict[int, int] = {}
    for j, e in enumerate(state.edges, 1):
        a, b = sorted(e)
        mapping[a] = n + 1 - 2 * j
        mapping[b] = n + 2 - 2 * j
    others = [v for v in state.sigma.vertices if v not in mapping]
    for idx, v in enumerate(others, 1):
        mapping[v] = idx
    edges = tuple((n + 1 - 2 * j, n + 2 - 2 * j) for j in range(1, k + 1))
    if all(mapping[v] == v for v in mapping):
        return state, mapping
    moved = {a: b for a, b in mapping.items() if a != b}
    log = state.log + (f"relabel {sorted(moved.items())}",)
    return FamilyState(state.sigma.relabel(mapping), edges, k, log), mapping


def family_step(state: FamilyState, level: str = "quick") -> FamilyState:
    """Sew a new vertex onto D_k and return the next sphere with its edges."""
    state, _ = normalize_labels(state)
    check_state(state, level)
    balls = build_balls(state)
    Dk = balls[-1][1]
    n, k = state.n, state.k
    new = sew(state.sigma, Dk, n + 1)
    edges = tuple((n + 2 - 2 * j, n + 3 - 2 * j) for j in range(1, k + 1))
    nxt = FamilyState(new, edges, k, state.log + (f"sew {n + 1} onto D_{k} ({len(Dk)} facets)",))
    check_state(nxt, level)
    return nxt


def family_seed(k: int) -> FamilyState:
    """The seed sphere: Q_k for odd k, the 9-vertex 4-sphere for k = 2."""
    if k == 2:
        return FamilyState(p042(), P042_EDGES, 2, ("seed p042",))
    if k % 2 == 1:
        K, E = build_qk(k)
        return FamilyState(K, tuple(E), k, (f"seed Q_{k}",))
    raise ValueError("seeds exist for k = 2 and odd k only")


def family_member(k: int, n: int, level: str = "quick") -> FamilyState:
    """Iterate from the seed until the sphere has n vertices."""
    state = family_seed(k)
    if n < state.n:
        raise ValueError(f"the family for k={k} starts at {state.n} vertices")
    check_state(state, level)
    while state.n < n:
        state = family_step(state, level)
    return state

