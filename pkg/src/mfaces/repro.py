"""The acceptance criteria as runnable checks, each returning a PASS/FAIL/SKIPPED line."""
from __future__ import annotations

import contextlib
import io
import random
import tempfile
import traceback
from dataclasses import dataclass
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .bounds import (
    all_bound_reports,
    eulerian_m2_bound,
    generalized_mk_bound,
    goodman_bound,
    two_sphere_m_admissible,
)
from .canon import is_isomorphic
from .certify import NOT_POLYTOPAL, nonpolytopality_certificate
from .complex import (
    SimplicialComplex,
    ball_decomposition,
    bits,
    is_k_neighborly,
    link,
    missing_face_masks,
    neighborliness,
    octahedron,
)
from .family import family_seed, family_step, check_state
from .gale import build_qk, qk_missing_faces
from .generators import (
    P042_MISSING_TRIANGLES,
    ball_D,
    cyclic_boundary,
    gs8,
    p042,
    realize_2sphere,
    stacked_sphere,
)
from .homology import verify_sphere
from .io import format_complex, load_data_dir, lookup
from .sequences import (
    delta_2k_m,
    delta_sequence,
    delta_sequence_2k,
    flip_set,
    gamma_family,
    gamma_m3,
    missing_dim3_cyclic5,
)
from .transforms import flip_walk
from .vectors import dehn_sommerville_check, face_profile, pseudopower_upper

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


class CriterionFailure(AssertionError):
    pass


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    status: str
    detail: str = ""

    def line(self) -> str:
        return f"[{self.status:7}] {self.number:2d}. {self.title}: {self.detail}"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise CriterionFailure(msg)


def _missing_of_size(K: SimplicialComplex, size: int) -> set[frozenset[int]]:
    groups = missing_face_masks(K)
    return {frozenset(bits(m)) for m in groups[size]} if size < len(groups) else set()


def _missing_dims(K: SimplicialComplex) -> set[int]:
    return {s - 1 for s, grp in enumerate(missing_face_masks(K)) if grp}


def crit_cyclic_m_vectors(data_dir: str | None = None) -> str:
    for n in range(8, 13):
        m = face_profile(cyclic_boundary(5, n), eulerian=False).m
        want = (0, comb(n - 4, 3), comb(n - 5, 2), 0, 0)
        _require(m == want, f"n={n}: m={m}, expected {want}")
    return "m(boundary C(5,n)) = (0, C(n-4,3), C(n-5,2), 0, 0) for n=8..12"


def crit_flip_sequence(data_dir: str | None = None) -> str:
    for n in range(9, 13):
        deltas = delta_sequence(n)
        _require(len(deltas) == n - 6, f"n={n}: expected {n - 6} members")
        M = missing_dim3_cyclic5(n)
        for i, D in enumerate(deltas, 1):
            if i > 1:
                M = M - flip_set(n, i)
            got = _missing_of_size(D, 4)
            _require(len(got) == comb(n - 4 - i, 2), f"n={n}, i={i}: m3={len(got)}")
            _require(got == M, f"n={n}, i={i}: missing 3-faces differ from M_i")
            _require(neighborliness(D) >= 2, f"n={n}, i={i}: not neighborly")
    return "m3(Delta_i) = C(n-4-i,2) and M_i = M_{i-1} minus S_{i-1} for n=9..12"


def crit_sewn_values(data_dir: str | None = None) -> str:
    sizes = []
    for n in range(9, 12):
        fam = gamma_family(n)
        seen = set()
        for (i, k), G in fam.items():
            m3 = len(_missing_of_size(G, 4))
            _require(m3 == gamma_m3(n, i, k), f"n={n}, (i,k)=({i},{k}): m3={m3}, predicted {gamma_m3(n, i, k)}")
            _require(neighborliness(G) >= 2 and G.n == n + 1, f"n={n}, (i,k)=({i},{k}): not a neighborly sphere on n+1 vertices")
            seen.add(m3)
        by_pairs = {comb(m, 2) + s for m in range(2, n - 4) for s in list(range(0, n - 6)) + [n - 5]}
        top = comb(n - 4, 2)
        closed = set(range(1, top - 1)) | {top}
        _require(by_pairs == closed, f"n={n}: the two descriptions of the target set differ")
        _require(seen == closed, f"n={n}: realized {sorted(seen)}, expected {sorted(closed)}")
        sizes.append(f"n={n}:{len(seen)} values")
    return "realized m3 sets equal {1..C(n-4,2)-2} u {C(n-4,2)} (" + ", ".join(sizes) + ")"


def _run_cli(args: list[str]) -> tuple[int, str]:
    from .cli import main

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(args)
    return code, buf.getvalue()


def crit_gs8_certificate(data_dir: str | None = None) -> str:
    K = gs8()
    _require(len(K.facets) == 20, "GS8 must have 20 facets")
    _require(bool(verify_sphere(K, "full")), "GS8 is not a verified 3-sphere")
    _require(neighborliness(K) >= 2, "GS8 is not neighborly")
    cert = nonpolytopality_certificate(K)
    _require(cert.verdict == NOT_POLYTOPAL and cert.witness_vertex == 4, f"certificate {cert}")
    _require((cert.observed, cert.expected) == (1, 3), f"observed/expected {cert.observed}/{cert.expected}")
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "gs8.txt"
        path.write_text(format_complex(K))
        code, out = _run_cli(["certify", str(path), "--format", "kv"])
    _require(code == 10, f"certify exit code {code}")
    _require("witness_vertex=4" in out and "observed=1" in out and "expected=3" in out, "certify output lacks the witness")
    return "verified neighborly 3-sphere; certify exits 10 with m2(lk 4) = 1 != 3"


def crit_p042(data_dir: str | None = None) -> str:
    K = p042()
    _require(len(K.facets) == 30, "P042 must have 30 facets")
    _require(bool(verify_sphere(K, "full")) and K.dim == 4, "not a verified 4-sphere")
    _require(neighborliness(K) == 2, f"neighborliness {neighborliness(K)}")
    tri = _missing_of_size(K, 3)
    _require(tri == {frozenset(t) for t in P042_MISSING_TRIANGLES}, "missing 2-faces differ from the published list")
    _require(_missing_dims(K) == {2}, f"missing faces in dimensions {_missing_dims(K)}")
    return "verified 2-neighborly 4-sphere with the 10 published missing triangles and m3 = 0"


def crit_qk(data_dir: str | None = None) -> str:
    for k in (1, 3, 5):
        K, E = build_qk(k)
        _require(bool(verify_sphere(K, "full")), f"Q_{k} fails the full sphere check")
        _require(K.n == 2 * k + 4, f"Q_{k} has {K.n} vertices")
        _require(neighborliness(K) >= k, f"Q_{k} is not {k}-neighborly")
        _require(_missing_dims(K) == {k}, f"Q_{k} has missing faces in dimensions {_missing_dims(K)}")
        got = {frozenset(bits(m)) for grp in missing_face_masks(K) for m in grp}
        _require(got == {frozenset(f) for f in qk_missing_faces(k)}, f"Q_{k}: missing faces are not the rotations")
        if k == 1:
            _require(is_isomorphic(K, octahedron()), "Q_1 is not the octahedron")
            continue
        F: list[int] = []
        for j, e in enumerate(E[:-1], 1):
            F += list(e)
            L = link(K, F)
            rest = [v for v in K.vertices if v not in F]
            _require(is_k_neighborly(L, k - j, rest), f"Q_{k}: link of F_{j} is not {k - j}-neighborly on V minus F_{j}")
            if j % 2 == 0:
                _require(is_isomorphic(L, build_qk(k - j)[0]), f"Q_{k}: link of F_{j} is not Q_{k - j}")
        _require(is_isomorphic(link(K, F), octahedron()), f"Q_{k}: link of F_{k - 1} is not the octahedron")
    return "Q_1, Q_3, Q_5 pass the full check with the predicted missing faces and links"


def crit_family(data_dir: str | None = None) -> str:
    parts = []
    for k in (3, 2):
        state = family_seed(k)
        check_state(state, "full")
        for _ in range(5):
            state = family_step(state, "full")
            K = state.sigma
            _require(neighborliness(K) >= k, f"k={k}, n={K.n}: not neighborly")
            _require(_missing_dims(K) == {k}, f"k={k}, n={K.n}: missing dimensions {_missing_dims(K)}")
        parts.append(f"k={k}: n up to {state.n}")
    return "five checked sewing steps from each seed (" + ", ".join(parts) + ")"


def random_eulerian_corpus(count: int = 20, seed: int = 20240) -> Iterator[tuple[str, SimplicialComplex]]:
    """Seeded, reproducible parameter draws for flip walks in dimensions 3 and 4."""
    rng = random.Random(seed)
    for idx in range(count):
        d = 4 if idx % 2 == 0 else 5
        n = rng.randint(d + 3, d + 6)
        start = cyclic_boundary(d, n) if rng.random() < 0.5 else stacked_sphere(d, n)
        steps = rng.randint(5, 25)
        stack_every = rng.choice([0, 0, 4, 7])
        wseed = rng.randrange(10**6)
        yield f"walk(d={d},n={n},steps={steps},stack={stack_every},seed={wseed})", flip_walk(start, steps, wseed, stack_every)


def crit_goodman(data_dir: str | None = None) -> str:
    O = octahedron()
    p = face_profile(O)
    _require(p.f[3] + p.m_at(2) == 8 == goodman_bound(6, 12), "octahedron does not attain the triangle bound")
    worst = None
    for name, K in random_eulerian_corpus():
        p = face_profile(K)
        _require(p.is_eulerian, f"{name} is not Eulerian")
        slack = p.m_at(2) - eulerian_m2_bound(p.d, p.n, p.f[2])
        _require(slack >= 0, f"{name}: slack {slack}")
        worst = slack if worst is None else min(worst, slack)
    return f"octahedron f2+m2 = 8 = bound; 20 seeded Eulerian complexes, least slack {worst}"


FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


def fano_complex(tetrahedra: Iterable[int] = range(7)) -> SimplicialComplex:
    """On [7]: every triangle except the Fano lines, plus the chosen line
    complements (indices into FANO_LINES) as tetrahedra."""
    chosen = set(tetrahedra)
    lines = [set(L) for L in FANO_LINES]
    tets = [sorted(set(range(1, 8)) - lines[i]) for i in sorted(chosen)]
    tris = [list(T) for T in combinations(range(1, 8), 3) if set(T) not in lines]
    return SimplicialComplex(tets + tris)


def crit_fano(data_dir: str | None = None) -> str:
    out = []
    for j in (7, 0):
        K = fano_complex(range(j))
        p = face_profile(K, eulerian=False)
        f3 = p.f[4] if len(p.f) > 4 else 0
        _require(p.f[3] == 28 and f3 == j, f"unexpected f-vector {p.f}")
        bound = generalized_mk_bound(3, 7, p.f[3], f3)
        _require(p.m_at(3) == bound, f"m3={p.m_at(3)} but bound {bound}")
        out.append(f"f3={f3}: m3 = bound = {bound}")
    return "equality, slack 0 (" + "; ".join(out) + ")"


def crit_two_spheres(data_dir: str | None = None) -> str:
    built = 0
    for n in range(5, 13):
        for m2 in range(-1, n + 1):
            ok = two_sphere_m_admissible(n, m2)
            try:
                K = realize_2sphere(n, m2)
            except ValueError:
                _require(not ok, f"(n,m2)=({n},{m2}) admissible but rejected")
                continue
            _require(ok, f"(n,m2)=({n},{m2}) inadmissible but realized")
            p = face_profile(K, eulerian=False)
            g1 = n - 4
            _require(K.n == n and bool(verify_sphere(K, "full")), f"({n},{m2}): not a 2-sphere on n vertices")
            _require(p.m == (pseudopower_upper(g1, 1), m2, 0), f"({n},{m2}): m={p.m}")
            built += 1
        _require(not two_sphere_m_admissible(n, n - 5), f"n={n}: m2=n-5 accepted")
    return f"realized exactly the admissible pairs for n=5..12 ({built} spheres), m2 = n-5 rejected"


def sphere_corpus() -> Iterator[tuple[str, SimplicialComplex]]:
    """Every kind of sphere the package builds, at small parameters."""
    for d in range(3, 8):
        for n in range(d + 1, d + 5):
            yield f"cyclic({d},{n})", cyclic_boundary(d, n)
    for d in (3, 4, 5):
        yield f"stacked({d},9)", stacked_sphere(d, 9)
    for n in (9, 10):
        for i, D in enumerate(delta_sequence(n, extended=True), 1):
            yield f"delta(n={n},i={i})", D
        for (i, k), G in gamma_family(n).items():
            yield f"gamma(n={n},i={i},k={k})", G
    for i, D in enumerate(delta_sequence_2k(3, 11, check_balls=False), 1):
        yield f"delta2k(k=3,n=11,i={i})", D
    for k in (1, 3):
        yield f"qk({k})", build_qk(k)[0]
    yield "gs8", gs8()
    yield "p042", p042()
    for k in (2, 3):
        state = family_seed(k)
        for _ in range(3):
            state = family_step(state)
            yield f"family(k={k},n={state.n})", state.sigma
    for n in (6, 8, 10):
        for m2 in range(0, n - 3):
            if two_sphere_m_admissible(n, m2):
                yield f"sphere2({n},{m2})", realize_2sphere(n, m2)
    yield from random_eulerian_corpus()


def crit_upper_bounds(data_dir: str | None = None) -> str:
    count = 0
    for name, K in sphere_corpus():
        p = face_profile(K, eulerian=False)
        _require(dehn_sommerville_check(p), f"{name}: h not palindromic")
        for r in all_bound_reports(p):
            _require(bool(r.satisfied), f"{name}: {r.name} violated (bound {r.value}, observed {r.observed})")
        count += 1
    return f"{count} spheres satisfy every upper bound, the clique bound and Dehn-Sommerville"


def crit_ball_boundary(data_dir: str | None = None) -> str:
    k, n = 3, 12
    deltas = delta_sequence_2k(k, n, check_balls=False)
    for i in (1, 2, 3):
        D = deltas[i - 1]
        bd = ball_decomposition(ball_D(k, i, n)).boundary
        _require(bd == D, f"i={i}: boundary of D^3_i differs from Delta^6_i")
        m4 = len(_missing_of_size(D, 5))
        _require(m4 == delta_2k_m(k, n, i), f"i={i}: m4={m4}, formula {delta_2k_m(k, n, i)}")
    return "boundary(D^3_i) = Delta^6_i and m4 = 20, 16, 13 for i = 1, 2, 3"


LUTZ_TABLE = {
    "3_10_1_1": 3, "3_11_1_1": 3, "3_13_1_3": 2, "3_13_1_5": 3, "3_14_1_7": 5,
    "3_14_1_8": 7, "3_14_1_11": 4, "3_14_1_14": 7, "3_14_1_17": 6, "3_14_1_18": 7,
    "3_14_1_26": 7, "3_14_1_27": 5, "3_15_1_3": 6, "3_15_1_13": 5,
    "5_11_1_1": 8, "5_13_2_6": 15, "5_13_1_8": 11, "5_15_2_7": 24,
}


class Skipped(Exception):
    pass


def crit_lutz_table(data_dir: str | None = None) -> str:
    if not data_dir or not Path(data_dir).is_dir():
        raise Skipped("no --data-dir with the external complexes")
    found = load_data_dir(data_dir)
    done, absent = [], []
    for name, want in LUTZ_TABLE.items():
        K = lookup(found, name)
        if K is None:
            absent.append(name)
            continue
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / f"{name}.txt"
            path.write_text(format_complex(K))
            code, out = _run_cli(["certify", str(path), "--format", "kv"])
        _require(code == 10, f"{name}: certify exit code {code}")
        cert = nonpolytopality_certificate(K)
        _require(cert.observed == want, f"{name}: observed {cert.observed}, table {want}")
        done.append(name)
    if not done:
        raise Skipped("none of the named complexes found in the data directory")
    tail = f"; missing {len(absent)} rows" if absent else ""
    return f"{len(done)} rows reproduced{tail}"


CRITERIA: list[tuple[int, str, Callable[[str | None], str]]] = [
    (1, "cyclic m-vectors", crit_cyclic_m_vectors),
    (2, "flip sequence", crit_flip_sequence),
    (3, "sewn sphere m3 values", crit_sewn_values),
    (4, "GS8 certificate", crit_gs8_certificate),
    (5, "P042 sphere", crit_p042),
    (6, "Q_k spheres", crit_qk),
    (7, "family engine", crit_family),
    (8, "triangle bound and Eulerian m2 bound", crit_goodman),
    (9, "Fano equality", crit_fano),
    (10, "2-sphere m-vectors", crit_two_spheres),
    (11, "upper-bound suite", crit_upper_bounds),
    (12, "ball boundary cross-check", crit_ball_boundary),
    (13, "external link-count table", crit_lutz_table),
]


def run_criterion(number: int, data_dir: str | None = None) -> CriterionResult:
    for num, title, fn in CRITERIA:
        if num == number:
            try:
                return CriterionResult(num, title, PASS, fn(data_dir))
            except Skipped as exc:
                return CriterionResult(num, title, SKIPPED, str(exc))
            except Exception as exc:  # a crash is a failure with its message
                detail = str(exc) or traceback.format_exception_only(type(exc), exc)[-1].strip()
                return CriterionResult(num, title, FAIL, f"{type(exc).__name__}: {detail}")
    raise ValueError(f"no criterion {number}")


def run_all(data_dir: str | None = None) -> list[CriterionResult]:
    return [run_criterion(num, data_dir) for num, _, _ in CRITERIA]
