"""Command-line interface: generate, analyze, certify, transform, reproduce.

Exit codes: 0 ok or inconclusive, 2 usage/parse/non-sphere errors,
10 non-polytopality certified, 1 a reproduction criterion failed.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .bounds import all_bound_reports
from .certify import nonpolytopality_certificate
from .complex import SimplicialComplex, link, m_vector
from .family import family_member
from .gale import build_qk
from .generators import cyclic_boundary, gs8, p042, realize_2sphere
from .homology import verify_sphere
from .io import ParseError, format_complex, load_data_dir, lookup, read_any
from .sequences import delta_sequence, delta_sequence_2k, gamma
from .transforms import FlipMove, bistellar_flip, complement_ball, sew
from .vectors import dehn_sommerville_check, face_profile, sphere_stacked_degree

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NOT_POLYTOPAL = 0, 1, 2, 10

GEN_KINDS = ("cyclic", "qk", "gs8", "p042", "delta", "delta2k", "gamma", "family", "sphere2")


class UsageError(ValueError):
    pass


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"gen {args.kind} needs {' '.join(missing)}")


def generate(args: argparse.Namespace) -> tuple[SimplicialComplex, list[str]]:
    kind = args.kind
    if kind == "cyclic":
        _need(args, "d", "n")
        return cyclic_boundary(args.d, args.n), [f"cyclic d={args.d} n={args.n}"]
    if kind == "qk":
        _need(args, "k")
        K, E = build_qk(args.k)
        return K, [f"qk k={args.k}", "edges " + " ".join(f"{a}-{b}" for a, b in E)]
    if kind == "gs8":
        return gs8(), ["gs8"]
    if kind == "p042":
        return p042(), ["p042"]
    if kind == "delta":
        _need(args, "n", "i")
        if not 1 <= args.i <= args.n - 5:
            raise UsageError(f"--i must lie in 1..{args.n - 5}")
        seq = delta_sequence(args.n, extended=args.i == args.n - 5)
        return seq[args.i - 1], [f"delta n={args.n} i={args.i}"]
    if kind == "delta2k":
        _need(args, "k", "n", "i")
        seq = delta_sequence_2k(args.k, args.n)
        if not 1 <= args.i <= len(seq):
            raise UsageError(f"--i must lie in 1..{len(seq)}")
        return seq[args.i - 1], [f"delta2k k={args.k} n={args.n} i={args.i}"]
    if kind == "gamma":
        _need(args, "n", "i", "k")
        if not 2 <= args.k <= args.n - 4:
            raise UsageError(f"--k must lie in 2..{args.n - 4}")
        return gamma(args.n, args.i, args.k), [f"gamma n={args.n} i={args.i} k={args.k}"]
    if kind == "family":
        _need(args, "k", "n")
        state = family_member(args.k, args.n)
        return state.sigma, [f"family k={args.k} n={args.n}", "edges " + " ".join(f"{a}-{b}" for a, b in state.edges)] + list(
            state.log
        )
    if kind == "sphere2":
        _need(args, "n", "m2")
        return realize_2sphere(args.n, args.m2), [f"sphere2 n={args.n} m2={args.m2}"]
    raise UsageError(f"unknown kind {kind}")


def _load(source: str, data_dir: str | None, name: str | None) -> list[tuple[str, SimplicialComplex]]:
    path = Path(source)
    if path.is_file():
        entries = read_any(path)
    elif data_dir:
        K = lookup(load_data_dir(data_dir), source)
        if K is None:
            raise UsageError(f"{source} is neither a file nor an entry in {data_dir}")
        entries = [(source, K)]
    else:
        raise UsageError(f"no such file: {source}")
    if name is not None:
        entries = [(nm, K) for nm, K in entries if nm == name or nm.endswith("_" + name)]
        if not entries:
            raise UsageError(f"no entry named {name} in {source}")
    return entries


def _vec(v: Sequence[object]) -> str:
    return ",".join(str(x) for x in v)


def _emit(pairs: list[tuple[str, object]], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "kv":
        for k, v in pairs:
            print(f"{k}={v}", file=out)
        return
    width = max((len(k) for k, _ in pairs), default=0)
    for k, v in pairs:
        print(f"{k:<{width}}  {v}", file=out)


def analyze_pairs(name: str, K: SimplicialComplex, level: str, links: bool) -> list[tuple[str, object]]:
    p = face_profile(K)
    sphere = verify_sphere(K, level)
    pairs: list[tuple[str, object]] = [
        ("name", name),
        ("n", p.n),
        ("d", p.d),
        ("facets", len(K.facets)),
        ("f", _vec(p.f)),
        ("h", _vec(p.h)),
        ("g", _vec(p.g)),
        ("m", _vec(p.m)),
        ("neighborliness", p.neighborliness),
        ("neighborly", str(p.is_neighborly).lower()),
        ("flag", str(p.is_flag).lower()),
        ("eulerian", str(p.is_eulerian).lower()),
        ("dehn_sommerville", str(dehn_sommerville_check(p)).lower()),
        (f"sphere_{level}", str(bool(sphere)).lower()),
    ]
    if not sphere:
        pairs.append(("sphere_reason", sphere.reason))
    if sphere and p.is_eulerian:
        deg = sphere_stacked_degree(p)
        pairs.append(("stacked_degree", "none" if deg is None else deg))
        # bound names contain '<=', so they go in values, never in keys
        for idx, r in enumerate(all_bound_reports(p), 1):
            pairs += [
                (f"bound.{idx}.name", r.name),
                (f"bound.{idx}.kind", r.kind),
                (f"bound.{idx}.value", r.value),
                (f"bound.{idx}.observed", r.observed),
                (f"bound.{idx}.slack", r.slack),
                (f"bound.{idx}.ok", str(r.satisfied).lower()),
            ]
    if links:
        for v in K.vertices:
            pairs.append((f"link.{v}.m", _vec(m_vector(link(K, [v])))))
    return pairs


def cmd_gen(args: argparse.Namespace) -> int:
    K, comments = generate(args)
    text = format_complex(K, comments)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    for idx, (name, K) in enumerate(_load(args.input, args.data_dir, args.name)):
        if idx:
            print()
        _emit(analyze_pairs(name, K, args.level, args.links), args.format)
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    entries = _load(args.input, args.data_dir, args.name)
    if len(entries) != 1:
        raise UsageError(f"{args.input} holds {len(entries)} complexes; pick one with --name")
    name, K = entries[0]
    cert = nonpolytopality_certificate(K, args.k)
    pairs: list[tuple[str, object]] = [("name", name), ("verdict", cert.verdict)]
    for key in ("rule", "witness_vertex", "observed", "expected", "k", "n", "d", "reason"):
        val = getattr(cert, key)
        if val is not None and val != "":
            pairs.append((key, val))
    _emit(pairs, args.format)
    return EXIT_NOT_POLYTOPAL if cert.is_certified else EXIT_OK


def _parse_face(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


def _single(path: str) -> SimplicialComplex:
    entries = read_any(path)
    if len(entries) != 1:
        raise UsageError(f"{path} holds {len(entries)} complexes")
    return entries[0][1]


def cmd_transform(args: argparse.Namespace) -> int:
    K = _single(args.input)
    if args.flip:
        if "/" not in args.flip:
            raise UsageError("--flip expects A/B, e.g. 1,3,9/2,4,8")
        a, b = args.flip.split("/", 1)
        out = bistellar_flip(K, FlipMove(_parse_face(a), _parse_face(b)))
        note = f"flip {args.flip}"
    elif args.sew:
        v = args.vertex if args.vertex is not None else max(K.vertices) + 1
        out = sew(K, _single(args.sew), v)
        note = f"sew {Path(args.sew).name} vertex {v}"
    else:
        out = complement_ball(K, _single(args.complement))
        note = f"complement of {Path(args.complement).name}"
    text = format_complex(out, [note])
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_repro(args: argparse.Namespace) -> int:
    from .repro import CRITERIA, FAIL, run_criterion

    wanted = set(args.only) if args.only else None
    failed = False
    for num, _, _ in CRITERIA:
        if wanted is not None and num not in wanted:
            continue
        res = run_criterion(num, args.data_dir)
        if args.format == "kv":
            print(f"criterion.{num}={res.status}")
        else:
            print(res.line(), flush=True)
        failed |= res.status == FAIL
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mfaces", description="Missing faces of simplicial spheres.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a complex")
    g.add_argument("kind", choices=GEN_KINDS)
    for opt in ("d", "n", "k", "i", "m2"):
        g.add_argument(f"--{opt}", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="facet-list file, bracketed file, or entry name with --data-dir")
        p.add_argument("--name", help="entry to select from a multi-entry file")
        p.add_argument("--data-dir", help="directory of optional external complexes")
        p.add_argument("--format", choices=("table", "kv"), default="table")

    a = sub.add_parser("analyze", help="face numbers, bounds and sphere checks")
    add_input(a)
    a.add_argument("--level", choices=("quick", "full"), default="quick")
    a.add_argument("--links", action="store_true", help="also list the m-vector of every vertex link")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("certify", help="try to certify non-polytopality")
    add_input(c)
    c.add_argument("--k", type=int)
    c.set_defaults(func=cmd_certify)

    t = sub.add_parser("transform", help="flip, sew or take a complement")
    t.add_argument("input")
    grp = t.add_mutually_exclusive_group(required=True)
    grp.add_argument("--flip", help="A/B as comma-separated vertex lists")
    grp.add_argument("--sew", help="file with the ball to sew onto")
    grp.add_argument("--complement", help="file with the ball to remove")
    t.add_argument("--vertex", type=int, help="label of the new vertex for --sew")
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_transform)

    r = sub.add_parser("repro", help="run the acceptance criteria")
    r.add_argument("--data-dir")
    r.add_argument("--format", choices=("table", "kv"), default="table")
    r.add_argument("--only", type=int, nargs="+", help="criterion numbers to run")
    r.set_defaults(func=cmd_repro)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        kind = "parse error" if isinstance(exc, ParseError) else "error"
        print(f"mfaces: {kind}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
