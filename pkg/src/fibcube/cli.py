"""Command-line front end: ``fibcube {gen,aut,factorize,verify,explore}``.

Exit codes: 0 success, 1 property violation, 2 input error, 3 size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import Iterator, TextIO

from . import cube as cubemod
from . import hypergraph as hg
from .bits import iter_bits
from .errors import CapExceeded, FibcubeError, NotAnIsomorphism
from .factorize import CubeIso, factorize, iso_from_json, iso_to_json
from .lazy import (ComponentVertex, ball_dot, ball_json, base_point_independent,
                   infinite_path_oracle, parse_base_point, windowed_ball)
from .verify import VerifyConfig, write_report

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _read_hypergraph(path: str) -> hg.Hypergraph:
    try:
        with open(path) as fh:
            h = hg.loads(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    rep = hg.validate(h)
    for w in rep.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if not rep.valid:
        raise InputError(f"{path}: " + "; ".join(rep.violations))
    return h


def _source(args: argparse.Namespace) -> hg.Hypergraph:
    if args.input is not None:
        return _read_hypergraph(args.input)
    if args.path is not None:
        return cubemod.path_hypergraph(args.path)
    if args.cycle is not None:
        return cubemod.cycle_hypergraph(args.cycle)
    raise InputError("give one of --input, --path or --cycle")


def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--input", metavar="PATH", help="hypergraph JSON file")
    g.add_argument("--path", type=int, metavar="N", help="path on N vertices")
    g.add_argument("--cycle", type=int, metavar="N", help="cycle on N vertices")


def cmd_gen(args: argparse.Namespace) -> int:
    h = _source(args)
    c = cubemod.build_cube(h)
    with _output(args.out) as out:
        if args.format == "dot":
            out.write(cubemod.export_dot(c))
        elif args.format == "json":
            out.write(cubemod.dumps(c) + "\n")
        else:
            for m in c.verts:
                out.write("{" + ",".join(map(str, iter_bits(m))) + "}\n")
    print(f"vertices: {len(c)} edges: {c.num_edges}", file=sys.stderr)
    return EXIT_OK


def cmd_aut(args: argparse.Namespace) -> int:
    h = _source(args)
    c = cubemod.build_cube(h)
    auts = cubemod.cube_automorphisms(c)
    hauts = hg.hypergraph_isos(h, h)
    facs = [factorize(CubeIso(c, c, a, check=False)) for a in auts]
    ok = all(f.passed for f in facs)
    result = {
        "hypergraph_automorphisms": len(hauts),
        "cube_automorphisms": len(auts),
        "isolated": sorted(hg.isolated(h)),
        "asymmetric": len(auts) == 1,
        "factorizations": [f.to_json() for f in facs],
    }
    with _output(args.out) as out:
        if args.format == "text":
            out.write(f"hypergraph automorphisms: {len(hauts)}\n"
                      f"cube automorphisms: {len(auts)}\n"
                      f"isolated vertices: {result['isolated']}\n"
                      f"all factor as f[r] xor c: {ok}\n")
        else:
            out.write(json.dumps(result, sort_keys=True) + "\n")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_factorize(args: argparse.Namespace) -> int:
    s = _source(args)
    t = _read_hypergraph(args.target) if args.target else s
    cs, ct = cubemod.build_cube(s), cubemod.build_cube(t)
    if args.map:
        try:
            with open(args.map) as fh:
                data = json.load(fh)
            isos = [iso_from_json(data, cs, ct)]
        except (OSError, ValueError, KeyError, TypeError, IndexError) as exc:
            raise InputError(f"{args.map}: {exc}") from None
    else:
        isos = [CubeIso(cs, ct, m, check=False) for m in cubemod.cube_isomorphisms(cs, ct)]
    facs = [factorize(g) for g in isos]
    with _output(args.out) as out:
        if args.map:
            out.write(json.dumps(facs[0].to_json(), sort_keys=True) + "\n")
        else:
            out.write(json.dumps({"isomorphisms": [iso_to_json(g) for g in isos],
                                  "factorizations": [f.to_json() for f in facs]},
                                 sort_keys=True) + "\n")
    return EXIT_OK if all(f.passed for f in facs) else EXIT_VIOLATION


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = VerifyConfig(seed=args.seed, exhaustive_n=args.exhaustive_n, samples=args.samples,
                       max_n=args.max_n, self_test=args.self_test)
    with _output(args.out) as out:
        summary = write_report(cfg, out)
    if not summary.get("passed"):
        print(f"verify: {summary.get('violations')} violation(s); see report", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_explore(args: argparse.Namespace) -> int:
    try:
        base = parse_base_point(args.base)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    oracle = infinite_path_oracle()
    if not base_point_independent(oracle, base):
        raise InputError(f"base point {args.base!r} is not independent")
    ball = windowed_ball(oracle, ComponentVertex(base), args.radius, args.window)
    with _output(args.out) as out:
        if args.format == "dot":
            out.write(ball_dot(ball))
        elif args.format == "json":
            out.write(json.dumps(ball_json(ball), sort_keys=True) + "\n")
        else:
            out.write(f"# {ball.header()}\n")
            for m in ball.verts:
                out.write("delta {" + ",".join(map(str, iter_bits(m))) + "}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fibcube", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="build a cube and export it")
    _add_source(p)
    p.add_argument("--format", choices=["json", "dot", "text"], default="json")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("aut", help="cube automorphisms and their factorizations")
    _add_source(p)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("factorize", help="factor cube isomorphisms as f[r] xor c")
    _add_source(p)
    p.add_argument("--target", metavar="PATH", help="target hypergraph JSON (default: source)")
    p.add_argument("--map", metavar="PATH", help="isomorphism map JSON; default: all isomorphisms")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("verify", help="brute-force sweep of the factorization theorem")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--exhaustive-n", type=int, default=4)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--self-test", action="store_true", help="corrupt one isomorphism")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore", help="windowed ball in the infinite Fibonacci cube")
    p.add_argument("--base", default="", help='e.g. "prefix=0,2;pattern=10"')
    p.add_argument("--radius", type=int, default=1)
    p.add_argument("--window", type=int, default=8)
    p.add_argument("--format", choices=["json", "dot", "text"], default="json")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, NotAnIsomorphism, FibcubeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
