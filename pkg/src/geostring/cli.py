"""Command-line entry point: ``geostring <subcommand> ...``.

Exit codes: 0 success, 1 verification failed, 2 usage or input error,
3 a search or enumeration cap was exceeded.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

from . import __version__
from .exactgeom import InstanceParseError, build_intersection_graph, format_instance, parse_instance
from .graph import WorkCapExceeded, format_graph, parse_graph
from .render import render_svg
from .reductions import TARGETS, parse_dimacs, parse_mapping, reduce, verify_instance_claims
from .reductions.cnf import EnumerationCapExceeded
from .solvers import PROBLEMS, OracleCapExceeded, SolverConfig, solve

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def write_atomic(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _config(args) -> SolverConfig:
    kw = {}
    if args.deg_threshold is not None:
        kw["deg_threshold"] = args.deg_threshold
    if args.sep_const is not None:
        kw["sep_const"] = args.sep_const
    if args.edge_const is not None:
        kw["edge_const"] = args.edge_const
    if args.oracle_cap is not None:
        kw["oracle_cap"] = args.oracle_cap
    return SolverConfig(**kw)


def _header(args, cfg: SolverConfig) -> None:
    print(f"# geostring {__version__} {args.command}")
    print(f"# seed={args.seed}")
    for key, val in cfg.header().items():
        print(f"# {key}={val}")


def _load_graph(path):
    """(graph, lists or None) from a graph file or an instance file."""
    text = _read(path)
    first = next((ln.split("#", 1)[0].split() for ln in text.splitlines()
                  if ln.split("#", 1)[0].strip()), [])
    if first and first[0] == "graph":
        return parse_graph(text), None
    inst = parse_instance(text)
    g = build_intersection_graph(inst)
    lists = None
    if inst.lists:
        missing = [oid for oid in g.ids if oid not in inst.lists]
        if missing:
            raise UsageError(f"objects without color lists: {', '.join(missing[:5])}")
        lists = {v: inst.lists[oid] for v, oid in enumerate(g.ids)}
    return g, lists


def solution_text(problem: str, g, rep) -> str:
    if not rep.feasible:
        return f"solution {problem} infeasible\n"
    if isinstance(rep.witness, dict):
        lines = [f"solution {problem} {g.n}"]
        lines += [f"color {g.ids[v]} {rep.witness[v]}" for v in sorted(rep.witness)]
    else:
        lines = [f"solution {problem} {len(rep.witness)}"]
        lines += [g.ids[v] for v in sorted(rep.witness)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- subcommands

def cmd_build(args) -> int:
    inst = parse_instance(_read(args.input))
    text = format_graph(build_intersection_graph(inst))
    if args.out:
        write_atomic(args.out, text)
        print(f"graph\t{args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_solve(args) -> int:
    if args.problem is None:
        raise UsageError("solve needs --problem")
    if args.problem not in PROBLEMS:
        raise UsageError(f"unknown problem {args.problem!r}; expected one of {', '.join(PROBLEMS)}")
    cfg = _config(args)
    _header(args, cfg)
    g, lists = _load_graph(args.input)
    if args.problem == "list-col" and lists is None:
        if args.k is None:
            raise UsageError("list-col on a plain graph needs --k (every list is 1..k)")
        lists = {v: frozenset(range(1, args.k + 1)) for v in range(g.n)}
    if args.problem == "kcol" and args.k is None:
        raise UsageError("kcol needs --k")
    try:
        rep = solve(args.problem, g, args.algo, k=args.k, lists=lists, cfg=cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = args.out or f"{args.input}.{args.problem}.sol"
    write_atomic(out, solution_text(args.problem, g, rep))
    print(f"problem\t{rep.problem}")
    print(f"algo\t{rep.algo}")
    print(f"vertices\t{g.n}")
    print(f"edges\t{g.m}")
    print(f"feasible\t{str(rep.feasible).lower()}")
    print(f"optimum\t{rep.value if rep.value is not None else '-'}")
    print(f"witness\t{out}")
    for key, val in rep.trace.as_dict().items():
        print(f"trace.{key}\t{val}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    if args.target is None:
        raise UsageError(f"reduce needs --target ({', '.join(TARGETS)})")
    k = 4 if args.k is None else args.k
    if args.target == "list4col-2dir" and k != 4:
        raise UsageError("list4col-2dir always uses four colors")
    if args.target == "unit-2dir-listkcol" and k < 4:
        raise UsageError("unit-2dir-listkcol needs k >= 4")
    phi = parse_dimacs(_read(args.input))
    r = reduce(args.target, phi, k)
    prefix = args.out or str(Path(args.input).with_suffix("")) + f".{args.target}"
    write_atomic(prefix + ".inst", format_instance(r.instance))
    write_atomic(prefix + ".map", r.mapping_text())
    print(f"# geostring {__version__} reduce target={args.target} k={k}")
    print(f"target\t{r.target}")
    print(f"formula\t{r.formula.num_vars} variables\t{r.formula.num_clauses} clauses")
    print(f"objects\t{len(r.instance)}")
    print(f"predicted\t{r.predicted_count}")
    for c in r.claims:
        print(f"claim\t{c.problem} {c.relation} {c.value}")
    print(f"instance\t{prefix}.inst")
    print(f"mapping\t{prefix}.map")
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = parse_instance(_read(args.input))
    map_path = args.mapping or str(Path(args.input).with_suffix(".map"))
    claims, _ = parse_mapping(_read(map_path))
    if not claims:
        raise UsageError(f"no claim lines in {map_path}")
    phi = parse_dimacs(_read(args.cnf))
    cap = args.oracle_cap if args.oracle_cap is not None else SolverConfig().oracle_cap
    print(f"# geostring {__version__} verify oracle_cap={cap}")
    check = verify_instance_claims(inst, claims, phi, oracle_cap=cap)
    print(f"satisfiable\t{str(check.satisfiable).lower()}")
    for c in check.checks:
        print(f"claim\t{c.claim.problem} {c.claim.relation} {c.claim.value}\t"
              f"{'holds' if c.holds else 'fails'}\t{c.method}")
    print(f"result\t{'PASS' if check.ok else 'FAIL'}")
    return EXIT_OK if check.ok else EXIT_FAIL


def cmd_render(args) -> int:
    svg = render_svg(parse_instance(_read(args.input)))
    if args.out:
        write_atomic(args.out, svg)
        print(f"svg\t{args.out}")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_sweep(args) -> int:
    from .acceptance import SUITES, run_suites
    from .figures import sweep_figure

    names = args.suites or list(SUITES)
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; expected some of {', '.join(SUITES)}")
    _header(args, SolverConfig())
    results = run_suites(names, seed=args.seed,
                         progress=lambda name: print(f"# finished {name}", flush=True))
    print("status\tcriterion\truntime\tdetail")
    for r in results:
        print(r.line())
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        table = "status\tcriterion\tseconds\tdetail\n" + "".join(
            f"{'PASS' if r.passed else 'FAIL'}\t{r.key}\t{r.seconds:.3f}\t{r.detail}\n"
            for r in results)
        write_atomic(out / "sweep.tsv", table)
        print(f"table\t{out / 'sweep.tsv'}")
        print(f"figure\t{sweep_figure(results, str(out / 'sweep.png'))}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--problem", help=f"one of {', '.join(PROBLEMS)}")
    common.add_argument("--algo", choices=("winwin", "brute"), default="winwin")
    common.add_argument("--k", type=int, help="number of colors")
    common.add_argument("--target", help=f"reduction target: {', '.join(TARGETS)}")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--deg-threshold", type=int, help="branching degree (default ceil(n^(1/3)))")
    common.add_argument("--sep-const", type=Fraction, help="separator budget constant (default 3)")
    common.add_argument("--edge-const", type=float, help="dense/sparse split constant (default 10)")
    common.add_argument("--oracle-cap", type=int, help="largest graph handed to exhaustive search")
    common.add_argument("--out", help="output file (directory for sweep)")

    p = argparse.ArgumentParser(prog="geostring",
                                description="Exact algorithms and hardness instances for "
                                            "segment and string intersection graphs.")
    p.add_argument("--version", action="version", version=f"geostring {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build", parents=[common], help="instance file -> intersection graph")
    s.add_argument("input")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("solve", parents=[common], help="solve a graph or instance file")
    s.add_argument("input")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("reduce", parents=[common], help="DIMACS CNF -> instance + mapping")
    s.add_argument("input")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("verify", parents=[common], help="check an instance against its formula")
    s.add_argument("input", help="instance file; its claims are read from the .map sidecar")
    s.add_argument("cnf")
    s.add_argument("--mapping", help="mapping file (default: instance path with .map suffix)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", parents=[common], help="instance file -> SVG")
    s.add_argument("input")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("sweep", parents=[common], help="run the acceptance suites")
    s.add_argument("suites", nargs="*", help="subset of suites to run (default: all)")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceParseError as exc:
        print(f"geostring: {args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OracleCapExceeded, WorkCapExceeded, EnumerationCapExceeded) as exc:
        print(f"geostring: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError) as exc:
        print(f"geostring: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
