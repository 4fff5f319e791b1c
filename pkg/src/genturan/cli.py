"""Command-line entry point: ``genturan <command> ...``.

Exit codes: 0 success (or verdict true), 1 usage/parse/precondition error,
2 verdict false or infeasible parameters.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import props
from .asymptotics import (
    TheoremParams,
    density_polynomial,
    eps_constraint_holds,
    evaluate,
    feasibility,
    fraction_to_json,
    minimal_a,
    parse_fraction,
)
from .counting import count_copies
from .extremal import (
    InfeasibleParameters,
    S_alpha,
    Q_contracted_vertex,
    H_endvertices,
    build_G,
    build_H,
    build_power_path_base,
    build_Q,
    build_S_spec,
    max_partite_density,
    power_path_endvertices,
    verify_counterexample,
)
from .graphcore import Graph, PatternWithDemands, WeightedGraph, complete, graph_to_json, load_graph_file, to_dot

EXIT_OK, EXIT_USAGE, EXIT_FALSE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _frac_list(text: str) -> list[Fraction]:
    return [parse_fraction(x) for x in text.split(",") if x.strip()]


def _a_range(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":")
        return list(range(int(lo), int(hi) + 1))
    return _int_list(text)


def _check_writable(path: Optional[str]) -> None:
    if path is None:
        return
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(directory) or not os.access(directory, os.W_OK):
        raise UsageError(f"output directory {directory} is not writable")


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- commands -----------------------------------------------------------------


def cmd_construct(args) -> int:
    name, r = args.name, args.r
    if r is None:
        raise UsageError("--r is required")
    highlight: tuple[int, ...] = ()
    bold: list[tuple[int, int]] = []
    if name == "H":
        obj = build_H(r)
        highlight = H_endvertices(r)
        x = highlight[0]
        bold = [(x + i, x + i + 1) for i in range(5)]
    elif name == "G":
        if args.a is None:
            raise UsageError("construct G needs --a")
        obj = build_G(r, args.a)
    elif name == "Q":
        obj = build_Q(r)
        highlight = (Q_contracted_vertex(r),)
    elif name == "S":
        if args.n is None or args.eps is None:
            raise UsageError("construct S needs --n and --eps")
        obj = build_S_spec(r, args.n, parse_fraction(args.eps))
        z = Q_contracted_vertex(r)
        highlight = (z,)
    else:
        obj = build_power_path_base(r)
        highlight = power_path_endvertices(r)
    _check_writable(args.out)
    _check_writable(args.dot)
    _emit(json.dumps(graph_to_json(obj), sort_keys=True) + "\n", args.out)
    if args.dot:
        dot_obj = obj.base if isinstance(obj, PatternWithDemands) else obj
        _emit(to_dot(dot_obj, name=name, highlight=highlight, bold_edges=bold), args.dot)
    return EXIT_OK


def _as_graph(obj) -> Graph:
    if isinstance(obj, Graph):
        return obj
    return obj.expand()


def cmd_props(args) -> int:
    g = _as_graph(load_graph_file(args.graph))
    if g.n < 1:
        raise UsageError("graph must have at least one vertex")
    diam = props.diameter(g)
    chi = props.chromatic_number(g)
    k = args.k if args.k is not None else chi
    summary = props.count_proper_colorings_as_partitions(g, k, limit=args.limit)
    out = {
        "n": g.n,
        "edges": g.num_edges,
        "diameter": "inf" if diam == props.INFINITY else diam,
        "chromatic_number": chi,
        "clique_number": props.clique_number(g),
        "colorings_k": k,
        "colorings_as_partitions": summary.count_partitions,
        "coloring_witness": None if summary.witness is None else [list(c) for c in summary.witness],
    }
    _emit(_dumps(out), args.out)
    return EXIT_OK


def cmd_count(args) -> int:
    pattern = load_graph_file(args.pattern)
    if isinstance(pattern, WeightedGraph):
        raise UsageError("pattern must be a graph or a pattern with demands")
    if (pattern.base if isinstance(pattern, PatternWithDemands) else pattern).n < 1:
        raise UsageError("pattern must be nonempty")
    if args.parts is not None:
        parts = _int_list(args.parts)
        host: Graph | WeightedGraph = WeightedGraph(complete(len(parts)), tuple(parts))
    elif args.host is not None:
        host = load_graph_file(args.host)
        if isinstance(host, PatternWithDemands):
            host = WeightedGraph(host.base, host.demands)
    else:
        raise UsageError("give --host FILE or --parts a,b,c")
    result = count_copies(pattern, host)
    _emit(_dumps(result.to_json()), args.out)
    return EXIT_OK


def _pattern_arg(args) -> PatternWithDemands:
    p = load_graph_file(args.pattern)
    if isinstance(p, Graph):
        return PatternWithDemands(p)
    if isinstance(p, WeightedGraph):
        raise UsageError("pattern must be a graph or a pattern with demands")
    return p


def cmd_density(args) -> int:
    pattern = _pattern_arg(args)
    if args.host is not None:
        host = load_graph_file(args.host)
        host = host if isinstance(host, Graph) else host.base
    elif args.parts_count is not None:
        host = complete(args.parts_count)
    else:
        raise UsageError("give --host FILE or --parts-count k")
    poly = density_polynomial(pattern, host)
    out: dict = {"polynomial": poly.to_json()}
    if args.alpha is not None:
        out["value"] = fraction_to_json(evaluate(poly, _frac_list(args.alpha)))
    _emit(_dumps(out), args.out)
    return EXIT_OK


def cmd_optimize(args) -> int:
    pattern = _pattern_arg(args)
    value, alpha = max_partite_density(pattern, args.parts_count, starts=args.starts, seed=args.seed)
    out = {
        "value": fraction_to_json(value),
        "value_decimal": f"{float(value):.12e}",
        "alpha": [fraction_to_json(x) for x in alpha],
    }
    _emit(_dumps(out), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    delta, eps = parse_fraction(args.delta), parse_fraction(args.eps)
    if args.r < 4:
        raise UsageError(f"r must be >= 4, got {args.r}")
    if args.a == "auto":
        try:
            a = minimal_a(args.r, delta, eps)
        except ValueError as exc:
            print(f"infeasible: {exc}", file=sys.stderr)
            return EXIT_FALSE
    else:
        a = int(args.a)
    _check_writable(args.out)
    params = TheoremParams(args.r, delta, eps, a)
    try:
        report = verify_counterexample(params, _int_list(args.finite_n) if args.finite_n else [], threads=args.threads)
    except InfeasibleParameters as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_FALSE
    _emit(report.dumps(), args.out)
    print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.verdict else EXIT_FALSE


SCAN_COLUMNS = [
    "r", "delta", "eps", "a", "feasible",
    "density_S", "density_S_decimal",
    "partite_upper", "partite_upper_decimal",
    "ratio", "ratio_decimal",
]


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def scan_rows(r: int, delta: Fraction, eps_grid: Sequence[Fraction], a_range: Sequence[int]) -> list[dict]:
    """One row per (eps, a) in grid order; density polynomials are cached per a."""
    polys = {}
    rows = []
    for eps in eps_grid:
        for a in a_range:
            if not eps_constraint_holds(r, eps):
                feasible = "constraint_violated"
            else:
                feasible = "true" if feasibility(TheoremParams(r, delta, eps, a)) else "false"
            if a not in polys:
                polys[a] = density_polynomial(build_G(r, a), build_Q(r))
            alpha = S_alpha(r, eps)
            upper = Fraction(1, 2 ** (2 * a))
            row = {"r": r, "delta": _rat(delta), "eps": _rat(eps), "a": a, "feasible": feasible,
                   "partite_upper": _rat(upper), "partite_upper_decimal": f"{float(upper):.6e}"}
            if min(alpha) > 0:
                dens = evaluate(polys[a], alpha)
                ratio = delta * dens / upper
                row.update(density_S=_rat(dens), density_S_decimal=f"{float(dens):.6e}",
                           ratio=_rat(ratio), ratio_decimal=f"{float(ratio):.6e}")
            else:
                row.update(density_S="", density_S_decimal="", ratio="", ratio_decimal="")
            rows.append(row)
    return rows


def cmd_scan(args) -> int:
    if args.r < 4:
        raise UsageError(f"r must be >= 4, got {args.r}")
    eps_grid = _frac_list(args.eps_grid)
    a_range = _a_range(args.a_range)
    if not eps_grid or not a_range:
        raise UsageError("eps grid and a range must be nonempty")
    _check_writable(args.out)
    rows = scan_rows(args.r, parse_fraction(args.delta), eps_grid, a_range)
    if args.out is None:
        writer = csv.DictWriter(sys.stdout, fieldnames=SCAN_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        with open(args.out, "w", newline="", encoding="ascii") as fh:
            writer = csv.DictWriter(fh, fieldnames=SCAN_COLUMNS, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="genturan", description="Exact toolkit for generalized Turan number experiments.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="emit H, G, Q, S or the power-path base as JSON (and DOT)")
    p.add_argument("name", choices=["H", "G", "Q", "S", "powerpath"])
    p.add_argument("--r", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--eps")
    p.add_argument("--out")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("props", help="diameter, chromatic and clique numbers, colouring count")
    p.add_argument("graph")
    p.add_argument("--k", type=int)
    p.add_argument("--limit", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("count", help="labelled/aut/unlabelled copies of a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host")
    p.add_argument("--parts")
    p.add_argument("--out")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("density", help="density polynomial of a pattern in blow-ups of a host")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host")
    p.add_argument("--parts-count", type=int)
    p.add_argument("--alpha")
    p.add_argument("--out")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("optimize", help="best density over complete multipartite blow-ups")
    p.add_argument("--pattern", required=True)
    p.add_argument("--parts-count", type=int, required=True)
    p.add_argument("--starts", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("verify", help="certify the counterexample for given parameters")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--eps", required=True)
    p.add_argument("--a", required=True, help="positive integer or 'auto'")
    p.add_argument("--finite-n", default="")
    p.add_argument("--threads", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="CSV sweep of the parameter condition")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--eps-grid", required=True)
    p.add_argument("--a-range", required=True, help="lo:hi or comma list")
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"genturan {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
