"""Command-line frontend.

Subcommands: bounds, gen, check, color, decompose, oracle.  Machine
consumers get JSON on stdout (schema shipped in schemas/output.schema.json)
and a three-way exit code: 0 for success or a positive check, 1 for a
negative finding (violation, coloring failure, threshold not reached),
2 for usage errors.  Internal computation is single-process; --jobs is
accepted for interface stability and values above 1 are ignored.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds as bounds_mod
from .coloring import (
    FailureReport,
    exact_chromatic,
    recursive_carve_coloring,
    search_coloring,
    verify_coloring,
)
from .constructions import SchrijverParams, cycle_graph, mycielski, schrijver_graph
from .decomposition import carve, carve_by_order, verify_carve
from .formats import FormatError, format_dimacs, read_graph
from .graphs import Graph
from .oddgirth import (
    SphereIndependenceError,
    check_sphere_independence,
    odd_cycle_from_violation,
    shortest_odd_cycle,
)
from .oracle import exact_threshold


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _graph_json(g: Graph) -> dict:
    return {"vertex_count": g.vertex_count, "edges": [list(e) for e in g.edges()]}


def _violation_json(v) -> dict:
    return {"center": v.center, "radius": v.radius, "edge": list(v.edge)}


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddchrom",
        description="Toolkit for graphs without short odd cycles.",
    )
    parser.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; runs single-process")
    parser.add_argument("--seed", type=int, default=1, help="seed for randomized helpers (none of the subcommands draw randomness)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="evaluate every bound formula over a grid")
    p_bounds.add_argument("--n", required=True, help="value or range, e.g. 2 or 2..6")
    p_bounds.add_argument("--k", required=True, help="value or range, e.g. 2 or 2..4")
    p_bounds.add_argument("--format", choices=["csv", "markdown", "json"], default="csv")

    p_gen = sub.add_parser("gen", help="generate a witness graph as DIMACS")
    gen_sub = p_gen.add_subparsers(dest="kind", required=True)
    g_schr = gen_sub.add_parser("schrijver")
    g_schr.add_argument("--m", type=int, required=True)
    g_schr.add_argument("--d", type=int, required=True)
    g_schr.add_argument("--max-vertices", type=int, default=None)
    g_schr.add_argument("--out", default=None)
    g_cycle = gen_sub.add_parser("cycle")
    g_cycle.add_argument("--length", "--len", dest="length", type=int, required=True)
    g_cycle.add_argument("--out", default=None)
    g_myc = gen_sub.add_parser("mycielski")
    g_myc.add_argument("--input", required=True)
    g_myc.add_argument("--out", default=None)

    p_check = sub.add_parser("check", help="sphere independence and odd girth report")
    p_check.add_argument("--input", required=True)
    p_check.add_argument("--k", type=int, required=True)

    p_color = sub.add_parser("color", help="color a graph with at most n colors")
    p_color.add_argument("--input", required=True)
    p_color.add_argument("--n", type=int, required=True)
    p_color.add_argument("--k", type=int, default=None, help="odd girth parameter, required for --method carve")
    p_color.add_argument("--method", choices=["exact", "carve"], default="exact")
    p_color.add_argument("--budget", type=int, default=None, help="node budget for the exact solver")
    p_color.add_argument("--rule", choices=["first", "min_ball"], default="first")
    p_color.add_argument("--threshold", choices=["ball", "order"], default="ball")

    p_dec = sub.add_parser("decompose", help="ball carving partition")
    p_dec.add_argument("--input", required=True)
    p_dec.add_argument("--k", type=int, required=True)
    p_dec.add_argument("--rule", choices=["first", "min_ball"], default="first")
    p_dec.add_argument("--threshold", choices=["ball", "order"], default="ball")

    p_oracle = sub.add_parser("oracle", help="exact colorability threshold by enumeration")
    p_oracle.add_argument("--n", type=int, required=True)
    p_oracle.add_argument("--k", type=int, required=True)
    p_oracle.add_argument("--vmax", type=int, required=True)
    p_oracle.add_argument("--witness-out", default=None)
    p_oracle.add_argument("--cap", type=int, default=None, help="override the enumeration size cap")

    return parser


def _cmd_bounds(args) -> int:
    n_values = _parse_range(args.n)
    k_values = _parse_range(args.k)
    if min(n_values) < 1 or min(k_values) < 2:
        raise ValueError("need n >= 1 and k >= 2")
    sys.stdout.write(bounds_mod.bounds_table(n_values, k_values, args.format))
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "schrijver":
        params = SchrijverParams(args.m, args.d)
        g, labels = schrijver_graph(params, max_vertices=args.max_vertices)
        comments = [f"schrijver graph m={args.m} d={args.d}"]
        comments.extend(
            f"vertex {i + 1} = {{{','.join(map(str, label))}}}" for i, label in enumerate(labels)
        )
    elif args.kind == "cycle":
        g = cycle_graph(args.length)
        comments = [f"cycle of length {args.length}"]
    else:
        base = read_graph(args.input)
        g = mycielski(base)
        comments = [f"mycielski extension of {args.input}"]
    text = format_dimacs(g, tuple(comments))
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return 0


def _cmd_check(args) -> int:
    g = read_graph(args.input)
    violation = check_sphere_independence(g, args.k)
    cycle = shortest_odd_cycle(g)
    payload = {
        "command": "check",
        "input": args.input,
        "k": args.k,
        "vertex_count": g.vertex_count,
        "edge_count": g.edge_count,
        "required_min_odd_girth": 2 * args.k + 1,
        "sphere_independent": violation is None,
        "violation": None if violation is None else _violation_json(violation),
        "violation_odd_cycle": (
            None if violation is None else list(odd_cycle_from_violation(g, violation).vertices)
        ),
        "odd_girth": None if cycle is None else cycle.length,
        "odd_cycle": None if cycle is None else list(cycle.vertices),
        "ok": violation is None,
    }
    _emit(payload)
    return 0 if violation is None else 1


def _cmd_color(args) -> int:
    g = read_graph(args.input)
    payload = {
        "command": "color",
        "input": args.input,
        "method": args.method,
        "n": args.n,
        "k": args.k,
        "success": False,
        "coloring": None,
        "num_colors": None,
        "chromatic_number": None,
        "failure": None,
    }
    if args.method == "exact":
        budget = args.budget if args.budget is not None else 10_000_000
        result = exact_chromatic(g, budget=budget)
        payload["chromatic_number"] = result.value
        if result.status == "budget_exceeded":
            payload["failure"] = {
                "type": "budget_exceeded",
                "lower": result.lower,
                "upper": result.upper,
                "nodes": result.nodes,
            }
        elif result.value is not None and result.value <= args.n:
            witness = result.coloring
            assert verify_coloring(g, witness) is None
            payload["success"] = True
            payload["coloring"] = list(witness.assignment)
            payload["num_colors"] = witness.num_colors
        else:
            payload["failure"] = {
                "type": "not_n_colorable",
                "chromatic_number": result.value,
            }
    else:
        if args.k is None:
            raise ValueError("--method carve requires --k")
        try:
            outcome = recursive_carve_coloring(
                g, args.n, args.k, center_rule=args.rule, order_threshold=args.threshold == "order"
            )
        except SphereIndependenceError as err:
            payload["failure"] = {
                "type": "sphere_independence_violation",
                "violation": _violation_json(err.violation),
            }
            _emit(payload)
            return 1
        if isinstance(outcome, FailureReport):
            payload["failure"] = {"type": "carve_failure", **outcome.to_json()}
        else:
            assert verify_coloring(g, outcome) is None
            payload["success"] = True
            payload["coloring"] = list(outcome.assignment)
            payload["num_colors"] = outcome.num_colors
    _emit(payload)
    return 0 if payload["success"] else 1


def _cmd_decompose(args) -> int:
    g = read_graph(args.input)
    run = carve_by_order if args.threshold == "order" else carve
    try:
        result = run(g, args.k, center_rule=args.rule)
    except SphereIndependenceError as err:
        _emit(
            {
                "command": "decompose",
                "input": args.input,
                "k": args.k,
                "error": "sphere_independence_violation",
                "violation": _violation_json(err.violation),
            }
        )
        return 1
    payload = {
        "command": "decompose",
        "input": args.input,
        "k": args.k,
        "center_rule": args.rule,
        "threshold_rule": args.threshold,
        "invariants": verify_carve(g, result),
        **result.to_json(),
    }
    _emit(payload)
    return 0


def _cmd_oracle(args) -> int:
    result = exact_threshold(args.n, args.k, args.vmax, cap=args.cap)
    witness_path = None
    certificate = None
    witness_json = None
    if result.witness is not None:
        witness_json = _graph_json(result.witness)
        cycle = shortest_odd_cycle(result.witness)
        assert search_coloring(result.witness, args.n) is None
        certificate = {
            "required_min_odd_girth": 2 * args.k + 1,
            "witness_odd_girth": None if cycle is None else cycle.length,
            "colors": args.n,
            "colorable": False,
        }
        if args.witness_out is not None:
            Path(args.witness_out).write_text(
                format_dimacs(
                    result.witness,
                    (f"threshold witness n={args.n} k={args.k} value={result.value}",),
                )
            )
            witness_path = args.witness_out
    _emit(
        {
            "command": "oracle",
            "n": args.n,
            "k": args.k,
            "v_max": args.vmax,
            "status": result.status,
            "value": result.value,
            "vertices_searched": result.vertices_searched,
            "witness": witness_json,
            "witness_path": witness_path,
            "certificate": certificate,
        }
    )
    return 0 if result.status == "exact" else 1


_DISPATCH = {
    "bounds": _cmd_bounds,
    "gen": _cmd_gen,
    "check": _cmd_check,
    "color": _cmd_color,
    "decompose": _cmd_decompose,
    "oracle": _cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except (FormatError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
