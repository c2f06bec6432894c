"""Command-line front end.

Subcommands: analyze (structural stats), gamma (Grundy number via the best
applicable engine), decide (is the Grundy number >= k), gen (reproducible
fixture generators). Reports are printed as text or, with --json, as a
single versioned JSON object. Exit codes: 0 success, 1 parse error,
2 method/graph mismatch, 3 decision guard (k outside the girth guarantee).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import generators
from .blockgraph import gamma_block_graph, witness_for_block_gamma
from .exceptions import GraphParseError, KTooLargeForGirth, TooLarge
from .graph import Graph
from .io import format_coloring, format_edge_list, load_graph
from .largegirth import MODE_EXACT, approx_gamma, decide_gamma_at_least, exact_gamma_large_girth
from .oracle import (
    brute_force_gamma,
    brute_force_gamma_witness,
    is_grundy_coloring,
    resolve_cap,
)
from .structure import _biconnected_components, degree_profile, girth

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_METHOD_MISMATCH = 2
EXIT_GUARD = 3

METHOD_BLOCK = "BlockExact"
METHOD_GIRTH = "LargeGirthExact"
METHOD_APPROX = "Approx"
METHOD_ORACLE = "OracleExact"


class _MethodMismatch(Exception):
    pass


def _structure_stats(g: Graph) -> dict:
    prof = degree_profile(g)
    g_val = girth(g)
    blocks, block_edges, cut = _biconnected_components(g)
    is_block = all(
        len(es) == len(b) * (len(b) - 1) // 2 for b, es in zip(blocks, block_edges)
    )
    counts: dict[int, int] = {}
    for b in blocks:
        for v in b:
            if v in cut:
                counts[v] = counts.get(v, 0) + 1
    beta = max((len(b) for b in blocks), default=1 if g.n else 0)
    return {
        "girth": None if g_val == float("inf") else int(g_val),
        "max_degree": prof.max_degree,
        "delta2": prof.delta2,
        "is_block_graph": is_block,
        "beta": beta,
        "delta_tilde": max(counts.values(), default=0),
        "cut_vertex_count": len(cut),
        "omega": beta if is_block else None,
    }


def _girth_threshold_met(stats) -> bool:
    g_val = stats["girth"]
    return g_val is None or g_val >= 2 * stats["delta2"] + 1


def _load(args):
    t0 = time.perf_counter()
    if args.input == "-":
        text = sys.stdin.read()
        from .io import load_graph_text

        g, dup = load_graph_text(text, args.format)
        path = "<stdin>"
    else:
        g, dup = load_graph(args.input, args.format)
        path = args.input
    parse_ms = (time.perf_counter() - t0) * 1000.0
    return g, dup, path, parse_ms


def _emit(args, report: dict, text_lines: list[str]):
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _girth_str(stats) -> str:
    return "infinite" if stats["girth"] is None else str(stats["girth"])


def _base_report(command, path, args, g, dup, stats, parse_ms, decompose_ms) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": {
            "path": path,
            "format": args.format,
            "n": g.n,
            "m": g.m,
            "components": len(g.components()),
            "duplicate_edges_ignored": dup,
        },
        "structure": stats,
        "timing_ms": {"parse": round(parse_ms, 3), "decompose": round(decompose_ms, 3)},
    }


def cmd_analyze(args) -> int:
    g, dup, path, parse_ms = _load(args)
    t0 = time.perf_counter()
    stats = _structure_stats(g)
    decompose_ms = (time.perf_counter() - t0) * 1000.0
    report = _base_report("analyze", path, args, g, dup, stats, parse_ms, decompose_ms)
    lines = [
        f"n={g.n} m={g.m} components={report['input']['components']}"
        f" duplicates_ignored={dup}",
        f"girth={_girth_str(stats)} max_degree={stats['max_degree']}"
        f" delta2={stats['delta2']}",
        f"block_graph={'yes' if stats['is_block_graph'] else 'no'}"
        f" beta={stats['beta']} delta_tilde={stats['delta_tilde']}"
        f" cut_vertices={stats['cut_vertex_count']}",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def _write_witness(args, g, coloring) -> dict | None:
    if not getattr(args, "witness", None):
        return None
    if coloring is None or not is_grundy_coloring(g, coloring):
        raise AssertionError("refusing to write an invalid witness")
    with open(args.witness, "w", encoding="utf-8") as fh:
        fh.write(format_coloring(coloring))
    return {"path": args.witness, "colors_used": coloring.num_colors}


def _solve_gamma(args, g, stats):
    """Returns (method, lower, upper, ratio: Fraction, witness coloring)."""
    method = args.method
    if method == "auto":
        if stats["is_block_graph"]:
            method = "block"
        elif _girth_threshold_met(stats):
            method = "girth"
        else:
            method = "approx"
    want_witness = bool(getattr(args, "witness", None))
    if method == "block":
        if not stats["is_block_graph"]:
            raise _MethodMismatch("--method block requires a block graph")
        value, _ = gamma_block_graph(g, threads=args.threads)
        witness = witness_for_block_gamma(g) if want_witness else None
        return METHOD_BLOCK, value, value, Fraction(1), witness
    if method == "girth":
        if not _girth_threshold_met(stats):
            raise _MethodMismatch(
                "--method girth requires girth >= 2*delta2+1 "
                f"(girth {_girth_str(stats)}, delta2 {stats['delta2']})"
            )
        value, witness = exact_gamma_large_girth(g, threads=args.threads)
        return METHOD_GIRTH, value, value, Fraction(1), witness
    if method == "oracle":
        cap = resolve_cap(args.oracle_cap)
        if g.n > cap:
            raise _MethodMismatch(f"--method oracle capped at n={cap}, got n={g.n}")
        value = brute_force_gamma(g, cap)
        witness = brute_force_gamma_witness(g, cap) if want_witness else None
        return METHOD_ORACLE, value, value, Fraction(1), witness
    if method == "approx":
        rep = approx_gamma(g)
        if rep.mode == MODE_EXACT:
            return METHOD_APPROX, rep.value, rep.value, Fraction(1), rep.witness
        return METHOD_APPROX, rep.value, rep.upper_bound, rep.ratio_guarantee, rep.witness
    raise _MethodMismatch(f"unknown method {method!r}")


def cmd_gamma(args) -> int:
    g, dup, path, parse_ms = _load(args)
    t0 = time.perf_counter()
    stats = _structure_stats(g)
    decompose_ms = (time.perf_counter() - t0) * 1000.0
    t1 = time.perf_counter()
    try:
        method, lower, upper, ratio, witness = _solve_gamma(args, g, stats)
    except _MethodMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_METHOD_MISMATCH
    solve_ms = (time.perf_counter() - t1) * 1000.0
    witness_info = _write_witness(args, g, witness)
    report = _base_report("gamma", path, args, g, dup, stats, parse_ms, decompose_ms)
    report["method"] = method
    report["gamma"] = {
        "lower": lower,
        "upper": upper,
        "exact": lower == upper,
        "ratio_guarantee": float(ratio),
        "ratio_fraction": str(ratio),
    }
    report["witness"] = witness_info
    report["timing_ms"]["solve"] = round(solve_ms, 3)
    if lower == upper:
        gamma_line = f"gamma: {lower} (exact)"
    else:
        gamma_line = f"gamma: between {lower} and {upper} (certified ratio {ratio})"
    lines = [
        f"n={g.n} m={g.m} girth={_girth_str(stats)} delta2={stats['delta2']}"
        f" block_graph={'yes' if stats['is_block_graph'] else 'no'}",
        f"method: {method}",
        gamma_line,
    ]
    if witness_info:
        lines.append(
            f"witness: {witness_info['path']} ({witness_info['colors_used']} colors)"
        )
    _emit(args, report, lines)
    return EXIT_OK


def cmd_decide(args) -> int:
    g, dup, path, parse_ms = _load(args)
    t0 = time.perf_counter()
    stats = _structure_stats(g)
    decompose_ms = (time.perf_counter() - t0) * 1000.0
    t1 = time.perf_counter()
    try:
        answer, witness = decide_gamma_at_least(g, args.k, threads=args.threads)
    except KTooLargeForGirth as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    solve_ms = (time.perf_counter() - t1) * 1000.0
    witness_info = _write_witness(args, g, witness) if answer else None
    report = _base_report("decide", path, args, g, dup, stats, parse_ms, decompose_ms)
    report["k"] = args.k
    report["answer"] = answer
    report["witness"] = witness_info
    report["timing_ms"]["solve"] = round(solve_ms, 3)
    lines = [f"gamma >= {args.k}: {'yes' if answer else 'no'}"]
    if witness_info:
        lines.append(
            f"witness: {witness_info['path']} ({witness_info['colors_used']} colors)"
        )
    _emit(args, report, lines)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "tree":
        if len(args.params) != 1:
            print("error: gen tree needs one parameter: n", file=sys.stderr)
            return EXIT_PARSE_ERROR
        g = generators.random_tree(args.params[0], args.seed)
    elif args.kind == "blockgraph":
        if len(args.params) != 2:
            print("error: gen blockgraph needs parameters: n max_block", file=sys.stderr)
            return EXIT_PARSE_ERROR
        g = generators.random_block_graph(args.params[0], args.params[1], args.seed)
    elif args.kind == "cliquefamily":
        if len(args.params) != 2:
            print("error: gen cliquefamily needs parameters: t p", file=sys.stderr)
            return EXIT_PARSE_ERROR
        from .blockgraph import generate_clique_family

        g = generate_clique_family(args.params[0], args.params[1])
    elif args.kind == "cycle":
        if len(args.params) != 1:
            print("error: gen cycle needs one parameter: n", file=sys.stderr)
            return EXIT_PARSE_ERROR
        g = generators.cycle(args.params[0])
    else:
        print(f"error: unknown generator {args.kind!r}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    text = format_edge_list(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_input_options(p):
    p.add_argument("input", help="graph file, or - for stdin")
    p.add_argument(
        "--format",
        choices=["auto", "edgelist", "dimacs"],
        default="auto",
        help="input format (default: sniffed)",
    )
    p.add_argument("--json", action="store_true", help="emit a JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grundy",
        description="Grundy (First-Fit) chromatic number toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="structural statistics only")
    _add_input_options(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gamma", help="compute the Grundy number")
    _add_input_options(p)
    p.add_argument(
        "--method",
        choices=["auto", "block", "girth", "approx", "oracle"],
        default="auto",
        help="engine selection (default: auto routing)",
    )
    p.add_argument("--witness", metavar="PATH", help="write a validated coloring")
    p.add_argument("--threads", type=int, default=1, help="parallel driver width")
    p.add_argument(
        "--oracle-cap",
        type=int,
        default=None,
        help="override the oracle size cap (also GRUNDY_ORACLE_CAP)",
    )
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("decide", help="decide whether gamma >= k")
    _add_input_options(p)
    p.add_argument("k", type=int)
    p.add_argument("--witness", metavar="PATH", help="write a validated coloring")
    p.add_argument("--threads", type=int, default=1, help="parallel driver width")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    p.add_argument("kind", choices=["tree", "blockgraph", "cliquefamily", "cycle"])
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", metavar="PATH")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_METHOD_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
