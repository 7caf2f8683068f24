"""Command-line front end: ``kdense <subcommand> ...``.

Solver subcommands print a JSON result document on stdout.  Exit status is
0 on success, 2 on a usage error and 1 when a solver, guard or verifier
rejects the input (message on stderr).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import io
from .densest import densest_subgraph, densest_with_vertex
from .eptas import EptasConfig, eptas_topk
from .fpt import fpt_topk
from .graph import density_of, vertex_set
from .oracle import greedy_disjoint, oracle_disjoint, oracle_overlap, oracle_topk_distinct
from .reductions import (
    BisectionInstance,
    gen_from_bisection,
    gen_from_clique_partition,
    normalize_overlap_solution,
    verify_bisection_equivalence,
)
from .solution import SolutionSet

__all__ = ["build_parser", "run_cli", "main"]


class _Parser(argparse.ArgumentParser):
    # argparse already exits with status 2 on usage errors; keep that, but
    # let run_cli catch it instead of killing the interpreter
    def exit(self, status=0, message=None):
        if message:
            self._print_message(message, sys.stderr)
        raise _Exit(status)


class _Exit(Exception):
    def __init__(self, status):
        super().__init__(status)
        self.status = status


def _rational(text: str) -> Fraction:
    try:
        return io.parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _id_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kdense", description="k densest subgraphs: solvers, generators, verifiers")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("densest", help="one densest subgraph")
    d.add_argument("file")
    d.add_argument("--include-vertex", type=int, metavar="V")
    d.add_argument("--weights", metavar="FILE")

    t = sub.add_parser("topk", help="k distinct densest subgraphs")
    t.add_argument("file")
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--algo", choices=["exact", "eptas", "oracle"], required=True)
    t.add_argument("--eps", type=_rational, metavar="P/Q")

    j = sub.add_parser("disjoint", help="k pairwise disjoint subgraphs")
    j.add_argument("file")
    j.add_argument("--k", type=int, required=True)
    j.add_argument("--algo", choices=["oracle", "greedy"], required=True)

    o = sub.add_parser("overlap", help="two subgraphs with bounded overlap")
    o.add_argument("file")
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--alpha", type=_rational, required=True, metavar="P/Q")
    o.add_argument("--algo", choices=["oracle"], required=True)

    g = sub.add_parser("gen", help="write reduction instances")
    gsub = g.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    gc = gsub.add_parser("clique-partition")
    gc.add_argument("--base", required=True)
    gc.add_argument("--k", type=int, required=True)
    gc.add_argument("--out", required=True, metavar="PREFIX")
    gb = gsub.add_parser("bisection")
    gb.add_argument("--base", required=True)
    gb.add_argument("--out", required=True, metavar="PREFIX")

    v = sub.add_parser("verify", help="check reduction instances")
    vsub = v.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    vb = vsub.add_parser("bisection")
    vb.add_argument("--instance", required=True, metavar="PREFIX")
    vb.add_argument("--partition", required=True, metavar="FILE")
    vb.add_argument("--h", type=int, required=True)
    vn = vsub.add_parser("normalize")
    vn.add_argument("--instance", required=True, metavar="PREFIX")
    vn.add_argument("--v1", type=_id_list, required=True)
    vn.add_argument("--v2", type=_id_list, required=True)
    return p


def _timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, round(time.perf_counter() - start, 6)


def _cmd_densest(args, parser):
    G = io.read_graph(args.file)
    w = io.parse_weights(Path(args.weights).read_text(), G.n) if args.weights else None
    if args.include_vertex is None:
        res, wall = _timed(densest_subgraph, G, w)
        algo = "flow"
    else:
        res, wall = _timed(densest_with_vertex, G, args.include_vertex, w)
        algo = "flow-pinned"
    sol = SolutionSet((res.vertices,), (res.density,), res.density, algo)
    return io.result_document("densest", sol, k=1, wall_time=wall)


def _cmd_topk(args, parser):
    if args.algo == "eptas" and args.eps is None:
        parser.error("--algo eptas requires --eps P/Q")
    if args.algo != "eptas" and args.eps is not None:
        parser.error("--eps only applies to --algo eptas")
    G = io.read_graph(args.file)
    if args.algo == "eptas":
        sol, wall = _timed(eptas_topk, G, EptasConfig(args.k, args.eps))
    elif args.algo == "exact":
        sol, wall = _timed(fpt_topk, G, args.k)
    else:
        sol, wall = _timed(oracle_topk_distinct, G, args.k)
    return io.result_document("distinct", sol, k=args.k, eps=args.eps, wall_time=wall)


def _cmd_disjoint(args, parser):
    G = io.read_graph(args.file)
    fn = oracle_disjoint if args.algo == "oracle" else greedy_disjoint
    sol, wall = _timed(fn, G, args.k)
    return io.result_document("disjoint", sol, k=args.k, wall_time=wall)


def _cmd_overlap(args, parser):
    G = io.read_graph(args.file)
    sol, wall = _timed(oracle_overlap, G, args.k, args.alpha)
    return io.result_document("overlap", sol, k=args.k, alpha=args.alpha, wall_time=wall)


def _cmd_gen(args, parser):
    base = io.read_graph(args.base)
    if args.kind == "bisection":
        inst = gen_from_bisection(base)
    else:
        inst = gen_from_clique_partition(base, args.k)
    graph_path, meta_path = io.write_instance(args.out, inst)
    return {"graph": str(graph_path), "metadata": str(meta_path),
            "n": inst.built.n, "m": inst.built.m}


def _read_partition(path):
    rows = [line.split() for line in Path(path).read_text().splitlines()
            if line.strip() and not line.lstrip().startswith("#")]
    if len(rows) != 2:
        raise ValueError(f"partition file must have two non-comment lines, found {len(rows)}")
    return tuple([int(x) for x in row] for row in rows)


def _bisection_instance(prefix):
    inst = io.read_instance(prefix)
    if not isinstance(inst, BisectionInstance):
        raise ValueError(f"{prefix} is not a bisection instance")
    return inst


def _cmd_verify(args, parser):
    inst = _bisection_instance(args.instance)
    if args.kind == "bisection":
        part = _read_partition(args.partition)
        ok = verify_bisection_equivalence(inst, part, args.h)
        return {"check": "bisection", "h": args.h, "holds": ok}
    Y1, Y2 = normalize_overlap_solution(inst, args.v1, args.v2)
    G = inst.built
    sol = SolutionSet.from_sets(G, [Y1, Y2], "normalize")
    doc = io.result_document("overlap", sol, k=2, alpha=Fraction(2, 3))
    doc["input_total"] = str(density_of(G, vertex_set(args.v1)) + density_of(G, vertex_set(args.v2)))
    return doc


_COMMANDS = {
    "densest": _cmd_densest,
    "topk": _cmd_topk,
    "disjoint": _cmd_disjoint,
    "overlap": _cmd_overlap,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
}


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
            doc = _COMMANDS[args.command](args, parser)
    except _Exit as exc:
        return exc.status
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"kdense: error: {exc}", file=stderr)
        return 1
    stdout.write(json.dumps(doc, indent=2) + "\n")
    if doc.get("holds") is False:
        return 1
    return 0


def main() -> None:
    sys.exit(run_cli())
