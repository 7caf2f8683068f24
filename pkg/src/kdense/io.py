"""Edge-list files, weight files, result documents and instance sidecars.

Edge-list format::

    # comments and blank lines are ignored
    n m
    u v        (m lines, 0-based ids)

Weights file: one ``v w`` pair per line, ``w`` a non-negative integer.
Densities in result documents are exact ``"p/q"`` strings (``"5"`` for
integers) with a float approximation alongside.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .graph import Graph, GraphError, build_graph, density_of
from .reductions import BisectionInstance, CliquePartitionInstance
from .solution import SolutionSet

__all__ = [
    "EdgeListError",
    "ResultError",
    "parse_edge_list",
    "format_edge_list",
    "read_graph",
    "parse_weights",
    "parse_rational",
    "result_document",
    "dump_result",
    "load_result",
    "write_instance",
    "read_instance",
]


class EdgeListError(GraphError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class ResultError(ValueError):
    pass


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, raw


def _ints(raw: str, lineno: int, count: int) -> list[int]:
    tokens = raw.split()
    if len(tokens) != count:
        raise EdgeListError(f"expected {count} integers, found {len(tokens)} tokens", lineno)
    out = []
    col = 0
    for tok in tokens:
        col = raw.index(tok, col) + 1
        try:
            out.append(int(tok))
        except ValueError:
            raise EdgeListError(f"bad token {tok!r}", lineno, col) from None
        col += len(tok) - 1
    return out


def parse_edge_list(text: str) -> Graph:
    lines = list(_content_lines(text))
    if not lines:
        raise EdgeListError("missing header line 'n m'")
    head_no, head = lines[0]
    n, m = _ints(head, head_no, 2)
    if n < 0 or m < 0:
        raise EdgeListError("header values must be non-negative", head_no)
    body = lines[1:]
    if len(body) != m:
        raise EdgeListError(f"header declares m={m} but {len(body)} edge lines follow", head_no)
    seen = set()
    pairs = []
    for lineno, raw in body:
        u, v = _ints(raw, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"endpoint out of range [0, {n})", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        pairs.append((u, v))
    return build_graph(n, pairs)


def format_edge_list(G: Graph) -> str:
    return "".join([f"{G.n} {G.m}\n"] + [f"{u} {v}\n" for u, v in G.edges])


def read_graph(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def parse_weights(text: str, n: int | None = None) -> dict[int, int]:
    weights: dict[int, int] = {}
    for lineno, raw in _content_lines(text):
        v, w = _ints(raw, lineno, 2)
        if w < 0:
            raise EdgeListError(f"negative weight {w}", lineno)
        if v < 0 or (n is not None and v >= n):
            raise EdgeListError(f"weighted vertex {v} out of range", lineno)
        weights[v] = w
    return weights


def parse_rational(text: str) -> Fraction:
    """Parse ``"P/Q"`` or an integer into an exact :class:`Fraction`."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def _rational(x: Fraction | None) -> str | None:
    return None if x is None else str(Fraction(x))


def result_document(problem: str, solution: SolutionSet, *, k: int | None = None,
                    eps: Fraction | None = None, alpha: Fraction | None = None,
                    wall_time: float = 0.0) -> dict[str, Any]:
    return {
        "problem": problem,
        "algorithm": solution.algorithm,
        "parameters": {"k": k, "eps": _rational(eps), "alpha": _rational(alpha)},
        "subgraphs": [
            {"vertices": list(S), "density": str(d), "density_decimal": float(d)}
            for S, d in zip(solution.subgraphs, solution.densities)
        ],
        "total": str(solution.total),
        "total_decimal": float(solution.total),
        "wall_time": wall_time,
    }


def dump_result(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_result(text: str, G: Graph | None = None, weights=None) -> dict[str, Any]:
    """Parse a result document; with ``G`` every density is re-checked exactly."""
    doc = json.loads(text)
    try:
        subs = [(list(s["vertices"]), Fraction(s["density"])) for s in doc["subgraphs"]]
        total = Fraction(doc["total"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ResultError(f"malformed result document: {exc}") from None
    if any(S != sorted(set(S)) for S, _ in subs):
        raise ResultError("vertex lists must be sorted and duplicate-free")
    if sum((d for _, d in subs), Fraction(0)) != total:
        raise ResultError("total does not equal the sum of densities")
    if G is not None:
        for S, d in subs:
            actual = density_of(G, S, weights)
            if actual != d:
                raise ResultError(f"subgraph {S}: recorded density {d}, actual {actual}")
    return doc


def write_instance(prefix, inst: BisectionInstance | CliquePartitionInstance) -> tuple[Path, Path]:
    """Write ``<prefix>.el`` (built graph) and ``<prefix>.json`` (metadata)."""
    from .reductions import bisection_value

    prefix = Path(prefix)
    graph_path = prefix.with_name(prefix.name + ".el")
    meta_path = prefix.with_name(prefix.name + ".json")
    base_edges = [list(e) for e in inst.base.edges]
    if isinstance(inst, BisectionInstance):
        nB, mB = inst.base.n, inst.base.m
        meta = {
            "kind": "bisection",
            "n_B": nB,
            "m_B": mB,
            "alpha": "2/3",
            "clique_ids": list(inst.clique_ids),
            "base_ids": list(inst.base_ids),
            "base_edges": base_edges,
            "value_by_cut": {str(h): str(bisection_value(nB, mB, h)) for h in range(mB + 1)},
        }
    else:
        nV = inst.base.n
        meta = {
            "kind": "clique-partition",
            "n_base": nV,
            "m_base": inst.base.m,
            "k": inst.k,
            "threshold": str(inst.threshold),
            "base_ids": list(range(nV)),
            "padding_cliques": [list(range(nV * (j + 1), nV * (j + 2))) for j in range(inst.k - 3)],
            "base_edges": base_edges,
        }
    graph_path.write_text(format_edge_list(inst.built))
    meta_path.write_text(json.dumps(meta, indent=2) + "\n")
    return graph_path, meta_path


def read_instance(prefix) -> BisectionInstance | CliquePartitionInstance:
    from .reductions import gen_from_bisection, gen_from_clique_partition

    prefix = Path(prefix)
    meta = json.loads(prefix.with_name(prefix.name + ".json").read_text())
    built = read_graph(prefix.with_name(prefix.name + ".el"))
    if meta.get("kind") == "bisection":
        base = build_graph(meta["n_B"], meta["base_edges"])
        inst = gen_from_bisection(base)
    elif meta.get("kind") == "clique-partition":
        base = build_graph(meta["n_base"], meta["base_edges"])
        inst = gen_from_clique_partition(base, meta["k"])
    else:
        raise ValueError(f"unknown instance kind {meta.get('kind')!r}")
    if inst.built != built:
        raise ValueError("edge-list file does not match the instance metadata")
    return inst
