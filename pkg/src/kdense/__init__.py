"""k densest subgraphs: exact flow primitives, top-k solvers, oracles and reductions."""

from .densest import (
    DensestResult,
    densest_strict_supergraph,
    densest_subgraph,
    densest_with_vertex,
    peel_half_approx,
    weighted_extension,
)
from .eptas import EptasConfig, eptas_topk
from .fpt import fpt_topk, next_densest_distinct
from .graph import (
    Graph,
    GraphError,
    build_graph,
    complete_graph,
    density_of,
    disjoint_union,
    induced_edge_count,
    min_degree_vertex,
)
from .io import format_edge_list, load_result, parse_edge_list, read_graph, result_document
from .maxflow import FlowNetwork, max_flow_min_cut
from .oracle import (
    DISJOINT,
    DISTINCT,
    check_feasible,
    greedy_disjoint,
    oracle_disjoint,
    oracle_overlap,
    oracle_topk_distinct,
    overlap,
)
from .reductions import (
    bisection_value,
    gen_from_bisection,
    gen_from_clique_partition,
    min_bisection_cut,
    normalize_overlap_solution,
    verify_bisection_equivalence,
)
from .solution import InfeasibleError, SolutionSet

__version__ = "0.1.0"
