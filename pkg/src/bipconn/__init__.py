"""Spanning bipartite subgraphs with high vertex connectivity."""

from .connectivity import (
    SeparatorWitness,
    disjoint_paths,
    edge_connectivity,
    is_k_connected,
    min_separator,
    separator_witness,
    vertex_connectivity,
)
from .errors import InternalConsistencyError, PreconditionViolation, RetryExhausted
from .graph import BLUE, RED, BipartiteCertificate, Digraph, Graph, TwoColoring
from .io import parse_digraph_file, parse_graph, parse_graph_file
from .merge import absorb_vertex, union_parts
from .oracle import best_bipartite_kappa, has_spanning_bipartite_k
from .peel import peel, peel_linear, peel_log
from .pipeline import PipelineParams, PipelineResult, params_for, run
from .span2 import span2connected

__all__ = [
    "BLUE", "RED", "BipartiteCertificate", "Digraph", "Graph", "InternalConsistencyError",
    "PipelineParams", "PipelineResult", "PreconditionViolation", "RetryExhausted",
    "SeparatorWitness", "TwoColoring", "absorb_vertex", "best_bipartite_kappa",
    "disjoint_paths", "edge_connectivity", "has_spanning_bipartite_k", "is_k_connected",
    "min_separator", "params_for", "parse_digraph_file", "parse_graph", "parse_graph_file",
    "peel", "peel_linear", "peel_log", "run", "separator_witness", "span2connected",
    "union_parts", "vertex_connectivity",
]
