"""Roundtrip spanners of directed weighted graphs.

Builds subgraphs that preserve all roundtrip distances within a stretch
of 2k-1, using deterministic ball-growing constructions, and certifies
the guarantee exactly with brute-force all-pairs oracles.
"""

from .cover_basic import (
    CoverTrace,
    SpannerResult,
    cover_scale,
    select_step_count,
    spanner_basic,
)
from .cover_strong import (
    ContractedGraph,
    component_in_out_trees,
    component_roundtrip_from,
    contract_by_girth,
    cover_scale_contracted,
    edge_girths,
    spanner_strong,
)
from .errors import (
    GraphFormatError,
    InvariantViolation,
    MalformedInputError,
    ParameterError,
    WeightDomainError,
)
from .estimator import RoundtripSpanner, check_adjacency
from .fileio import RunStats, parse_graph, read_graph_file, write_graph, write_graph_file
from .generate import MODELS, generate
from .graph import Graph, GraphView, build_graph, induced_view
from .radius import RadiusMap, build_hub_trees, compute_radii, hitting_set, rank_threshold
from .sssp import DistanceMap, ball, dijkstra, in_out_trees, roundtrip_from
from .verify import StretchReport, all_pairs_roundtrip, verify_size, verify_stretch

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphView",
    "build_graph",
    "induced_view",
    "DistanceMap",
    "dijkstra",
    "roundtrip_from",
    "ball",
    "in_out_trees",
    "RadiusMap",
    "rank_threshold",
    "compute_radii",
    "hitting_set",
    "build_hub_trees",
    "CoverTrace",
    "SpannerResult",
    "select_step_count",
    "cover_scale",
    "spanner_basic",
    "edge_girths",
    "ContractedGraph",
    "contract_by_girth",
    "component_roundtrip_from",
    "component_in_out_trees",
    "cover_scale_contracted",
    "spanner_strong",
    "StretchReport",
    "all_pairs_roundtrip",
    "verify_stretch",
    "verify_size",
    "parse_graph",
    "write_graph",
    "read_graph_file",
    "write_graph_file",
    "RunStats",
    "MODELS",
    "generate",
    "RoundtripSpanner",
    "check_adjacency",
    "MalformedInputError",
    "WeightDomainError",
    "ParameterError",
    "GraphFormatError",
    "InvariantViolation",
]
