"""Interval edge-colorings of graph products: exact solver, constructive
colorings, bound evaluators, and a CLI."""

from .bounds import (BoundEntry, BoundError, BoundQuery, CATALOG, TreeParams,
                     bound_eval, odd_decomposition, tree_L, tree_params)
from .coloring import (EdgeColoring, PaletteInfo, Verdict, Violation,
                       reverse_coloring, verify_interval, vertex_palette)
from .constructions import (BlockPlan, combine_cartesian, double_regular,
                            hypercube_max, konig_decompose, lex_blocks,
                            round_robin, strong_blocks, strong_tensor_blocks,
                            tensor_blocks)
from .graphs import (FAMILIES, Graph, GraphError, GraphStats,
                     SearchGuardError, build_graph, chromatic_index, family,
                     proper_edge_coloring, stats)
from .products import PRODUCT_KINDS, hamming, product
from .solver import (DecideResult, Inconclusive, IntervalSummary, decide_t,
                     greatest_W, least_w, summary, theorem2_upper)

__version__ = "0.1.0"

__all__ = [
    "BlockPlan", "BoundEntry", "BoundError", "BoundQuery", "CATALOG",
    "DecideResult", "EdgeColoring", "FAMILIES", "Graph", "GraphError",
    "GraphStats", "Inconclusive", "IntervalSummary", "PaletteInfo",
    "PRODUCT_KINDS", "SearchGuardError", "TreeParams", "Verdict", "Violation",
    "bound_eval", "build_graph", "chromatic_index", "combine_cartesian",
    "decide_t", "double_regular", "family", "greatest_W", "hamming",
    "hypercube_max", "konig_decompose", "least_w", "lex_blocks",
    "odd_decomposition", "product", "proper_edge_coloring", "reverse_coloring",
    "round_robin", "stats", "strong_blocks", "strong_tensor_blocks", "summary",
    "tensor_blocks", "theorem2_upper", "tree_L", "tree_params",
    "verify_interval", "vertex_palette",
]
