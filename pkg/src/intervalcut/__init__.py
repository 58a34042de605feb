"""Max-Cut on interval and split graphs beyond the plain hyperplane-rounding guarantee."""

from .decompose import DecompositionOutcome, accounting_check, interval_maxcut, split_tradeoff
from .graph import Cut, Graph, SplitPartition, cut_size, find_bridges, find_split_partition, two_color_edge_set
from .intervals import IntervalModel, bag_at, classify, event_points, min_bag
from .oracle import exact_maxcut, exact_triangle_packing, is_chordal
from .packing import TrianglePacking, pack_bag, pack_clique, verify_packing
from .rounding import RoundingConfig, pipeline_solve, round_gw, round_perturbed
from .sdp import VectorSolution, alpha_gw_constants, angle_profile, solve_sdp

__all__ = [
    "Cut", "DecompositionOutcome", "Graph", "IntervalModel", "RoundingConfig", "SplitPartition",
    "TrianglePacking", "VectorSolution", "accounting_check", "alpha_gw_constants", "angle_profile",
    "bag_at", "classify", "cut_size", "event_points", "exact_maxcut", "exact_triangle_packing",
    "find_bridges", "find_split_partition", "interval_maxcut", "is_chordal", "min_bag", "pack_bag",
    "pack_clique", "pipeline_solve", "round_gw", "round_perturbed", "solve_sdp", "split_tradeoff",
    "two_color_edge_set", "verify_packing",
]
