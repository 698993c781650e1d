"""Chaos game in regular polytopes of any dimension and its optimal contraction ratio."""

__version__ = "0.1.0"

from .chaos import GcgConfig, PointCloud, gcg_run, gcg_step
from .ifs import CopySet, hausdorff_distance, hutchinson_iterate, hutchinson_step
from .overlap import any_overlap_at, copies_overlap, search_r_opt
from .polytopes import (Polytope, detect_edges, generate_polytope, orient_edge_to_axis,
                        polytope_from_id)
from .ratio import (RatioReport, build_vector_sets, delta_parallel, delta_parallel_axis,
                    r_opt_formula, ratio_report)

__all__ = [
    "GcgConfig", "PointCloud", "gcg_run", "gcg_step",
    "CopySet", "hausdorff_distance", "hutchinson_iterate", "hutchinson_step",
    "any_overlap_at", "copies_overlap", "search_r_opt",
    "Polytope", "detect_edges", "generate_polytope", "orient_edge_to_axis", "polytope_from_id",
    "RatioReport", "build_vector_sets", "delta_parallel", "delta_parallel_axis",
    "r_opt_formula", "ratio_report",
]
