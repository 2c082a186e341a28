"""Constructive PCF colorings, each returning a verified outcome."""

from .basic import (
    color_corona,
    color_cycle,
    color_hypercube,
    color_path_endpoints,
    color_skn,
    color_tree,
    color_via_total_domination,
    cycle_pattern,
    product_coloring,
    skn_table,
)
from .degenerate import color_ab, color_chordal, color_clawfree
from .outcome import ConstructionOutcome, FMembership
from .sparse import Regime, color_f_pendant, color_outerplanar6, color_planar, color_sparse
from .subdivision import color_subdivided_forest, color_subdivided_matching, color_thread66

__all__ = [
    "ConstructionOutcome",
    "FMembership",
    "Regime",
    "color_ab",
    "color_chordal",
    "color_clawfree",
    "color_corona",
    "color_cycle",
    "color_f_pendant",
    "color_hypercube",
    "color_outerplanar6",
    "color_path_endpoints",
    "color_planar",
    "color_skn",
    "color_sparse",
    "color_subdivided_forest",
    "color_subdivided_matching",
    "color_thread66",
    "color_tree",
    "color_via_total_domination",
    "cycle_pattern",
    "product_coloring",
    "skn_table",
]
