"""Statistical harness for the contraction guarantees."""

from .bounds import (
    cut_degree_ratios,
    cut_epsilon,
    exact_preservation_probability,
    inequality_holds,
    max_cut_degree_ratio,
    preservation_floor,
)
from .calibration import calibrate, calibrate_band, confirm
from .harness import (
    diameter_sum,
    low_degree_supernode_audit,
    measure_component_count,
    measure_diameter_sum,
    measure_edge_budget,
    measure_preservation,
    measure_runtime_scaling,
    planted_side,
)

__all__ = [
    "calibrate",
    "calibrate_band",
    "confirm",
    "cut_degree_ratios",
    "cut_epsilon",
    "diameter_sum",
    "exact_preservation_probability",
    "inequality_holds",
    "low_degree_supernode_audit",
    "max_cut_degree_ratio",
    "measure_component_count",
    "measure_diameter_sum",
    "measure_edge_budget",
    "measure_preservation",
    "measure_runtime_scaling",
    "planted_side",
    "preservation_floor",
]
