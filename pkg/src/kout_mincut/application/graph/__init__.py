"""Graph operations and generators."""

from .generators import GraphSpec, bundled_corpus, generate, generate_from_spec, supported_kinds
from .operations import (
    component_labels,
    connected_components,
    contract_by_labels,
    cut_from_side,
    is_connected,
    min_degree,
    min_degree_vertices,
    proper_sides,
    validate_cut,
)

__all__ = [
    "GraphSpec",
    "bundled_corpus",
    "component_labels",
    "connected_components",
    "contract_by_labels",
    "cut_from_side",
    "generate",
    "generate_from_spec",
    "is_connected",
    "min_degree",
    "min_degree_vertices",
    "proper_sides",
    "supported_kinds",
    "validate_cut",
]
