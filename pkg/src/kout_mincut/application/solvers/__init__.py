"""Exact min-cut solvers, oracles and the edge connectivity pipeline."""

from .oracle import ExhaustiveSolver, MaxFlowSolver, exhaustive_mincut, maxflow_mincut, oracle_mincut
from .pipeline import edge_connectivity
from .stoer_wagner import StoerWagnerSolver, stoer_wagner

__all__ = [
    "ExhaustiveSolver",
    "MaxFlowSolver",
    "StoerWagnerSolver",
    "edge_connectivity",
    "exhaustive_mincut",
    "maxflow_mincut",
    "oracle_mincut",
    "stoer_wagner",
]
