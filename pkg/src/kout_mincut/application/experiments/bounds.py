"""Closed-form quantities the harness compares measurements against."""

import math

import numpy as np

from kout_mincut.domain.exceptions import ExperimentError
from kout_mincut.domain.models.graph_models import Cut, SimpleGraph


def preservation_floor(eps: float, k: int = 2) -> float:
    """Lower bound ``exp(-4k(2 - eps)/eps)`` on keeping a non-singleton (2 - eps)-minimum cut.

    ``k = 1`` gives the single-sample bound ``exp(-4(2 - eps)/eps)``; ``k = 2`` its square.
    """
    if not 0 < eps <= 1:
        raise ExperimentError(f"eps must lie in (0, 1], got {eps}")
    return math.exp(-4 * k * (2 - eps) / eps)


def cut_degree_ratios(g: SimpleGraph, cut: Cut) -> dict[int, float]:
    """``c(v) / d(v)`` for every vertex touching the cut, ``c(v)`` counting its cut edges."""
    counts: dict[int, int] = {}
    for edge_id in cut.edge_ids:
        u, v, _ = g.edges[edge_id]
        counts[u] = counts.get(u, 0) + 1
        counts[v] = counts.get(v, 0) + 1
    return {v: c / g.degrees[v] for v, c in sorted(counts.items())}


def max_cut_degree_ratio(g: SimpleGraph, cut: Cut) -> float:
    """Largest ``c(v) / d(v)``; at most ``1 - eps/2`` for a non-singleton (2 - eps)-small cut."""
    return max(cut_degree_ratios(g, cut).values(), default=0.0)


def exact_preservation_probability(g: SimpleGraph, cut: Cut, k: int = 1) -> float:
    """Probability that a random k-out sample misses every edge of ``cut``.

    Vertices draw independently, so this is ``prod (1 - c(v)/d(v))^k`` over the
    vertices touching the cut.
    """
    ratios = np.fromiter(cut_degree_ratios(g, cut).values(), dtype=np.float64)
    return float(np.prod((1.0 - ratios) ** k))


def cut_epsilon(cut_size: int, lam: int) -> float:
    """Largest eps in (0, 1] for which a cut of ``cut_size`` is (2 - eps)-small."""
    if lam <= 0:
        raise ExperimentError(f"cut slack is undefined for edge connectivity {lam}")
    eps = min(1.0, 2.0 - cut_size / lam)
    if eps <= 0:
        raise ExperimentError(f"a cut of size {cut_size} is not (2 - eps)-small for lambda={lam}")
    return eps


def inequality_holds(x: float | np.ndarray, y: float | np.ndarray) -> bool | np.ndarray:
    """Evaluate ``1 - x > exp(-x / (1 - y))`` for ``0 < x <= y < 1``, in log space."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if np.any((x <= 0) | (x > y) | (y >= 1)):
        raise ExperimentError("inequality needs 0 < x <= y < 1")
    holds = np.log1p(-x) > -x / (1.0 - y)
    return bool(holds) if holds.ndim == 0 else holds
