"""Random k-out sampling, k-out contraction and random edge reduction."""

import logging
import math

import numpy as np

from kout_mincut.application.graph.operations import component_labels
from kout_mincut.domain.exceptions import GraphError, IsolatedVertexError
from kout_mincut.domain.models.contraction_models import KOutSample
from kout_mincut.domain.models.graph_models import MultiGraph, SimpleGraph

logger = logging.getLogger(__name__)


def derive_seeds(master: int, count: int) -> list[int]:
    """Derive ``count`` independent 64-bit seeds from a master seed.

    Each child of ``SeedSequence(master).spawn(count)`` contributes one 64-bit
    word, so the i-th derived seed depends only on ``master`` and ``i``.
    """
    if count < 0:
        raise ValueError(f"seed count must be non-negative, got {count}")
    children = np.random.SeedSequence(master).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]


def _require_no_isolated(g: SimpleGraph) -> np.ndarray:
    degrees = np.asarray(g.degrees, dtype=np.int64)
    isolated = np.flatnonzero(degrees == 0)
    if len(isolated):
        vertex = int(isolated[0])
        raise IsolatedVertexError(f"vertex {vertex} has no incident edge to sample", vertex=vertex)
    return degrees


def k_out_draws(g: SimpleGraph, k: int, rng: np.random.Generator, trials: int | None = None) -> np.ndarray:
    """Draw k incident edge ids per vertex, uniformly and with replacement.

    Returns an ``(n, k)`` array, or ``(trials, n, k)`` when ``trials`` is given.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    degrees = _require_no_isolated(g)
    shape = (g.vertex_count, k) if trials is None else (trials, g.vertex_count, k)
    # offset within each vertex's incidence list, broadcast over the leading trial axis
    positions = rng.integers(0, degrees[:, None], size=shape)
    return g.csr_edge_ids[g.csr_offsets[:-1, None] + positions]


def sample_k_out(g: SimpleGraph, k: int, seed: int) -> KOutSample:
    """Random k-out sample of ``g``; deterministic for a given seed."""
    chosen = k_out_draws(g, k, np.random.default_rng(seed))
    chosen.setflags(write=False)
    return KOutSample(k=k, chosen=chosen, edge_id_set=frozenset(np.unique(chosen).tolist()))


def sample_components(g: SimpleGraph, chosen: np.ndarray) -> tuple[np.ndarray, int]:
    """Component labels of the subgraph formed by the sampled edge ids."""
    ids = np.unique(chosen)
    return component_labels(g.vertex_count, g.edge_u[ids], g.edge_v[ids])


def k_out_components(g: SimpleGraph, k: int, seed: int) -> tuple[np.ndarray, int]:
    return sample_components(g, sample_k_out(g, k, seed).chosen)


def k_out_contraction(g: SimpleGraph, k: int, seed: int) -> MultiGraph:
    """Contract every connected component of a random k-out sample."""
    labels, count = k_out_components(g, k, seed)
    mg = g.as_multigraph().contract(labels)
    logger.debug(f"{k}-out contraction: n={g.vertex_count} -> {count} supernodes, {mg.edge_count} edges")
    return mg


def reduce_edges_random(mg: MultiGraph, delta: int, rate_denominator: float, seed: int) -> MultiGraph:
    """Mark each edge with probability ``1 / (rate_denominator * delta)`` and contract the marked edges.

    An infinite ``rate_denominator`` marks nothing and returns ``mg`` unchanged.
    """
    if delta < 1:
        raise GraphError(f"delta must be positive, got {delta}")
    if rate_denominator <= 0:
        raise GraphError(f"rate denominator must be positive, got {rate_denominator}")
    if math.isinf(rate_denominator) or mg.edge_count == 0:
        return mg
    probability = 1.0 / (rate_denominator * delta)
    marked = np.random.default_rng(seed).random(mg.edge_count) < probability
    labels, count = component_labels(mg.supernode_count, mg.super_u[marked], mg.super_v[marked])
    logger.debug(f"Random edge reduction marked {int(marked.sum())} of {mg.edge_count} edges -> {count} supernodes")
    return mg.contract(labels)
