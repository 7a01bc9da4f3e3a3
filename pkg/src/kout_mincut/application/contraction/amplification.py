"""Single contraction and repetition-plus-voting amplification."""

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from kout_mincut.application.certificate.sparse_certificate import reduce_edges_certificate
from kout_mincut.application.contraction.sampling import derive_seeds, k_out_contraction, reduce_edges_random
from kout_mincut.application.graph.operations import contract_by_labels, is_connected
from kout_mincut.config import settings
from kout_mincut.domain.disjoint_sets import DisjointSets
from kout_mincut.domain.exceptions import (
    DisconnectedGraphError,
    InvariantViolationError,
    UndefinedConnectivityError,
)
from kout_mincut.domain.models.contraction_models import AmplificationConfig, EdgeReducer
from kout_mincut.domain.models.graph_models import MultiGraph, SimpleGraph

logger = logging.getLogger(__name__)


def require_contractible(g: SimpleGraph) -> None:
    """Pipeline precondition: at least two vertices and a single component."""
    if g.vertex_count < 2:
        raise UndefinedConnectivityError(f"edge connectivity is undefined for n={g.vertex_count}")
    if not is_connected(g):
        raise DisconnectedGraphError("contraction needs a connected graph")


def single_contraction(
    g: SimpleGraph,
    cfg: AmplificationConfig,
    seed: int,
    reducer: EdgeReducer | None = None,
) -> MultiGraph:
    """2-out contraction followed by one edge reduction step."""
    require_contractible(g)
    reducer = reducer or cfg.reducer
    delta = g.min_degree
    sample_seed, reduce_seed = derive_seeds(seed, 2)
    mg = k_out_contraction(g, 2, sample_seed)
    if reducer == EdgeReducer.CERTIFICATE:
        return reduce_edges_certificate(mg, cfg.certificate_k(delta))
    return reduce_edges_random(mg, delta, cfg.edge_sample_rate_denominator, reduce_seed)


def survival_votes(
    g: SimpleGraph,
    cfg: AmplificationConfig,
    seed: int,
    workers: int | None = None,
) -> np.ndarray:
    """Per edge id, the number of the q repetitions in which the edge survives."""
    require_contractible(g)
    seeds = derive_seeds(seed, cfg.q)
    workers = workers or settings.app.workers
    votes = np.zeros(g.edge_count, dtype=np.int64)

    def survivors(repetition_seed: int) -> np.ndarray:
        return single_contraction(g, cfg, repetition_seed).edge_id_array

    if workers > 1 and cfg.q > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(survivors, seeds))
    else:
        results = [survivors(s) for s in seeds]
    for surviving in results:
        votes[surviving] += 1
    return votes


def contract_by_votes(g: SimpleGraph, votes: np.ndarray, threshold: int) -> MultiGraph:
    """Merge the endpoints of every edge with fewer than ``threshold`` votes."""
    classes = DisjointSets(g.vertex_count)
    for edge_id in np.flatnonzero(votes < threshold).tolist():
        u, v, _ = g.edges[edge_id]
        classes.union(u, v)
    mg = contract_by_labels(g, classes.labels())
    short = mg.edge_id_array[votes[mg.edge_id_array] < threshold]
    if len(short):
        message = f"edge {int(short[0])} survived amplification with fewer than {threshold} votes"
        logger.error(message)
        raise InvariantViolationError(message, invariant="amplification_safety")
    return mg


def amplified_contraction_with_votes(
    g: SimpleGraph,
    cfg: AmplificationConfig,
    seed: int,
    workers: int | None = None,
) -> tuple[MultiGraph, np.ndarray]:
    votes = survival_votes(g, cfg, seed, workers=workers)
    mg = contract_by_votes(g, votes, cfg.r)
    logger.info(
        f"Amplified contraction q={cfg.q} r={cfg.r}: n={g.vertex_count} m={g.edge_count} -> "
        f"{mg.supernode_count} supernodes, {mg.edge_count} edges"
    )
    return mg, votes


def amplified_contraction(
    g: SimpleGraph,
    cfg: AmplificationConfig,
    seed: int,
    workers: int | None = None,
) -> MultiGraph:
    """Run q single contractions and keep only edges surviving at least r of them."""
    mg, _ = amplified_contraction_with_votes(g, cfg, seed, workers=workers)
    return mg
