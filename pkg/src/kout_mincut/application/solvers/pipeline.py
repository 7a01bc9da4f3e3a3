"""End-to-end edge connectivity: contract, solve the small multigraph, compare with the minimum degree."""

import logging
import time
from typing import Any

from kout_mincut.application.contraction.amplification import amplified_contraction
from kout_mincut.application.contraction.forest_oracle import dense_contraction
from kout_mincut.application.graph.operations import (
    component_labels,
    cut_from_side,
    min_degree_vertices,
    validate_cut,
)
from kout_mincut.config import settings
from kout_mincut.domain.exceptions import InvariantViolationError, UndefinedConnectivityError
from kout_mincut.domain.interfaces.solver_interface import IMinCutSolver
from kout_mincut.domain.models.contraction_models import AmplificationConfig, PipelineVariant
from kout_mincut.domain.models.graph_models import Cut, SimpleGraph
from kout_mincut.domain.models.result_models import MinCutMethod, MinCutResult

from .stoer_wagner import StoerWagnerSolver

logger = logging.getLogger(__name__)

_METHODS = {
    PipelineVariant.AMPLIFIED: MinCutMethod.PIPELINE_AMPLIFIED,
    PipelineVariant.DENSE: MinCutMethod.PIPELINE_DENSE,
    PipelineVariant.DIRECT: MinCutMethod.STOER_WAGNER_DIRECT,
}


def _checked(g: SimpleGraph, result: MinCutResult) -> MinCutResult:
    if result.value > g.min_degree:
        message = f"returned value {result.value} exceeds minimum degree {g.min_degree}"
        logger.error(message)
        raise InvariantViolationError(message, invariant="value_at_most_min_degree")
    if not validate_cut(g, result.witness):
        message = "returned witness is not the crossing set of its side"
        logger.error(message)
        raise InvariantViolationError(message, invariant="witness_validates")
    return result


def edge_connectivity(
    g: SimpleGraph,
    cfg: AmplificationConfig | None = None,
    variant: PipelineVariant = PipelineVariant.AMPLIFIED,
    seed: int = 0,
    solver: IMinCutSolver | None = None,
    workers: int | None = None,
) -> MinCutResult:
    """
    Edge connectivity of ``g`` with a witnessing minimum cut.

    Args:
        g: Input graph with at least two vertices
        cfg: Amplification parameters; derived from settings for ``g`` when omitted
        variant: ``amplified``, ``dense`` or ``direct`` (no contraction)
        seed: Master seed
        solver: Multigraph solver, Stoer-Wagner by default
        workers: Threads for the amplified repetitions

    Returns:
        MinCutResult in original-graph coordinates

    Raises:
        UndefinedConnectivityError: If ``g`` has fewer than two vertices
    """
    n = g.vertex_count
    if n < 2:
        raise UndefinedConnectivityError(f"edge connectivity is undefined for n={n}")
    method = _METHODS[variant]
    solver = solver or StoerWagnerSolver()
    started = time.perf_counter()

    labels, count = component_labels(n, g.edge_u, g.edge_v)
    if count > 1:
        side = [v for v in range(n) if labels[v] == labels[0]]
        witness = cut_from_side(g, side)
        logger.info(f"Input has {count} components; edge connectivity is 0")
        return MinCutResult(
            value=0,
            witness=witness,
            method=method,
            is_singleton=witness.is_singleton,
            details={"n": n, "m": g.edge_count, "delta": g.min_degree, "components": count, "seed": seed},
        )

    delta = g.min_degree
    lightest = min_degree_vertices(g)
    details: dict[str, Any] = {
        "n": n,
        "m": g.edge_count,
        "delta": delta,
        "seed": seed,
        "variant": variant.value,
        "solver": solver.name,
    }

    if variant == PipelineVariant.DIRECT:
        value, side = solver.solve(g.as_multigraph())
        witness = cut_from_side(g, side)
        result = MinCutResult(
            value=value,
            witness=witness,
            method=method,
            is_singleton=witness.is_singleton,
            min_degree_vertices=lightest,
            details=details,
        )
        logger.info(f"Direct {solver.name}: lambda={value} in {time.perf_counter() - started:.3f}s")
        return _checked(g, result)

    cfg = cfg or settings.pipeline.amplification(n)
    if variant == PipelineVariant.AMPLIFIED:
        contracted = amplified_contraction(g, cfg, seed, workers=workers)
        details.update(q=cfg.q, r=cfg.r)
    else:
        contracted = dense_contraction(g, cfg, seed)
        details.update(q=cfg.dense_q, r=cfg.dense_r)
    details.update(contracted_supernodes=contracted.supernode_count, contracted_edges=contracted.edge_count)

    witness: Cut = cut_from_side(g, [lightest[0]])
    value = delta
    all_trivial = True
    if contracted.supernode_count > 1:
        contracted_value, side = solver.solve(contracted)
        details["contracted_min_cut"] = contracted_value
        if contracted_value < delta:
            witness = contracted.to_original_cut(side)
            value = contracted_value
            all_trivial = False

    result = MinCutResult(
        value=value,
        witness=witness,
        method=method,
        is_singleton=witness.is_singleton,
        all_min_cuts_trivial=all_trivial,
        min_degree_vertices=lightest,
        details=details,
    )
    logger.info(
        f"Pipeline {variant.value}: lambda={value} (delta={delta}, contracted to "
        f"{contracted.supernode_count} supernodes / {contracted.edge_count} edges) "
        f"in {time.perf_counter() - started:.3f}s"
    )
    return _checked(g, result)
