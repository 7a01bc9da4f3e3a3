"""Statistical harness: seeded trial batches for the contraction guarantees."""

import logging
import math
import time
from collections.abc import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import shortest_path

from kout_mincut.application.contraction.amplification import amplified_contraction
from kout_mincut.application.contraction.sampling import derive_seeds, k_out_draws, sample_components
from kout_mincut.application.graph.generators import generate
from kout_mincut.application.graph.operations import component_labels, cut_from_side
from kout_mincut.application.solvers.oracle import oracle_mincut
from kout_mincut.application.solvers.pipeline import edge_connectivity
from kout_mincut.config import settings
from kout_mincut.domain.exceptions import ExperimentError, PlantedCutError
from kout_mincut.domain.models.contraction_models import AmplificationConfig, PipelineVariant
from kout_mincut.domain.models.experiment_models import InstanceDescriptor, TrialBatch, TrialRecord
from kout_mincut.domain.models.graph_models import MultiGraph, SimpleGraph

from .bounds import exact_preservation_probability, max_cut_degree_ratio, preservation_floor

logger = logging.getLogger(__name__)


def _instance(family: str, params: Sequence[float], seed: int) -> tuple[SimpleGraph, InstanceDescriptor]:
    g = generate(family, *params, seed=seed)
    descriptor = InstanceDescriptor(
        family=family,
        params=[float(p) for p in params],
        seed=seed,
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        min_degree=g.min_degree if g.vertex_count else 0,
    )
    return g, descriptor


def _trial_seeds(seed: int, trials: int) -> list[int]:
    if trials < 0:
        raise ExperimentError(f"trial count must be non-negative, got {trials}")
    return derive_seeds(seed, trials)


def measure_component_count(
    family: str,
    params: Sequence[float],
    k: int,
    trials: int,
    seed: int,
) -> TrialBatch:
    """Components left by k-out sampling, with ``count * delta / n`` per trial."""
    g, instance = _instance(family, params, seed)
    delta, n = g.min_degree, g.vertex_count
    _, graph_components = component_labels(n, g.edge_u, g.edge_v)
    records = []
    for trial_seed in _trial_seeds(seed, trials):
        chosen = k_out_draws(g, k, np.random.default_rng(trial_seed))
        _, count = sample_components(g, chosen)
        records.append(TrialRecord(seed=trial_seed, value=count, extra={"ratio": count * delta / n}))
    ratios = [r.extra["ratio"] for r in records]
    parameters = {
        "k": k,
        "graph_components": graph_components,
        "max_ratio": max(ratios, default=0.0),
        "threshold": settings.harness.component_ratio_threshold,
    }
    logger.info(f"Component count {instance.spec} k={k}: max ratio {parameters['max_ratio']:.3f} over {trials} trials")
    return TrialBatch.from_records(instance, "component_count", records, parameters)


def diameter_sum(g: SimpleGraph, chosen: np.ndarray) -> int:
    """Sum over the components of the sampled subgraph of their BFS diameters."""
    ids = np.unique(chosen)
    n = g.vertex_count
    u, v = g.edge_u[ids], g.edge_v[ids]
    adjacency = coo_matrix((np.ones(len(ids), dtype=np.int32), (u, v)), shape=(n, n)).tocsr()
    labels, count = component_labels(n, u, v)
    order = np.argsort(labels, kind="stable")
    bounds = np.searchsorted(labels[order], np.arange(count + 1))
    total = 0
    for c in range(count):
        members = order[bounds[c] : bounds[c + 1]]
        if len(members) < 2:
            continue
        sub = adjacency[members][:, members]
        distances = shortest_path(sub, directed=False, unweighted=True)
        total += int(distances.max())
    return total


def measure_diameter_sum(family: str, params: Sequence[float], trials: int, seed: int) -> TrialBatch:
    """Sum of 2-out component diameters; ratio to ``n log(delta) / delta`` once delta >= 2."""
    g, instance = _instance(family, params, seed)
    delta, n = g.min_degree, g.vertex_count
    scale = n * math.log(delta) / delta if delta >= 2 else None
    records = []
    for trial_seed in _trial_seeds(seed, trials):
        total = diameter_sum(g, k_out_draws(g, 2, np.random.default_rng(trial_seed)))
        extra = {"ratio": total / scale} if scale else {}
        records.append(TrialRecord(seed=trial_seed, value=total, extra=extra))
    ratios = [r.extra["ratio"] for r in records if "ratio" in r.extra]
    parameters = {
        "scale": scale if scale is not None else 0.0,
        "min_ratio": min(ratios, default=0.0),
        "max_ratio": max(ratios, default=0.0),
    }
    return TrialBatch.from_records(instance, "diameter_sum", records, parameters)


def planted_side(family: str, params: Sequence[float]) -> list[int]:
    """First clique of the families that plant a cut between cliques."""
    if family in ("two_cliques", "clique_chain"):
        size = int(params[0] if family == "two_cliques" else params[1])
        return list(range(size))
    raise ExperimentError(f"family '{family}' has no planted cut; pass the side explicitly")


def measure_preservation(
    family: str,
    params: Sequence[float],
    eps: float,
    trials: int,
    seed: int,
    k: int = 2,
    side: Sequence[int] | None = None,
) -> TrialBatch:
    """Frequency with which k-out sampling misses every edge of a planted cut.

    The planted cut must be a non-singleton (2 - eps)-minimum cut according to
    the oracle. The batch parameters carry the analytic floor, the exact
    per-instance probability and the z-score of the measured frequency.
    """
    g, instance = _instance(family, params, seed)
    cut = cut_from_side(g, side if side is not None else planted_side(family, params))
    lam = oracle_mincut(g).value
    if cut.is_singleton:
        raise PlantedCutError("planted cut is a singleton cut", details={"side": sorted(cut.side)})
    if lam == 0 or cut.size > (2 - eps) * lam:
        raise PlantedCutError(
            f"planted cut of size {cut.size} is not (2 - {eps})-minimum for lambda={lam}",
            details={"cut_size": cut.size, "lambda": lam, "eps": eps},
        )
    cut_ids = np.fromiter(sorted(cut.edge_ids), dtype=np.int64)
    records = []
    for trial_seed in _trial_seeds(seed, trials):
        chosen = k_out_draws(g, k, np.random.default_rng(trial_seed))
        preserved = not np.isin(chosen, cut_ids).any()
        records.append(TrialRecord(seed=trial_seed, value=1.0 if preserved else 0.0))

    frequency = float(np.mean([r.value for r in records])) if records else 0.0
    exact = exact_preservation_probability(g, cut, k)
    sigma = math.sqrt(exact * (1 - exact) / trials) if trials else 0.0
    z_score = (frequency - exact) / sigma if sigma > 0 else 0.0
    floor = preservation_floor(eps, k)
    parameters = {
        "eps": eps,
        "k": k,
        "lambda": lam,
        "cut_size": cut.size,
        "frequency": frequency,
        "floor": floor,
        "exact_probability": exact,
        "sigma": sigma,
        "z_score": z_score,
        "sigma_tolerance": settings.harness.sigma_tolerance,
        "above_floor": frequency >= floor,
        "within_tolerance": abs(z_score) <= settings.harness.sigma_tolerance,
        "max_cut_degree_ratio": max_cut_degree_ratio(g, cut),
        "cut_degree_ratio_bound": 1 - eps / 2,
    }
    logger.info(
        f"Preservation {instance.spec}: frequency {frequency:.4f}, exact {exact:.4f},"
        f" floor {floor:.2e}, z={z_score:.2f}"
    )
    return TrialBatch.from_records(instance, "preservation", records, parameters)


def low_degree_supernode_audit(g: SimpleGraph, mg: MultiGraph) -> list[int]:
    """Supernodes of degree below delta that hold fewer than delta original vertices.

    A cut smaller than delta has more than delta vertices on each side, so the
    result should always be empty.
    """
    delta = g.min_degree
    members = mg.members
    return [s for s, d in enumerate(mg.degrees) if d < delta and len(members[s]) < delta]


def measure_edge_budget(
    family: str,
    params: Sequence[float],
    cfg: AmplificationConfig | None,
    trials: int,
    seed: int,
) -> TrialBatch:
    """Edges and supernodes left by amplified contraction, relative to n and n / delta."""
    g, instance = _instance(family, params, seed)
    n, delta = g.vertex_count, g.min_degree
    cfg = cfg or settings.pipeline.amplification(n)
    records = []
    violations = 0
    for trial_seed in _trial_seeds(seed, trials):
        mg = amplified_contraction(g, cfg, trial_seed)
        audit = low_degree_supernode_audit(g, mg)
        violations += len(audit)
        records.append(
            TrialRecord(
                seed=trial_seed,
                value=mg.edge_count,
                extra={
                    "supernodes": mg.supernode_count,
                    "edge_ratio": mg.edge_count / n,
                    "supernode_ratio": mg.supernode_count * delta / n,
                    "low_degree_violations": len(audit),
                },
            )
        )
    parameters = {
        "q": cfg.q,
        "r": cfg.r,
        "max_edge_ratio": max((r.extra["edge_ratio"] for r in records), default=0.0),
        "max_supernode_ratio": max((r.extra["supernode_ratio"] for r in records), default=0.0),
        "edge_ratio_threshold": settings.harness.edge_ratio_threshold,
        "supernode_ratio_threshold": settings.harness.supernode_ratio_threshold,
        "low_degree_violations": violations,
    }
    return TrialBatch.from_records(instance, "edge_budget", records, parameters)


def measure_runtime_scaling(
    family: str,
    sizes: Sequence[Sequence[float]],
    variant: PipelineVariant,
    seed: int,
    q: int | None = None,
    r: int | None = None,
) -> TrialBatch:
    """Wall-clock of the pipeline per size; informational, so records are not reproducible."""
    records = []
    spans: list[tuple[int, int, float]] = []
    for params in sizes:
        g = generate(family, *params, seed=seed)
        n, m = g.vertex_count, g.edge_count
        if n < 2 or m == 0:
            logger.warning(f"Skipping degenerate size {family}{list(params)}: n={n} m={m}")
            continue
        cfg = settings.pipeline.amplification(n, q=q, r=r, dense_q=q, dense_r=r)
        started = time.perf_counter()
        edge_connectivity(g, cfg, variant=variant, seed=seed)
        elapsed = time.perf_counter() - started
        spans.append((n, m, elapsed))
        records.append(
            TrialRecord(
                seed=seed,
                value=elapsed,
                extra={
                    "n": n,
                    "m": m,
                    "per_m_log_n": elapsed / (m * math.log(n)),
                    "per_m_plus_n_log3_n": elapsed / (m + n * math.log(n) ** 3),
                    "per_m": elapsed / m,
                },
            )
        )
    # time ratio rescaled to a single doubling of m
    growth = [
        (b[2] / a[2]) ** (math.log(2) / math.log(b[1] / a[1])) if b[1] > a[1] and a[2] > 0 else 0.0
        for a, b in zip(spans, spans[1:], strict=False)
    ]
    per_m = [e / m for _, m, e in spans]
    parameters = {
        "variant": variant.value,
        "sizes": [list(map(float, p)) for p in sizes],
        "growth_per_doubling": growth,
        "max_growth_per_doubling": max(growth, default=0.0),
        "growth_limit": settings.harness.scaling_growth_limit,
        "per_m_spread": (max(per_m) / min(per_m)) if per_m and min(per_m) > 0 else 0.0,
        "flatness_factor": settings.harness.dense_flatness_factor,
    }
    descriptor = InstanceDescriptor(family=family, params=[], seed=seed)
    return TrialBatch.from_records(descriptor, "runtime_scaling", records, parameters)
