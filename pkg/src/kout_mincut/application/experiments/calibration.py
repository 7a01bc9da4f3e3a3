"""Two-phase checks: a pilot batch fixes a bound, a fresh-seed batch must respect it."""

import logging

from kout_mincut.config import settings
from kout_mincut.domain.exceptions import ExperimentError
from kout_mincut.domain.models.experiment_models import ConfirmationReport, TrialBatch

logger = logging.getLogger(__name__)


def _observations(batch: TrialBatch, key: str | None) -> list[tuple[int, float]]:
    if key is None:
        return [(r.seed, r.value) for r in batch.records]
    try:
        return [(r.seed, r.extra[key]) for r in batch.records]
    except KeyError as e:
        raise ExperimentError(f"batch '{batch.measure}' records carry no '{key}' measurement") from e


def _pilot_values(pilot: TrialBatch, slack: float | None, key: str | None) -> tuple[list[float], float]:
    slack = settings.harness.pilot_slack if slack is None else slack
    if slack < 1:
        raise ExperimentError(f"pilot slack must be at least 1, got {slack}")
    values = [value for _, value in _observations(pilot, key)]
    if not values:
        raise ExperimentError("cannot calibrate from an empty pilot batch")
    return values, slack


def _label(batch: TrialBatch, key: str | None) -> str:
    return f"{batch.measure}.{key}" if key else batch.measure


def calibrate(pilot: TrialBatch, slack: float | None = None, key: str | None = None) -> float:
    """Upper bound from a pilot batch: its maximum times ``slack``."""
    values, slack = _pilot_values(pilot, slack, key)
    bound = max(values) * slack
    logger.info(f"Calibrated {_label(pilot, key)} bound {bound:.4f} from {len(values)} trials")
    return bound


def calibrate_band(pilot: TrialBatch, slack: float | None = None, key: str | None = None) -> tuple[float, float]:
    """Two-sided band from a pilot batch: ``[min / slack, max * slack]``."""
    values, slack = _pilot_values(pilot, slack, key)
    lower, upper = min(values) / slack, max(values) * slack
    logger.info(f"Calibrated {_label(pilot, key)} band [{lower:.4f}, {upper:.4f}] from {len(values)} trials")
    return lower, upper


def confirm(
    batch: TrialBatch,
    bound: float,
    key: str | None = None,
    lower: float | None = None,
) -> ConfirmationReport:
    """Count the records of a confirmation batch above ``bound`` or, when given, below ``lower``."""
    observations = _observations(batch, key)
    violating = [seed for seed, value in observations if value > bound or (lower is not None and value < lower)]
    for seed in violating:
        logger.warning(f"{batch.measure} left the calibrated range at seed {seed}")
    return ConfirmationReport(
        measure=_label(batch, key),
        bound=bound,
        lower_bound=lower,
        trials=len(observations),
        violations=len(violating),
        violating_seeds=violating,
    )
