"""Trial batches and confirmation reports of the statistical harness."""

import math
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class InstanceDescriptor(BaseModel):
    """Identifies the graph a batch was measured on."""

    family: str
    params: list[float] = Field(default_factory=list)
    seed: int = 0
    vertex_count: int = Field(default=0, ge=0)
    edge_count: int = Field(default=0, ge=0)
    min_degree: int = Field(default=0, ge=0)

    @property
    def spec(self) -> str:
        rendered = ",".join(str(int(p)) if float(p).is_integer() else str(p) for p in self.params)
        return f"{self.family}:{rendered}" if rendered else self.family


class TrialRecord(BaseModel):
    """One trial: its seed, the measured quantity and any side measurements."""

    seed: int
    value: float
    extra: dict[str, float] = Field(default_factory=dict)

    @field_validator("value")
    @classmethod
    def _finite_non_negative(cls, v: float) -> float:
        if not math.isfinite(v) or v < 0:
            raise ValueError(f"trial value must be finite and non-negative, got {v}")
        return v


class TrialSummary(BaseModel):
    """Mean, quantiles and extremes over a batch."""

    mean: float = 0.0
    min: float = 0.0
    p50: float = 0.0
    p90: float = 0.0
    p99: float = 0.0
    max: float = 0.0

    @classmethod
    def from_values(cls, values: list[float]) -> "TrialSummary":
        if not values:
            return cls()
        data = np.sort(np.asarray(values, dtype=np.float64))
        p50, p90, p99 = np.quantile(data, [0.5, 0.9, 0.99])
        return cls(
            mean=float(data.mean()),
            min=float(data[0]),
            p50=float(p50),
            p90=float(p90),
            p99=float(p99),
            max=float(data[-1]),
        )


class TrialBatch(BaseModel):
    """Per-seed records of one measurement plus their summary.

    ``parameters`` carries the harness constants and any analytic comparison
    values (floors, exact probabilities) so a report is self-describing.
    """

    model_config = ConfigDict(frozen=True)

    instance: InstanceDescriptor
    measure: str
    trial_count: int = Field(ge=0)
    records: list[TrialRecord] = Field(default_factory=list)
    summary: TrialSummary = Field(default_factory=TrialSummary)
    parameters: dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _count_matches(self) -> "TrialBatch":
        if len(self.records) != self.trial_count:
            raise ValueError(f"trial_count={self.trial_count} but {len(self.records)} records given")
        return self

    @classmethod
    def from_records(
        cls,
        instance: InstanceDescriptor,
        measure: str,
        records: list[TrialRecord],
        parameters: dict[str, Any] | None = None,
    ) -> "TrialBatch":
        return cls(
            instance=instance,
            measure=measure,
            trial_count=len(records),
            records=records,
            summary=TrialSummary.from_values([r.value for r in records]),
            parameters=parameters or {},
        )

    def values(self) -> np.ndarray:
        return np.asarray([r.value for r in self.records], dtype=np.float64)

    def to_record(self) -> dict[str, Any]:
        return {
            "instance": self.instance.model_dump(),
            "measure": self.measure,
            "trial_count": self.trial_count,
            "records": [r.model_dump() for r in self.records],
            "summary": self.summary.model_dump(),
            "parameters": dict(self.parameters),
        }


class ConfirmationReport(BaseModel):
    """Outcome of checking a fresh-seed batch against a calibrated bound or band."""

    measure: str
    bound: float
    lower_bound: float | None = None
    trials: int = Field(ge=0)
    violations: int = Field(ge=0)
    violating_seeds: list[int] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_record(self) -> dict[str, Any]:
        return {
            "measure": self.measure,
            "bound": self.bound,
            "lower_bound": self.lower_bound,
            "trials": self.trials,
            "violations": self.violations,
            "violating_seeds": list(self.violating_seeds),
            "passed": self.passed,
        }
