"""Min-cut results returned by solvers and the pipeline."""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .graph_models import Cut


class MinCutMethod(str, Enum):
    """How a min-cut value was obtained."""

    PIPELINE_AMPLIFIED = "pipeline-amplified"
    PIPELINE_DENSE = "pipeline-dense"
    STOER_WAGNER_DIRECT = "stoer-wagner-direct"
    ORACLE_EXHAUSTIVE = "oracle-exhaustive"
    ORACLE_MAXFLOW = "oracle-maxflow"


class MinCutResult(BaseModel):
    """Edge connectivity of a graph together with a witnessing cut.

    ``all_min_cuts_trivial`` is set when the contracted graph had no cut
    below the minimum degree, so every minimum cut is a singleton.
    """

    model_config = ConfigDict(frozen=True)

    value: int = Field(ge=0)
    witness: Cut
    method: MinCutMethod
    is_singleton: bool
    all_min_cuts_trivial: bool = False
    min_degree_vertices: list[int] = Field(default_factory=list)
    details: dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _witness_matches_value(self) -> "MinCutResult":
        if self.witness.size != self.value:
            raise ValueError(f"witness crosses {self.witness.size} edges but value is {self.value}")
        if self.witness.is_singleton != self.is_singleton:
            raise ValueError("is_singleton disagrees with the witness side")
        return self

    def to_record(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "method": self.method.value,
            "is_singleton": self.is_singleton,
            "all_min_cuts_trivial": self.all_min_cuts_trivial,
            "witness": self.witness.to_record(),
            "details": dict(self.details),
        }
