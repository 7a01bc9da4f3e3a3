"""Validated command-line invocation."""

from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .contraction_models import EdgeReducer, PipelineVariant
from .graph_models import GraphFormat

MAX_SEED = 2**64 - 1


class Subcommand(str, Enum):
    GEN = "gen"
    MINCUT = "mincut"
    CONTRACT = "contract"
    CERTIFICATE = "certificate"
    STATS = "stats"
    ORACLE = "oracle"


class InvocationConfig(BaseModel):
    """Everything one CLI call needs, checked before any work starts."""

    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    input_path: Path | None = None
    generator: str | None = None
    output_path: Path | None = None
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    eps: float = Field(default=1.0, gt=0.0, le=1.0)
    gamma: float = Field(default=1.0, gt=0.0)
    q: int | None = Field(default=None, ge=1)
    r: int | None = Field(default=None, ge=1)
    variant: PipelineVariant = PipelineVariant.AMPLIFIED
    reducer: EdgeReducer = EdgeReducer.CERTIFICATE
    format: GraphFormat = GraphFormat.EDGE_LIST

    @model_validator(mode="after")
    def _one_input_source(self) -> "InvocationConfig":
        if self.subcommand in (Subcommand.GEN, Subcommand.STATS):
            if self.generator is None:
                raise ValueError(f"{self.subcommand.value} needs --gen")
            return self
        if (self.input_path is None) == (self.generator is None):
            raise ValueError("give exactly one of --input or --gen")
        return self
