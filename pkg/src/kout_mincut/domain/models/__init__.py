"""Domain models."""

from .contraction_models import (
    AmplificationConfig,
    CertificateForests,
    EdgeReducer,
    KOutSample,
    OracleAnswer,
    PipelineVariant,
)
from .experiment_models import (
    ConfirmationReport,
    InstanceDescriptor,
    TrialBatch,
    TrialRecord,
    TrialSummary,
)
from .graph_models import Cut, Edge, GraphFormat, MultiGraph, SimpleGraph
from .invocation_models import InvocationConfig, Subcommand
from .result_models import MinCutMethod, MinCutResult

__all__ = [
    "AmplificationConfig",
    "CertificateForests",
    "ConfirmationReport",
    "Cut",
    "Edge",
    "EdgeReducer",
    "GraphFormat",
    "InstanceDescriptor",
    "InvocationConfig",
    "KOutSample",
    "MinCutMethod",
    "MinCutResult",
    "MultiGraph",
    "OracleAnswer",
    "PipelineVariant",
    "SimpleGraph",
    "Subcommand",
    "TrialBatch",
    "TrialRecord",
    "TrialSummary",
]
