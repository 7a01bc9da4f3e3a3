"""Domain exceptions and error handling."""

from typing import Any


class MinCutError(Exception):
    """Base exception for all kout_mincut errors."""

    def __init__(
        self,
        message: str,
        error_code: str | None = None,
        details: dict[str, Any] | None = None,
        is_input_error: bool = False,
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.details = details or {}
        self.is_input_error = is_input_error

    def to_dict(self) -> dict[str, Any]:
        """Convert exception to dictionary for serialization."""
        return {
            "error_type": self.__class__.__name__,
            "message": self.message,
            "error_code": self.error_code,
            "details": self.details,
            "is_input_error": self.is_input_error,
        }


class ConfigurationError(MinCutError):
    """Raised when there's a configuration issue."""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("is_input_error", True)
        super().__init__(message, **kwargs)


class ConfigurationValidationError(ConfigurationError):
    """Raised when configuration validation fails."""

    def __init__(
        self,
        message: str,
        config_key: str | None = None,
        expected_type: str | None = None,
        **kwargs,
    ):
        super().__init__(message, **kwargs)
        self.config_key = config_key
        self.expected_type = expected_type
        if config_key:
            self.details["config_key"] = config_key
        if expected_type:
            self.details["expected_type"] = expected_type


class GraphError(MinCutError):
    """Base exception for graph construction and graph precondition errors."""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("is_input_error", True)
        super().__init__(message, **kwargs)


class GraphFormatError(GraphError):
    """Raised when a graph file cannot be parsed."""

    def __init__(self, message: str, line_number: int | None = None, **kwargs):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message, **kwargs)
        self.line_number = line_number
        if line_number is not None:
            self.details["line_number"] = line_number


class SimplicityViolationError(GraphError):
    """Raised when an edge would make the graph non-simple (self-loop or duplicate pair)."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None, **kwargs):
        super().__init__(message, **kwargs)
        self.pair = pair
        if pair is not None:
            self.details["pair"] = list(pair)


class InvalidCutError(GraphError):
    """Raised when a cut side is empty, covers every vertex, or names unknown vertices."""

    pass


class IsolatedVertexError(GraphError):
    """Raised when an operation needs every vertex to have an incident edge."""

    def __init__(self, message: str, vertex: int | None = None, **kwargs):
        super().__init__(message, **kwargs)
        self.vertex = vertex
        if vertex is not None:
            self.details["vertex"] = vertex


class DisconnectedGraphError(GraphError):
    """Raised when an operation needs a connected input."""

    def __init__(self, message: str, component_count: int | None = None, **kwargs):
        super().__init__(message, **kwargs)
        self.component_count = component_count
        if component_count is not None:
            self.details["component_count"] = component_count


class UndefinedConnectivityError(GraphError):
    """Raised when edge connectivity is requested for a graph with fewer than two vertices."""

    pass


class InfeasibleParametersError(MinCutError):
    """Raised when generator parameters cannot produce the requested simple graph."""

    def __init__(
        self,
        message: str,
        kind: str | None = None,
        params: tuple[Any, ...] | None = None,
        **kwargs,
    ):
        kwargs.setdefault("is_input_error", True)
        super().__init__(message, **kwargs)
        self.kind = kind
        self.params = params
        if kind:
            self.details["kind"] = kind
        if params is not None:
            self.details["params"] = list(params)


class ContractionError(MinCutError):
    """Base exception for contraction errors."""

    pass


class RepeatedQueryError(ContractionError):
    """Raised when a forest oracle is queried twice with the same edge id."""

    def __init__(self, message: str, edge_id: int | None = None, **kwargs):
        super().__init__(message, **kwargs)
        self.edge_id = edge_id
        if edge_id is not None:
            self.details["edge_id"] = edge_id


class SolverError(MinCutError):
    """Raised when a min-cut solver receives an input it cannot handle."""

    pass


class ExperimentError(MinCutError):
    """Base exception for statistical harness errors."""

    pass


class PlantedCutError(ExperimentError):
    """Raised when a planted cut fails oracle verification."""

    pass


class ReportError(MinCutError):
    """Base exception for report reading and writing."""

    pass


class ReportSerializationError(ReportError):
    """Raised when a record cannot be serialized (for example a non-finite statistic)."""

    pass


class ReportWriteError(ReportError):
    """Raised when the report sink rejects the write."""

    pass


class InvariantViolationError(MinCutError):
    """Raised when a run-time bookkeeping assertion fails."""

    def __init__(self, message: str, invariant: str | None = None, **kwargs):
        super().__init__(message, **kwargs)
        self.invariant = invariant
        if invariant:
            self.details["invariant"] = invariant
