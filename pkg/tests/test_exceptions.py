"""Unit tests for domain exceptions."""

from kout_mincut.domain.exceptions import (
    ConfigurationError,
    ConfigurationValidationError,
    ContractionError,
    DisconnectedGraphError,
    ExperimentError,
    GraphError,
    GraphFormatError,
    InfeasibleParametersError,
    InvalidCutError,
    InvariantViolationError,
    IsolatedVertexError,
    MinCutError,
    PlantedCutError,
    RepeatedQueryError,
    ReportError,
    ReportSerializationError,
    ReportWriteError,
    SimplicityViolationError,
    SolverError,
    UndefinedConnectivityError,
)


class TestExceptions:
    """Test cases for domain exceptions."""

    def test_base_error(self):
        """Test base MinCutError."""
        error = MinCutError("Base error")
        assert str(error) == "Base error"
        assert isinstance(error, Exception)
        assert error.details == {}
        assert error.is_input_error is False

    def test_base_error_to_dict(self):
        """Test serialization of the base error."""
        error = MinCutError("Boom", error_code="E001", details={"n": 3})
        assert error.to_dict() == {
            "error_type": "MinCutError",
            "message": "Boom",
            "error_code": "E001",
            "details": {"n": 3},
            "is_input_error": False,
        }

    def test_configuration_error_is_input_error(self):
        """Test that configuration problems are reported as input errors."""
        error = ConfigurationError("Config issue")
        assert isinstance(error, MinCutError)
        assert error.is_input_error is True

    def test_configuration_validation_error(self):
        """Test ConfigurationValidationError details."""
        error = ConfigurationValidationError("bad value", config_key="eps", expected_type="float")
        assert isinstance(error, ConfigurationError)
        assert error.details == {"config_key": "eps", "expected_type": "float"}

    def test_graph_errors_are_input_errors(self):
        """Test that every graph error defaults to an input error."""
        for error in (
            GraphError("g"),
            InvalidCutError("cut"),
            UndefinedConnectivityError("n=1"),
            DisconnectedGraphError("split", component_count=2),
            IsolatedVertexError("lonely", vertex=4),
        ):
            assert isinstance(error, GraphError)
            assert error.is_input_error is True

    def test_graph_format_error_line_number(self):
        """Test that the line number prefixes the message and lands in details."""
        error = GraphFormatError("expected header 'n m'", line_number=3)
        assert str(error) == "line 3: expected header 'n m'"
        assert error.line_number == 3
        assert error.details["line_number"] == 3

    def test_graph_format_error_without_line(self):
        """Test GraphFormatError without a line number."""
        error = GraphFormatError("missing header line")
        assert str(error) == "missing header line"
        assert "line_number" not in error.details

    def test_simplicity_violation_error(self):
        """Test SimplicityViolationError records the offending pair."""
        error = SimplicityViolationError("duplicate edge (0, 1)", pair=(0, 1))
        assert isinstance(error, GraphError)
        assert error.pair == (0, 1)
        assert error.details["pair"] == [0, 1]

    def test_structured_graph_errors(self):
        """Test details of the vertex and component errors."""
        assert IsolatedVertexError("lonely", vertex=4).details == {"vertex": 4}
        assert DisconnectedGraphError("split", component_count=2).details == {"component_count": 2}

    def test_infeasible_parameters_error(self):
        """Test InfeasibleParametersError details."""
        error = InfeasibleParametersError("too many bridges", kind="two_cliques", params=(3, 10))
        assert error.is_input_error is True
        assert error.kind == "two_cliques"
        assert error.details == {"kind": "two_cliques", "params": [3, 10]}

    def test_repeated_query_error(self):
        """Test RepeatedQueryError records the edge id."""
        error = RepeatedQueryError("again", edge_id=7)
        assert isinstance(error, ContractionError)
        assert error.edge_id == 7
        assert error.details["edge_id"] == 7
        assert error.is_input_error is False

    def test_invariant_violation_error(self):
        """Test that invariant violations are internal errors."""
        error = InvariantViolationError("votes", invariant="amplification_safety")
        assert error.is_input_error is False
        assert error.invariant == "amplification_safety"
        assert error.to_dict()["details"] == {"invariant": "amplification_safety"}

    def test_hierarchy(self):
        """Test exception inheritance."""
        assert issubclass(PlantedCutError, ExperimentError)
        assert issubclass(ExperimentError, MinCutError)
        assert issubclass(ReportSerializationError, ReportError)
        assert issubclass(ReportWriteError, ReportError)
        assert issubclass(SolverError, MinCutError)
        assert issubclass(GraphFormatError, GraphError)
