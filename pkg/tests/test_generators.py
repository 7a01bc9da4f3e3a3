"""Tests for the seeded graph generators and inline generator specs."""

import pytest

from kout_mincut.application.graph import (
    GraphSpec,
    bundled_corpus,
    connected_components,
    cut_from_side,
    generate,
    generate_from_spec,
    is_connected,
    supported_kinds,
)
from kout_mincut.application.solvers import oracle_mincut
from kout_mincut.domain.exceptions import InfeasibleParametersError


class TestFamilies:
    """Test cases for the graph families."""

    def test_cycle(self):
        """Test cycle(5)."""
        g = generate("cycle", 5)
        assert (g.vertex_count, g.edge_count, g.min_degree) == (5, 5, 2)
        assert oracle_mincut(g).value == 2

    def test_cycle_too_small(self):
        """Test that a simple cycle needs three vertices."""
        with pytest.raises(InfeasibleParametersError):
            generate("cycle", 2)

    def test_path_and_star(self):
        """Test the tree families."""
        assert generate("path", 1).edge_count == 0
        star = generate("star", 8)
        assert (star.vertex_count, star.edge_count, star.min_degree) == (9, 8, 1)

    def test_clique(self):
        """Test K6."""
        g = generate("clique", 6)
        assert g.edge_count == 15
        assert g.min_degree == 5

    def test_two_cliques(self):
        """Test the planted cut between two K8."""
        g = generate("two_cliques", 8, 3)
        assert (g.vertex_count, g.edge_count, g.min_degree) == (16, 59, 7)
        planted = cut_from_side(g, range(8))
        assert planted.size == 3
        assert planted.edge_ids == frozenset({56, 57, 58})
        assert oracle_mincut(g).value == 3

    def test_two_cliques_bridges_are_distinct(self):
        """Test that bridges wrap around without repeating a pair."""
        g = generate("two_cliques", 3, 9)
        assert g.edge_count == 3 + 3 + 9

    def test_two_cliques_infeasible(self):
        """Test that more than k^2 bridges is infeasible."""
        with pytest.raises(InfeasibleParametersError) as excinfo:
            generate("two_cliques", 3, 10)
        assert excinfo.value.kind == "two_cliques"

    def test_disjoint_cliques(self):
        """Test disjoint_cliques(4, 10)."""
        g = generate("disjoint_cliques", 4, 10)
        _, count = connected_components(range(g.edge_count), g)
        assert count == 4
        assert oracle_mincut(g).value == 0

    def test_clique_chain(self):
        """Test clique_chain(3, 6, 2)."""
        g = generate("clique_chain", 3, 6, 2)
        assert g.vertex_count == 18
        assert g.edge_count == 3 * 15 + 2 * 2
        assert is_connected(g)

    def test_gnp_is_seeded(self):
        """Test that gnp depends only on its seed."""
        assert generate("gnp", 40, 0.3, seed=5) == generate("gnp", 40, 0.3, seed=5)
        assert generate("gnp", 40, 0.3, seed=5) != generate("gnp", 40, 0.3, seed=6)

    def test_gnp_extremes(self):
        """Test p = 0 and p = 1."""
        assert generate("gnp", 10, 0.0).edge_count == 0
        assert generate("gnp", 10, 1.0).edge_count == 45

    def test_gnp_probability_range(self):
        """Test that p outside [0, 1] is infeasible."""
        with pytest.raises(InfeasibleParametersError):
            generate("gnp", 10, 1.5)

    def test_integer_parameters(self):
        """Test that structural parameters must be integers."""
        with pytest.raises(InfeasibleParametersError):
            generate("cycle", 4.5)

    def test_unknown_family(self):
        """Test that unknown kinds are rejected."""
        with pytest.raises(InfeasibleParametersError):
            generate("hypercube", 3)


class TestGraphSpec:
    """Test cases for inline generator specs."""

    def test_parse(self):
        """Test parsing kind and parameters."""
        spec = GraphSpec.parse("two_cliques:10,4")
        assert spec.kind == "two_cliques"
        assert spec.params == (10.0, 4.0)
        assert str(spec) == "two_cliques:10,4"

    def test_float_parameter_rendering(self):
        """Test that fractional parameters render unchanged."""
        assert str(GraphSpec.parse("gnp:40,0.3")) == "gnp:40,0.3"

    def test_wrong_arity(self):
        """Test that the parameter count is checked."""
        with pytest.raises(InfeasibleParametersError, match="takes 2"):
            GraphSpec.parse("two_cliques:10")

    def test_bad_parameter(self):
        """Test that parameters must be numbers."""
        with pytest.raises(InfeasibleParametersError):
            GraphSpec.parse("cycle:five")

    def test_unknown_kind(self):
        """Test that the error lists the supported kinds."""
        with pytest.raises(InfeasibleParametersError, match="clique_chain"):
            GraphSpec.parse("petersen:1")

    def test_generate_from_spec(self):
        """Test building from a spec string."""
        assert generate_from_spec("cycle:7").edge_count == 7

    def test_supported_kinds(self):
        """Test the family listing."""
        assert supported_kinds() == sorted(supported_kinds())
        assert {"cycle", "clique", "two_cliques", "disjoint_cliques", "gnp", "clique_chain"} <= set(supported_kinds())

    def test_bundled_corpus_generates(self):
        """Test that every regression corpus entry builds a graph with at least two vertices."""
        for spec in bundled_corpus():
            assert generate_from_spec(spec).vertex_count >= 2
