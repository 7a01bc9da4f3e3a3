"""Tests for sparse certificates and certificate-based edge reduction."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kout_mincut.application.certificate import reduce_edges_certificate, sparse_certificate
from kout_mincut.application.graph import generate, proper_sides
from kout_mincut.application.graph.operations import multigraph_cut_size
from kout_mincut.application.solvers import exhaustive_mincut
from kout_mincut.domain.disjoint_sets import DisjointSets
from kout_mincut.domain.exceptions import GraphError
from kout_mincut.domain.models import MultiGraph
from tests.strategies import multigraphs, simple_graphs


def _retained(mg: MultiGraph, edge_ids) -> MultiGraph:
    keep = np.isin(mg.edge_id_array, np.fromiter(edge_ids, dtype=np.int64))
    return MultiGraph(
        supernode_count=mg.supernode_count,
        super_u=mg.super_u[keep],
        super_v=mg.super_v[keep],
        edge_ids=mg.edge_id_array[keep],
        vertex_map=mg.vertex_map,
    )


def _is_forest(mg: MultiGraph, edge_ids) -> bool:
    endpoints = {int(i): (int(u), int(v)) for u, v, i in zip(mg.super_u, mg.super_v, mg.edge_id_array, strict=True)}
    sets = DisjointSets(mg.supernode_count)
    return all(sets.union(*endpoints[e]) for e in edge_ids)


class TestSparseCertificate:
    """Test cases for sparse_certificate."""

    def test_single_edge(self, single_edge):
        """Test that a lone edge is retained in forest 1."""
        forests = sparse_certificate(single_edge.as_multigraph(), 3)
        assert forests.retained_edge_ids == (0,)
        assert forests.forest_index == {0: 1}

    def test_cycle_spanning_tree(self, cycle_5):
        """Test that k = 1 keeps a spanning tree of C5."""
        mg = cycle_5.as_multigraph()
        forests = sparse_certificate(mg, 1)
        assert forests.retained_count == 4
        assert _is_forest(mg, forests.retained_edge_ids)

    def test_clique_forest_sizes(self):
        """Test the maximum-adjacency decomposition of K5."""
        mg = generate("clique", 5).as_multigraph()
        forests = sparse_certificate(mg, 2)
        assert [len(forests.forest(i)) for i in range(1, 5)] == [4, 3, 2, 1]
        assert forests.retained_count == 7
        for i in range(1, 5):
            assert _is_forest(mg, forests.forest(i))

    def test_clique_cut_soundness(self):
        """Test every proper cut of K5 keeps min(2, crossings) certificate edges."""
        mg = generate("clique", 5).as_multigraph()
        forests = sparse_certificate(mg, 2)
        assert forests.retained_count <= 2 * 5 - 1
        kept = _retained(mg, forests.retained_edge_ids)
        sides = list(proper_sides(5))
        assert len(sides) == 15
        for side in sides:
            assert multigraph_cut_size(kept, side) >= min(2, multigraph_cut_size(mg, side))

    def test_parallel_edges_are_separate_candidates(self):
        """Test that each parallel copy gets its own forest."""
        mg = MultiGraph.from_edges(2, [(0, 1, 4), (1, 0, 2), (0, 1, 9)])
        forests = sparse_certificate(mg, 2)
        assert forests.forest_index == {2: 1, 4: 2, 9: 3}
        assert forests.retained_edge_ids == (2, 4)

    def test_tree_is_retained(self):
        """Test that a forest input keeps every edge."""
        mg = generate("star", 6).as_multigraph()
        assert sparse_certificate(mg, 1).retained_count == 6

    def test_k_must_be_positive(self, cycle_5):
        """Test k >= 1."""
        with pytest.raises(GraphError):
            sparse_certificate(cycle_5.as_multigraph(), 0)

    @settings(max_examples=60, deadline=None)
    @given(simple_graphs(min_n=2, max_n=8), st.integers(min_value=1, max_value=4))
    def test_soundness_and_size(self, g, k):
        """Test the certificate guarantees on random graphs."""
        mg = g.as_multigraph()
        forests = sparse_certificate(mg, k)
        assert forests.retained_count <= k * (mg.supernode_count - 1)
        kept = _retained(mg, forests.retained_edge_ids)
        for side in proper_sides(mg.supernode_count):
            assert multigraph_cut_size(kept, side) >= min(k, multigraph_cut_size(mg, side))
        for i in range(1, k + 1):
            assert _is_forest(mg, forests.forest(i))


class TestCertificateReduction:
    """Test cases for reduce_edges_certificate."""

    def test_forest_is_identity(self):
        """Test that a tree is left unchanged for any k."""
        mg = generate("path", 7).as_multigraph()
        for k in (1, 3):
            assert reduce_edges_certificate(mg, k) == mg

    def test_large_k_is_identity(self):
        """Test that K4 with k = 10 is unchanged."""
        mg = generate("clique", 4).as_multigraph()
        assert reduce_edges_certificate(mg, 10) == mg

    def test_small_cut_survives(self):
        """Test that the two bridges between two K6 survive k = 4 while the cliques shrink."""
        g = generate("two_cliques", 6, 2)
        reduced = reduce_edges_certificate(g.as_multigraph(), 4, until_stable=True)
        bridges = frozenset({30, 31})
        assert bridges <= reduced.edge_ids
        assert reduced.supernode_count < g.vertex_count
        assert reduced.edge_count < 4 * reduced.supernode_count
        side = {int(reduced.vertex_map[v]) for v in range(6)}
        assert reduced.crossing_edge_ids(side) == bridges

    def test_until_stable_is_idempotent(self, two_cliques_8_3):
        """Test that a stable reduction is a fixpoint."""
        once = reduce_edges_certificate(two_cliques_8_3.as_multigraph(), 3, until_stable=True)
        assert reduce_edges_certificate(once, 3) == once

    @settings(max_examples=40, deadline=None)
    @given(simple_graphs(min_n=2, max_n=8, connected=True), st.integers(min_value=1, max_value=3))
    def test_small_cuts_keep_their_edges(self, g, k):
        """Test that every cut of size <= k keeps its exact edge ids after reduction."""
        mg = g.as_multigraph()
        reduced = reduce_edges_certificate(mg, k, until_stable=True)
        for side in proper_sides(mg.supernode_count):
            crossing = mg.crossing_edge_ids(side)
            if len(crossing) <= k:
                assert crossing <= reduced.edge_ids
                supernodes = {int(reduced.vertex_map[v]) for v in side}
                assert reduced.crossing_edge_ids(supernodes) == crossing
        if reduced.supernode_count > 1:
            value, _ = exhaustive_mincut(reduced)
            original, _ = exhaustive_mincut(mg)
            assert value == original or (value > k and original > k)

    @settings(max_examples=100, deadline=None)
    @given(multigraphs(min_n=2, max_n=9), st.integers(min_value=1, max_value=6))
    def test_default_call_is_idempotent(self, mg, k):
        """Test that reducing twice with the same k gives the same multigraph as reducing once."""
        once = reduce_edges_certificate(mg, k)
        twice = reduce_edges_certificate(once, k)
        assert twice == once
        assert twice.edge_ids == once.edge_ids
        assert sparse_certificate(once, k).retained_count == once.edge_count

    def test_single_pass_option(self):
        """Test that until_stable=False stops after one round and the default continues to the fixpoint."""
        mg = generate("clique", 7).as_multigraph()
        single = reduce_edges_certificate(mg, 2, until_stable=False)
        stable = reduce_edges_certificate(mg, 2)
        assert single.edge_count < mg.edge_count
        assert stable.edge_count <= single.edge_count
        assert reduce_edges_certificate(stable, 2, until_stable=False) == stable

    @pytest.mark.slow
    @settings(max_examples=200, deadline=None)
    @given(multigraphs(min_n=2, max_n=10), st.integers(min_value=1, max_value=6))
    def test_soundness_on_multigraphs(self, mg, k):
        """Test every proper cut of random multigraphs against the retained certificate edges."""
        forests = sparse_certificate(mg, k)
        assert forests.retained_count < k * mg.supernode_count
        kept = _retained(mg, forests.retained_edge_ids)
        for side in proper_sides(mg.supernode_count):
            assert multigraph_cut_size(kept, side) >= min(k, multigraph_cut_size(mg, side))
        reduced = reduce_edges_certificate(mg, k)
        assert reduced.edge_count <= k * reduced.supernode_count
