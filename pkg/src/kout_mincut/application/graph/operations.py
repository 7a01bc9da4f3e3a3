"""Core graph operations: degrees, components, contraction and cuts."""

import logging
from collections.abc import Iterable, Iterator

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _csgraph_components

from kout_mincut.domain.exceptions import GraphError, InvalidCutError
from kout_mincut.domain.models.graph_models import Cut, MultiGraph, SimpleGraph

logger = logging.getLogger(__name__)


def min_degree(g: SimpleGraph) -> int:
    """Minimum vertex degree; 0 iff some vertex is isolated."""
    if g.vertex_count < 1:
        raise GraphError("minimum degree is undefined for the empty graph")
    return g.min_degree


def min_degree_vertices(g: SimpleGraph) -> list[int]:
    delta = min_degree(g)
    return [v for v, d in enumerate(g.degrees) if d == delta]


def component_labels(vertex_count: int, u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, int]:
    """Label the components of ``(range(vertex_count), zip(u, v))``.

    Labels are numbered in order of each component's smallest vertex.
    """
    if vertex_count == 0:
        return np.zeros(0, dtype=np.int64), 0
    data = np.ones(len(u), dtype=np.int32)
    adjacency = coo_matrix((data, (u, v)), shape=(vertex_count, vertex_count)).tocsr()
    count, labels = _csgraph_components(adjacency, directed=False)
    return labels.astype(np.int64), int(count)


def connected_components(edge_ids: Iterable[int], g: SimpleGraph) -> tuple[list[int], int]:
    """Components of the spanning subgraph ``(V, edge_ids)``.

    Returns:
        Per-vertex component labels and the number of components
    """
    ids = np.fromiter((int(e) for e in edge_ids), dtype=np.int64)
    if len(ids) and (ids.min() < 0 or ids.max() >= g.edge_count):
        raise GraphError(f"edge ids must lie in 0..{g.edge_count - 1}")
    labels, count = component_labels(g.vertex_count, g.edge_u[ids], g.edge_v[ids])
    return labels.tolist(), count


def is_connected(g: SimpleGraph) -> bool:
    if g.vertex_count <= 1:
        return True
    _, count = component_labels(g.vertex_count, g.edge_u, g.edge_v)
    return count == 1


def contract_by_labels(g: SimpleGraph, labels: Iterable[int]) -> MultiGraph:
    """Quotient of ``g`` by a vertex labelling; edges inside a class are dropped."""
    labels = np.asarray(list(labels) if not isinstance(labels, np.ndarray) else labels, dtype=np.int64)
    if len(labels) != g.vertex_count:
        raise GraphError(f"expected {g.vertex_count} labels, got {len(labels)}")
    if g.vertex_count == 0:
        raise GraphError("cannot contract the empty graph")
    return g.as_multigraph().contract(labels)


def cut_from_side(g: SimpleGraph, side: Iterable[int]) -> Cut:
    """The cut ``C(S)`` of ``g`` for the vertex set ``side``."""
    side = frozenset(int(v) for v in side)
    if not side or len(side) >= g.vertex_count:
        raise InvalidCutError(f"cut side must be a non-empty proper subset of {g.vertex_count} vertices")
    if min(side) < 0 or max(side) >= g.vertex_count:
        raise InvalidCutError(f"cut side names a vertex outside 0..{g.vertex_count - 1}")
    mask = np.zeros(g.vertex_count, dtype=bool)
    mask[list(side)] = True
    crossing = np.flatnonzero(mask[g.edge_u] != mask[g.edge_v])
    return Cut(side=side, edge_ids=frozenset(crossing.tolist()), vertex_count=g.vertex_count)


def validate_cut(g: SimpleGraph, cut: Cut) -> bool:
    """Check that ``cut.edge_ids`` is exactly the crossing set of ``cut.side`` in ``g``."""
    return cut.vertex_count == g.vertex_count and cut_from_side(g, cut.side).edge_ids == cut.edge_ids


def proper_sides(vertex_count: int) -> Iterator[frozenset[int]]:
    """Every cut side up to complement: non-empty subsets avoiding vertex 0."""
    for mask in range(1, 1 << max(vertex_count - 1, 0)):
        yield frozenset(i + 1 for i in range(vertex_count - 1) if mask >> i & 1)


def multigraph_cut_size(mg: MultiGraph, side: Iterable[int]) -> int:
    return len(mg.crossing_edge_ids(side))
