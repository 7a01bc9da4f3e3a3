"""Graph value objects: simple graphs, contraction multigraphs and cuts."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, NamedTuple

import numpy as np

from ..exceptions import GraphError, InvalidCutError, SimplicityViolationError


class GraphFormat(str, Enum):
    """On-disk graph formats."""

    EDGE_LIST = "edge-list"
    DIMACS = "dimacs"


class Edge(NamedTuple):
    """An undirected edge with its stable identity."""

    u: int
    v: int
    edge_id: int


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable simple undirected graph.

    Edge ids are positional: ``edges[i].edge_id == i``. Vertices are
    ``0 .. vertex_count - 1``. Build instances with :meth:`from_pairs`.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(init=False, repr=False, compare=False)
    degrees: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for position, (u, v, edge_id) in enumerate(self.edges):
            if edge_id != position:
                raise GraphError(f"edge ids must be 0..m-1 in order, found id {edge_id} at position {position}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {edge_id} endpoint out of range for n={n}: ({u}, {v})")
            if u == v:
                raise SimplicityViolationError(f"self-loop at vertex {u}", pair=(u, v))
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise SimplicityViolationError(f"duplicate edge {key}", pair=key)
            seen.add(key)
            adjacency[u].append((v, edge_id))
            adjacency[v].append((u, edge_id))
        object.__setattr__(self, "adjacency", tuple(tuple(row) for row in adjacency))
        object.__setattr__(self, "degrees", tuple(len(row) for row in adjacency))

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Iterable[tuple[int, int]]) -> SimpleGraph:
        """Build a graph assigning edge ids in iteration order."""
        edges = tuple(Edge(int(u), int(v), i) for i, (u, v) in enumerate(pairs))
        return cls(vertex_count=vertex_count, edges=edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def min_degree(self) -> int:
        """Minimum vertex degree; 0 for the empty graph."""
        return min(self.degrees, default=0)

    @cached_property
    def edge_u(self) -> np.ndarray:
        return _frozen(np.fromiter((e.u for e in self.edges), dtype=np.int64, count=len(self.edges)))

    @cached_property
    def edge_v(self) -> np.ndarray:
        return _frozen(np.fromiter((e.v for e in self.edges), dtype=np.int64, count=len(self.edges)))

    @cached_property
    def csr_offsets(self) -> np.ndarray:
        """Offsets into :attr:`csr_edge_ids`; vertex v owns ``[offsets[v], offsets[v+1])``."""
        offsets = np.zeros(self.vertex_count + 1, dtype=np.int64)
        np.cumsum(np.asarray(self.degrees, dtype=np.int64), out=offsets[1:])
        return _frozen(offsets)

    @cached_property
    def csr_edge_ids(self) -> np.ndarray:
        """Incident edge ids of every vertex, concatenated in adjacency order."""
        flat = [edge_id for row in self.adjacency for _, edge_id in row]
        return _frozen(np.asarray(flat, dtype=np.int64))

    def other_endpoint(self, edge_id: int, vertex: int) -> int:
        u, v, _ = self.edges[edge_id]
        return v if vertex == u else u

    def as_multigraph(self) -> MultiGraph:
        """The identity contraction of this graph."""
        return MultiGraph(
            supernode_count=max(self.vertex_count, 1),
            super_u=self.edge_u,
            super_v=self.edge_v,
            edge_ids=np.arange(self.edge_count, dtype=np.int64),
            vertex_map=np.arange(self.vertex_count, dtype=np.int64),
        )


class MultiGraph:
    """Contraction quotient of a :class:`SimpleGraph`.

    Parallel edges are kept individually and carry the id of the original
    edge they came from; self-loops never appear. ``vertex_map[v]`` is the
    supernode that original vertex ``v`` was merged into.
    """

    def __init__(
        self,
        supernode_count: int,
        super_u: Sequence[int] | np.ndarray,
        super_v: Sequence[int] | np.ndarray,
        edge_ids: Sequence[int] | np.ndarray,
        vertex_map: Sequence[int] | np.ndarray,
        validate: bool = True,
    ):
        self.supernode_count = int(supernode_count)
        self._u = _frozen(np.array(super_u, dtype=np.int64))
        self._v = _frozen(np.array(super_v, dtype=np.int64))
        self._ids = _frozen(np.array(edge_ids, dtype=np.int64))
        self._vertex_map = _frozen(np.array(vertex_map, dtype=np.int64))
        if validate:
            self._validate()

    def _validate(self) -> None:
        if self.supernode_count < 1:
            raise GraphError(f"a multigraph needs at least one supernode, got {self.supernode_count}")
        if not (len(self._u) == len(self._v) == len(self._ids)):
            raise GraphError("edge endpoint and id arrays differ in length")
        if len(self._u):
            if np.any(self._u == self._v):
                raise GraphError("multigraph edges must not be self-loops")
            low = min(self._u.min(), self._v.min())
            high = max(self._u.max(), self._v.max())
            if low < 0 or high >= self.supernode_count:
                raise GraphError("multigraph edge endpoint out of supernode range")
            if len(np.unique(self._ids)) != len(self._ids):
                raise GraphError("original edge ids must appear at most once")
        if len(self._vertex_map) and (
            self._vertex_map.min() < 0 or self._vertex_map.max() >= self.supernode_count
        ):
            raise GraphError("vertex_map refers to an unknown supernode")

    @classmethod
    def from_edges(
        cls,
        supernode_count: int,
        edges: Iterable[tuple[int, int, int]],
        vertex_map: Sequence[int] | None = None,
    ) -> MultiGraph:
        """Build from ``(super_u, super_v, edge_id)`` triples; identity vertex map by default."""
        triples = list(edges)
        if vertex_map is None:
            vertex_map = range(supernode_count)
        return cls(
            supernode_count=supernode_count,
            super_u=[t[0] for t in triples],
            super_v=[t[1] for t in triples],
            edge_ids=[t[2] for t in triples],
            vertex_map=list(vertex_map),
        )

    @property
    def edge_count(self) -> int:
        return len(self._ids)

    @property
    def super_u(self) -> np.ndarray:
        return self._u

    @property
    def super_v(self) -> np.ndarray:
        return self._v

    @property
    def edge_id_array(self) -> np.ndarray:
        return self._ids

    @property
    def vertex_map(self) -> np.ndarray:
        return self._vertex_map

    @property
    def original_vertex_count(self) -> int:
        return len(self._vertex_map)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(Edge(int(u), int(v), int(i)) for u, v, i in zip(self._u, self._v, self._ids, strict=True))

    @cached_property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(int(i) for i in self._ids)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        counts = np.bincount(self._u, minlength=self.supernode_count) + np.bincount(
            self._v, minlength=self.supernode_count
        )
        return tuple(int(c) for c in counts)

    @cached_property
    def members(self) -> tuple[tuple[int, ...], ...]:
        """Original vertices of every supernode, ascending."""
        groups: list[list[int]] = [[] for _ in range(self.supernode_count)]
        for vertex, supernode in enumerate(self._vertex_map.tolist()):
            groups[supernode].append(vertex)
        return tuple(tuple(g) for g in groups)

    def contract(self, labels: Sequence[int] | np.ndarray) -> MultiGraph:
        """Merge supernodes sharing a label; drop edges that become self-loops.

        Labels are compacted to ``0 .. distinct-1`` in ascending label order and
        the vertex map is composed so it still points from original vertices.
        """
        labels = np.asarray(labels, dtype=np.int64)
        if len(labels) != self.supernode_count:
            raise GraphError(f"expected {self.supernode_count} labels, got {len(labels)}")
        distinct, compact = np.unique(labels, return_inverse=True)
        compact = compact.reshape(-1)
        new_u = compact[self._u]
        new_v = compact[self._v]
        keep = new_u != new_v
        return MultiGraph(
            supernode_count=max(len(distinct), 1),
            super_u=new_u[keep],
            super_v=new_v[keep],
            edge_ids=self._ids[keep],
            vertex_map=compact[self._vertex_map] if len(self._vertex_map) else self._vertex_map,
            validate=False,
        )

    def crossing_edge_ids(self, side: Iterable[int]) -> frozenset[int]:
        """Ids of the edges with exactly one endpoint in the supernode set ``side``."""
        mask = np.zeros(self.supernode_count, dtype=bool)
        mask[list(side)] = True
        crossing = mask[self._u] != mask[self._v]
        return frozenset(int(i) for i in self._ids[crossing])

    def to_original_cut(self, side: Iterable[int]) -> Cut:
        """Expand a supernode side through vertex_map preimages into an original-graph cut."""
        side = set(side)
        original_side = frozenset(v for v, s in enumerate(self._vertex_map.tolist()) if s in side)
        return Cut(
            side=original_side,
            edge_ids=self.crossing_edge_ids(side),
            vertex_count=self.original_vertex_count,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return (
            self.supernode_count == other.supernode_count
            and np.array_equal(self._vertex_map, other._vertex_map)
            and sorted(self.edges, key=lambda e: e.edge_id) == sorted(other.edges, key=lambda e: e.edge_id)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"MultiGraph(supernode_count={self.supernode_count}, edge_count={self.edge_count})"


@dataclass(frozen=True)
class Cut:
    """A cut identified by one side ``S`` and its crossing edge ids ``C(S)``."""

    side: frozenset[int]
    edge_ids: frozenset[int]
    vertex_count: int

    def __post_init__(self):
        if not self.side:
            raise InvalidCutError("cut side must not be empty")
        if len(self.side) >= self.vertex_count:
            raise InvalidCutError("cut side must not contain every vertex")
        if min(self.side) < 0 or max(self.side) >= self.vertex_count:
            raise InvalidCutError(f"cut side names a vertex outside 0..{self.vertex_count - 1}")

    @property
    def size(self) -> int:
        return len(self.edge_ids)

    @property
    def is_singleton(self) -> bool:
        return len(self.side) == 1 or len(self.side) == self.vertex_count - 1

    def to_record(self) -> dict[str, Any]:
        return {
            "value": self.size,
            "side": sorted(self.side),
            "edge_ids": sorted(self.edge_ids),
            "is_singleton": self.is_singleton,
        }
