"""Online preserve/contract oracle over 2-out supernodes and the dense contraction built on it."""

import logging
from dataclasses import dataclass

import numpy as np

from kout_mincut.application.contraction.amplification import require_contractible
from kout_mincut.application.contraction.sampling import derive_seeds, k_out_components
from kout_mincut.application.graph.operations import contract_by_labels
from kout_mincut.domain.disjoint_sets import DisjointSets
from kout_mincut.domain.exceptions import InvariantViolationError, IsolatedVertexError, RepeatedQueryError
from kout_mincut.domain.models.contraction_models import AmplificationConfig, OracleAnswer
from kout_mincut.domain.models.graph_models import Edge, MultiGraph, SimpleGraph

logger = logging.getLogger(__name__)

_INDEX_BATCH = 256


class ForestOracle:
    """Answers Preserve or Contract for each edge, each edge at most once.

    A 2-out sample colours the vertices by component. The oracle keeps
    ``4 * delta`` union-find forests over the colours; an edge between
    different colours is offered to one uniformly chosen forest and is
    preserved iff it joins two trees there. Forests are created on first use.

    Attributes:
        trivial_mode: Set when the sample left more colours than the budget;
            every answer is then Contract.
        preserve_count: Preserve answers given so far.
    """

    def __init__(self, g: SimpleGraph, supernode_budget: int, seed: int):
        if g.vertex_count and g.min_degree < 1:
            vertex = g.degrees.index(0)
            raise IsolatedVertexError(f"vertex {vertex} is isolated", vertex=vertex)
        sample_seed, query_seed = derive_seeds(seed, 2)
        colors, color_count = k_out_components(g, 2, sample_seed)
        self._colors = colors.tolist()
        self.color_count = color_count
        self.forest_count = 4 * g.min_degree
        self.supernode_budget = supernode_budget
        self.trivial_mode = color_count > supernode_budget
        self.preserve_count = 0
        self._forests: dict[int, DisjointSets] = {}
        self._forest_edges: dict[int, list[int]] = {}
        self._queried: set[int] = set()
        self._rng = np.random.default_rng(query_seed)
        self._indices: list[int] = []
        if self.trivial_mode:
            logger.warning(
                f"Forest oracle has {color_count} colours, above budget {supernode_budget}; answering Contract only"
            )

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(self._colors)

    @property
    def preserve_budget(self) -> int:
        """Upper bound ``4 * delta * (colours - 1)`` on Preserve answers."""
        return self.forest_count * max(self.color_count - 1, 0)

    def forest_edges(self) -> dict[int, tuple[int, ...]]:
        """Edge ids added to each forest that has been used."""
        return {i: tuple(ids) for i, ids in self._forest_edges.items()}

    def _next_index(self) -> int:
        if not self._indices:
            self._indices = self._rng.integers(0, self.forest_count, size=_INDEX_BATCH).tolist()
            self._indices.reverse()
        return self._indices.pop()

    def query(self, edge: Edge) -> OracleAnswer:
        u, v, edge_id = edge
        if edge_id in self._queried:
            raise RepeatedQueryError(f"edge {edge_id} was already queried", edge_id=edge_id)
        self._queried.add(edge_id)
        if self.trivial_mode:
            return OracleAnswer.CONTRACT
        cu, cv = self._colors[u], self._colors[v]
        if cu == cv:
            return OracleAnswer.CONTRACT
        index = self._next_index()
        forest = self._forests.get(index)
        if forest is None:
            forest = self._forests[index] = DisjointSets(self.color_count)
        if not forest.union(cu, cv):
            return OracleAnswer.CONTRACT
        self._forest_edges.setdefault(index, []).append(edge_id)
        self.preserve_count += 1
        return OracleAnswer.PRESERVE


def forest_oracle_new(g: SimpleGraph, supernode_budget: int, seed: int) -> ForestOracle:
    return ForestOracle(g, supernode_budget, seed)


def forest_oracle_query(oracle: ForestOracle, edge: Edge) -> OracleAnswer:
    return oracle.query(edge)


@dataclass(frozen=True)
class DenseContractionStats:
    """Bookkeeping of one dense contraction run."""

    oracle_count: int
    threshold: int
    query_rounds: int
    merges: int
    preserve_voted_rounds: int
    trivial_oracles: int


def dense_contraction_with_stats(
    g: SimpleGraph,
    cfg: AmplificationConfig,
    seed: int,
) -> tuple[MultiGraph, DenseContractionStats]:
    require_contractible(g)
    n = g.vertex_count
    budget = cfg.supernode_budget(n, g.min_degree)
    oracles = [ForestOracle(g, budget, s) for s in derive_seeds(seed, cfg.dense_q)]
    classes = DisjointSets(n)
    rounds = merges = kept = 0
    for edge in g.edges:
        if classes.connected(edge.u, edge.v):
            continue
        rounds += 1
        votes = sum(1 for oracle in oracles if oracle.query(edge) is OracleAnswer.PRESERVE)
        if votes < cfg.dense_r:
            classes.union(edge.u, edge.v)
            merges += 1
        else:
            kept += 1
    if rounds > kept + n - 1:
        message = f"dense scan issued {rounds} rounds, above {kept} preserve-voted + {n - 1}"
        logger.error(message)
        raise InvariantViolationError(message, invariant="dense_query_rounds")
    mg = contract_by_labels(g, classes.labels())
    stats = DenseContractionStats(
        oracle_count=len(oracles),
        threshold=cfg.dense_r,
        query_rounds=rounds,
        merges=merges,
        preserve_voted_rounds=kept,
        trivial_oracles=sum(1 for o in oracles if o.trivial_mode),
    )
    logger.info(
        f"Dense contraction q'={cfg.dense_q} r'={cfg.dense_r}: n={n} m={g.edge_count} -> "
        f"{mg.supernode_count} supernodes, {mg.edge_count} edges, {rounds} query rounds"
    )
    return mg, stats


def dense_contraction(g: SimpleGraph, cfg: AmplificationConfig, seed: int) -> MultiGraph:
    """Contract edges in one ascending-id scan, asking q' forest oracles about each."""
    mg, _ = dense_contraction_with_stats(g, cfg, seed)
    return mg
