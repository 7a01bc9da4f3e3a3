"""Ground-truth min-cut oracles: exhaustive side enumeration and unit-capacity max-flow."""

import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, maximum_flow

from kout_mincut.application.graph.operations import component_labels
from kout_mincut.domain.exceptions import InvariantViolationError, SolverError, UndefinedConnectivityError
from kout_mincut.domain.interfaces.solver_interface import IMinCutSolver
from kout_mincut.domain.models.graph_models import MultiGraph, SimpleGraph
from kout_mincut.domain.models.result_models import MinCutMethod, MinCutResult

from .stoer_wagner import require_solvable, weight_matrix

logger = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 16
_MASK_BLOCK = 4096


def exhaustive_mincut(mg: MultiGraph) -> tuple[int, frozenset[int]]:
    """Enumerate all ``2^(N-1) - 1`` sides that exclude supernode 0.

    Ties go to the side with the smallest bitmask.
    """
    require_solvable(mg)
    n = mg.supernode_count
    if n > EXHAUSTIVE_LIMIT:
        raise SolverError(f"exhaustive enumeration is limited to {EXHAUSTIVE_LIMIT} supernodes, got {n}")
    weights = weight_matrix(mg)
    bits = np.arange(n - 1, dtype=np.int64)
    best_value, best_mask = None, 0
    for start in range(1, 1 << (n - 1), _MASK_BLOCK):
        masks = np.arange(start, min(start + _MASK_BLOCK, 1 << (n - 1)), dtype=np.int64)
        inside = np.zeros((len(masks), n), dtype=np.float64)
        inside[:, 1:] = (masks[:, None] >> bits[None, :]) & 1
        # x^T W (1 - x): edge weight leaving the side
        values = np.einsum("ij,ij->i", inside @ weights, 1.0 - inside)
        position = int(np.argmin(values))
        if best_value is None or values[position] < best_value:
            best_value, best_mask = float(values[position]), int(masks[position])
    side = frozenset(v + 1 for v in range(n - 1) if best_mask >> v & 1)
    return int(round(best_value)), side


def _capacity_matrix(mg: MultiGraph) -> csr_matrix:
    n = mg.supernode_count
    rows = np.concatenate([mg.super_u, mg.super_v])
    cols = np.concatenate([mg.super_v, mg.super_u])
    data = np.ones(len(rows), dtype=np.int32)
    matrix = csr_matrix((data, (rows, cols)), shape=(n, n), dtype=np.int32)
    matrix.sum_duplicates()
    return matrix


def maxflow_mincut(mg: MultiGraph) -> tuple[int, frozenset[int]]:
    """Fix s = 0, run unit-capacity max-flow to every other supernode, keep the minimum.

    The witness side is the set reachable from s in the residual graph of the best run.
    """
    require_solvable(mg)
    capacities = _capacity_matrix(mg)
    best_value, best_flow = None, None
    for target in range(1, mg.supernode_count):
        result = maximum_flow(capacities, 0, target, method="edmonds_karp")
        if best_value is None or result.flow_value < best_value:
            best_value, best_flow = int(result.flow_value), result.flow
    residual = (capacities - best_flow).tocsr()
    residual.data[residual.data < 0] = 0
    residual.eliminate_zeros()
    reachable = breadth_first_order(residual, 0, directed=True, return_predecessors=False)
    side = frozenset(int(v) for v in reachable)
    if len(mg.crossing_edge_ids(side)) != best_value:
        message = f"residual side crosses {len(mg.crossing_edge_ids(side))} edges, flow value is {best_value}"
        logger.error(message)
        raise InvariantViolationError(message, invariant="maxflow_witness")
    return best_value, side


def _disconnected_result(mg: MultiGraph, labels: np.ndarray, method: MinCutMethod) -> MinCutResult:
    side = np.flatnonzero(labels == labels[0]).tolist()
    witness = mg.to_original_cut(side)
    return MinCutResult(value=0, witness=witness, method=method, is_singleton=witness.is_singleton)


def oracle_mincut(g: SimpleGraph | MultiGraph, method: MinCutMethod | None = None) -> MinCutResult:
    """Exact minimum cut, by enumeration up to 16 (super)nodes and by max-flow beyond.

    Disconnected input yields value 0 with the component of vertex 0 as witness.
    """
    mg = g.as_multigraph() if isinstance(g, SimpleGraph) else g
    if mg.supernode_count < 2:
        raise UndefinedConnectivityError("edge connectivity needs at least two vertices")
    if method is None:
        method = (
            MinCutMethod.ORACLE_EXHAUSTIVE if mg.supernode_count <= EXHAUSTIVE_LIMIT else MinCutMethod.ORACLE_MAXFLOW
        )
    if method not in (MinCutMethod.ORACLE_EXHAUSTIVE, MinCutMethod.ORACLE_MAXFLOW):
        raise SolverError(f"oracle method must be exhaustive or maxflow, got {method.value}")

    labels, count = component_labels(mg.supernode_count, mg.super_u, mg.super_v)
    if count > 1:
        logger.info(f"Oracle input has {count} components; edge connectivity is 0")
        return _disconnected_result(mg, labels, method)

    solve = exhaustive_mincut if method == MinCutMethod.ORACLE_EXHAUSTIVE else maxflow_mincut
    value, side = solve(mg)
    witness = mg.to_original_cut(side)
    min_degree_vertices: list[int] = []
    if isinstance(g, SimpleGraph):
        delta = g.min_degree
        min_degree_vertices = [v for v, d in enumerate(g.degrees) if d == delta]
    logger.debug(f"Oracle ({method.value}) value {value}")
    return MinCutResult(
        value=value,
        witness=witness,
        method=method,
        is_singleton=witness.is_singleton,
        min_degree_vertices=min_degree_vertices,
    )


class ExhaustiveSolver(IMinCutSolver):
    @property
    def name(self) -> str:
        return "exhaustive"

    def solve(self, mg: MultiGraph) -> tuple[int, frozenset[int]]:
        return exhaustive_mincut(mg)


class MaxFlowSolver(IMinCutSolver):
    @property
    def name(self) -> str:
        return "maxflow"

    def solve(self, mg: MultiGraph) -> tuple[int, frozenset[int]]:
        return maxflow_mincut(mg)
