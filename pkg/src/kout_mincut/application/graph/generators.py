"""Seeded graph families and inline generator specs (``kind:p1,p2,...``)."""

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from kout_mincut.domain.exceptions import InfeasibleParametersError
from kout_mincut.domain.models.graph_models import SimpleGraph

logger = logging.getLogger(__name__)


def _require(condition: bool, kind: str, params: tuple, reason: str) -> None:
    if not condition:
        raise InfeasibleParametersError(f"{kind}{list(params)}: {reason}", kind=kind, params=params)


def _clique_pairs(offset: int, size: int) -> list[tuple[int, int]]:
    return [(offset + a, offset + b) for a, b in itertools.combinations(range(size), 2)]


def _bridge_pairs(left: int, right: int, size: int, count: int) -> list[tuple[int, int]]:
    """``count`` distinct edges between two cliques of ``size`` vertices starting at ``left`` and ``right``.

    Bridge i joins ``i mod size`` on the left to ``(i mod size + i div size) mod size``
    on the right, so the bridges spread over both sides before any vertex repeats.
    """
    pairs = []
    for i in range(count):
        a = i % size
        b = (a + i // size) % size
        pairs.append((left + a, right + b))
    return pairs


def cycle(n: int) -> SimpleGraph:
    _require(n >= 3, "cycle", (n,), "a simple cycle needs at least 3 vertices")
    return SimpleGraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> SimpleGraph:
    _require(n >= 1, "path", (n,), "a path needs at least 1 vertex")
    return SimpleGraph.from_pairs(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> SimpleGraph:
    _require(leaves >= 1, "star", (leaves,), "a star needs at least 1 leaf")
    return SimpleGraph.from_pairs(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def clique(n: int) -> SimpleGraph:
    _require(n >= 1, "clique", (n,), "a clique needs at least 1 vertex")
    return SimpleGraph.from_pairs(n, _clique_pairs(0, n))


def two_cliques(k: int, lam: int) -> SimpleGraph:
    """Two ``K_k`` on ``[0, k)`` and ``[k, 2k)`` joined by ``lam`` bridges.

    The planted cut (either clique) is the unique minimum cut when ``lam < k - 1``.
    """
    params = (k, lam)
    _require(k >= 2, "two_cliques", params, "cliques need at least 2 vertices")
    _require(0 <= lam <= k * k, "two_cliques", params, f"at most k^2 = {k * k} distinct bridges exist")
    pairs = _clique_pairs(0, k) + _clique_pairs(k, k) + _bridge_pairs(0, k, k, lam)
    return SimpleGraph.from_pairs(2 * k, pairs)


def disjoint_cliques(count: int, size: int) -> SimpleGraph:
    params = (count, size)
    _require(count >= 1 and size >= 1, "disjoint_cliques", params, "count and size must be positive")
    pairs = [p for c in range(count) for p in _clique_pairs(c * size, size)]
    return SimpleGraph.from_pairs(count * size, pairs)


def clique_chain(count: int, size: int, bridge: int) -> SimpleGraph:
    """``count`` cliques of ``size`` vertices, consecutive ones joined by ``bridge`` edges."""
    params = (count, size, bridge)
    _require(count >= 1 and size >= 2, "clique_chain", params, "need at least one clique of size >= 2")
    _require(0 <= bridge <= size * size, "clique_chain", params, f"at most size^2 = {size * size} bridges")
    pairs = [p for c in range(count) for p in _clique_pairs(c * size, size)]
    for c in range(count - 1):
        pairs.extend(_bridge_pairs(c * size, (c + 1) * size, size, bridge))
    return SimpleGraph.from_pairs(count * size, pairs)


def gnp(n: int, p: float, seed: int = 0) -> SimpleGraph:
    """Erdos-Renyi graph; pairs are drawn in row-major order of the upper triangle."""
    _require(n >= 1, "gnp", (n, p), "need at least 1 vertex")
    _require(0.0 <= p <= 1.0, "gnp", (n, p), "p must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    keep = rng.random(len(rows)) < p
    return SimpleGraph.from_pairs(n, zip(rows[keep].tolist(), cols[keep].tolist(), strict=True))


_FAMILIES = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "clique": (clique, 1),
    "two_cliques": (two_cliques, 2),
    "disjoint_cliques": (disjoint_cliques, 2),
    "clique_chain": (clique_chain, 3),
    "gnp": (gnp, 2),
}


def supported_kinds() -> list[str]:
    return sorted(_FAMILIES)


@dataclass(frozen=True)
class GraphSpec:
    """A parsed generator spec such as ``two_cliques:10,4``."""

    kind: str
    params: tuple[float, ...]

    @classmethod
    def parse(cls, text: str) -> "GraphSpec":
        kind, _, raw = text.strip().partition(":")
        kind = kind.strip()
        if kind not in _FAMILIES:
            raise InfeasibleParametersError(
                f"unknown generator '{kind}', expected one of {', '.join(supported_kinds())}", kind=kind
            )
        try:
            params = tuple(float(p) for p in raw.split(",") if p.strip()) if raw else ()
        except ValueError as e:
            raise InfeasibleParametersError(f"cannot parse generator parameters '{raw}'", kind=kind) from e
        _, arity = _FAMILIES[kind]
        if len(params) != arity:
            raise InfeasibleParametersError(
                f"{kind} takes {arity} parameter(s), got {len(params)}", kind=kind, params=params
            )
        return cls(kind=kind, params=params)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(_render(p) for p in self.params)}"


def _render(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(value)


def _as_int(kind: str, params: tuple, value: float) -> int:
    _require(float(value).is_integer(), kind, params, f"parameter {value} must be an integer")
    return int(value)


def generate(kind: str, *params: float, seed: int = 0) -> SimpleGraph:
    """Build a graph of the named family. Only ``gnp`` uses the seed."""
    if kind not in _FAMILIES:
        raise InfeasibleParametersError(f"unknown generator '{kind}'", kind=kind, params=params)
    builder, arity = _FAMILIES[kind]
    _require(len(params) == arity, kind, params, f"expected {arity} parameter(s)")
    if kind == "gnp":
        g = gnp(_as_int(kind, params, params[0]), float(params[1]), seed=seed)
    else:
        g = builder(*(_as_int(kind, params, p) for p in params))
    logger.debug(f"Generated {kind}{list(params)}: n={g.vertex_count} m={g.edge_count}")
    return g


def generate_from_spec(spec: str | GraphSpec, seed: int = 0) -> SimpleGraph:
    parsed = spec if isinstance(spec, GraphSpec) else GraphSpec.parse(spec)
    return generate(parsed.kind, *parsed.params, seed=seed)


def bundled_corpus() -> list[str]:
    """Generator specs of the regression corpus on which ``mincut`` must agree with ``oracle``."""
    return [
        "cycle:5",
        "cycle:30",
        "path:12",
        "star:8",
        "clique:6",
        "two_cliques:8,3",
        "two_cliques:10,4",
        "two_cliques:12,1",
        "clique_chain:3,6,2",
        "clique_chain:4,5,3",
        "gnp:40,0.3",
        "gnp:60,0.2",
    ]
