"""Models for random k-out sampling, amplification and certificates."""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class OracleAnswer(str, Enum):
    """Answer of a forest oracle for one edge."""

    PRESERVE = "preserve"
    CONTRACT = "contract"


class EdgeReducer(str, Enum):
    """Edge reduction applied after the 2-out contraction."""

    CERTIFICATE = "certificate"
    RANDOM_SAMPLE = "random_sample"


class PipelineVariant(str, Enum):
    """Contraction strategy used by the edge connectivity pipeline."""

    AMPLIFIED = "amplified"
    DENSE = "dense"
    DIRECT = "direct"


@dataclass(frozen=True, eq=False)
class KOutSample:
    """Edges drawn by a random k-out sample.

    Attributes:
        k: Draws per vertex.
        chosen: ``(n, k)`` array; row v holds the edge ids vertex v drew, repeats allowed.
        edge_id_set: Union of all draws.
    """

    k: int
    chosen: np.ndarray
    edge_id_set: frozenset[int]

    @property
    def vertex_count(self) -> int:
        return int(self.chosen.shape[0])


@dataclass(frozen=True)
class CertificateForests:
    """Forest decomposition produced by the sparse certificate scan.

    ``forest_index`` maps every scanned edge id to its forest (1-based);
    edges with an index above ``k`` are not part of the certificate.
    """

    k: int
    forest_index: dict[int, int]
    retained_edge_ids: tuple[int, ...]

    @property
    def retained_count(self) -> int:
        return len(self.retained_edge_ids)

    def forest(self, index: int) -> tuple[int, ...]:
        """Edge ids assigned to forest ``index``, in scan order."""
        return tuple(e for e, i in self.forest_index.items() if i == index)


def _log_n(n: int) -> float:
    return math.log(max(n, 2))


class AmplificationConfig(BaseModel):
    """Repetition-and-voting parameters plus the tunable constants of the contraction.

    ``q``/``r`` drive :func:`amplified_contraction`; ``dense_q``/``dense_r`` drive
    :func:`dense_contraction`, whose per-repetition success rate is ``p_hat / 2``.
    Use :meth:`for_graph` to derive the repetition counts for an n-vertex input.
    """

    model_config = ConfigDict(frozen=True, use_enum_values=False)

    eps: float = Field(default=1.0, gt=0.0, le=1.0)
    gamma: float = Field(default=1.0, gt=0.0)
    q: int = Field(default=1, ge=1)
    r: int = Field(default=1, ge=1)
    dense_q: int = Field(default=1, ge=1)
    dense_r: int = Field(default=1, ge=1)
    p_hat: float = Field(default=0.05, gt=0.0, lt=1.0)
    c_q: float = Field(default=8.0, gt=0.0)
    certificate_multiplier: float = Field(default=2.0, gt=0.0)
    edge_sample_rate_denominator: float = Field(default=2.0, gt=0.0)
    supernode_budget_factor: float = Field(default=8.0, gt=0.0)
    reducer: EdgeReducer = EdgeReducer.CERTIFICATE

    @model_validator(mode="after")
    def _check_votes(self) -> "AmplificationConfig":
        if self.r > self.q:
            raise ValueError(f"vote threshold r={self.r} exceeds repetition count q={self.q}")
        if self.dense_r > self.dense_q:
            raise ValueError(f"dense vote threshold {self.dense_r} exceeds dense repetitions {self.dense_q}")
        return self

    @staticmethod
    def repetitions(n: int, gamma: float, p: float, c_q: float) -> int:
        """``ceil(c_q * gamma * ln n / p)``, at least 1."""
        return max(1, math.ceil(c_q * gamma * _log_n(n) / p))

    @staticmethod
    def threshold(q: int, p: float) -> int:
        """``ceil(p * q / 2)`` clamped into ``[1, q]``."""
        return min(q, max(1, math.ceil(p * q / 2)))

    @classmethod
    def for_graph(
        cls,
        n: int,
        q: int | None = None,
        r: int | None = None,
        dense_q: int | None = None,
        dense_r: int | None = None,
        **kwargs,
    ) -> "AmplificationConfig":
        """Derive q, r, q' and r' for an n-vertex graph; explicit values override."""
        base = cls(**kwargs)
        q = q if q is not None else cls.repetitions(n, base.gamma, base.p_hat, base.c_q)
        r = r if r is not None else cls.threshold(q, base.p_hat)
        dense_p = base.p_hat / 2
        dense_q = dense_q if dense_q is not None else cls.repetitions(n, base.gamma, dense_p, base.c_q)
        dense_r = dense_r if dense_r is not None else cls.threshold(dense_q, dense_p)
        return cls(**kwargs, q=q, r=r, dense_q=dense_q, dense_r=dense_r)

    def certificate_k(self, min_degree: int) -> int:
        """Certificate strength ``ceil(certificate_multiplier * delta)``."""
        return max(1, math.ceil(self.certificate_multiplier * min_degree))

    def supernode_budget(self, n: int, min_degree: int) -> int:
        """Forest-oracle colour budget ``ceil(supernode_budget_factor * n / delta)``."""
        return max(1, math.ceil(self.supernode_budget_factor * n / max(min_degree, 1)))
