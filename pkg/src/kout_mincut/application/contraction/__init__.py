"""Random contraction: k-out sampling, amplification and forest oracles."""

from .amplification import (
    amplified_contraction,
    amplified_contraction_with_votes,
    contract_by_votes,
    require_contractible,
    single_contraction,
    survival_votes,
)
from .forest_oracle import (
    DenseContractionStats,
    ForestOracle,
    dense_contraction,
    dense_contraction_with_stats,
    forest_oracle_new,
    forest_oracle_query,
)
from .sampling import (
    derive_seeds,
    k_out_components,
    k_out_contraction,
    k_out_draws,
    reduce_edges_random,
    sample_components,
    sample_k_out,
)

__all__ = [
    "DenseContractionStats",
    "ForestOracle",
    "amplified_contraction",
    "amplified_contraction_with_votes",
    "contract_by_votes",
    "dense_contraction",
    "dense_contraction_with_stats",
    "derive_seeds",
    "forest_oracle_new",
    "forest_oracle_query",
    "k_out_components",
    "k_out_contraction",
    "k_out_draws",
    "reduce_edges_random",
    "require_contractible",
    "sample_components",
    "sample_k_out",
    "single_contraction",
    "survival_votes",
]
