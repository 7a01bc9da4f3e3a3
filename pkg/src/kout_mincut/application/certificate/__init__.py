"""Sparse connectivity certificates."""

from .sparse_certificate import reduce_edges_certificate, sparse_certificate

__all__ = ["reduce_edges_certificate", "sparse_certificate"]
