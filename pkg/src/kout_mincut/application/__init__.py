"""Application layer: the algorithms."""
