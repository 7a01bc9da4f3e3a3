"""kout_mincut - edge connectivity via random 2-out contraction."""

from kout_mincut.observability import setup_logging

from .config import settings

__all__ = ["settings", "setup_logging"]
