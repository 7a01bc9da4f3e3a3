"""Domain interfaces and abstract base classes."""

from .solver_interface import IMinCutSolver, ISolverFactory

__all__ = [
    "IMinCutSolver",
    "ISolverFactory",
]
