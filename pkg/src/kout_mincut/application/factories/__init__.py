"""Factory implementations."""

from .solver_factory import DefaultSolverFactory, SolverFactoryRegistry, solver_factory

__all__ = [
    "DefaultSolverFactory",
    "SolverFactoryRegistry",
    "solver_factory",
]
