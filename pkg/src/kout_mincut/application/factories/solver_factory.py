"""Solver factory implementations."""

from kout_mincut.application.solvers.oracle import ExhaustiveSolver, MaxFlowSolver
from kout_mincut.application.solvers.stoer_wagner import StoerWagnerSolver
from kout_mincut.domain.exceptions import ConfigurationError, ConfigurationValidationError
from kout_mincut.domain.interfaces import IMinCutSolver, ISolverFactory


class DefaultSolverFactory(ISolverFactory):
    """Factory for the bundled multigraph solvers."""

    def __init__(self):
        self._solvers: dict[str, type[IMinCutSolver]] = {
            "stoer-wagner": StoerWagnerSolver,
            "exhaustive": ExhaustiveSolver,
            "maxflow": MaxFlowSolver,
        }

    def create_solver(self, name: str) -> IMinCutSolver:
        """
        Create a solver by name.

        Raises:
            ConfigurationValidationError: If the name is not registered
        """
        if name not in self._solvers:
            raise ConfigurationValidationError(
                f"unsupported solver '{name}', expected one of {', '.join(self._solvers)}",
                config_key="solver",
                expected_type="registered solver name",
            )
        return self._solvers[name]()

    def get_supported_solvers(self) -> list[str]:
        """Get list of supported solver names."""
        return list(self._solvers)


class SolverFactoryRegistry:
    """Registry for managing solver factories."""

    def __init__(self):
        self._factories: dict[str, ISolverFactory] = {}
        self._default_factory: str = "default"

        self.register_factory("default", DefaultSolverFactory())

    def register_factory(self, name: str, factory: ISolverFactory) -> None:
        """Register a new solver factory."""
        self._factories[name] = factory

    def get_factory(self, name: str | None = None) -> ISolverFactory:
        """
        Get a factory by name.

        Raises:
            ConfigurationError: If factory not found
        """
        factory_name = name or self._default_factory
        if factory_name not in self._factories:
            raise ConfigurationError(f"Factory '{factory_name}' not found")
        return self._factories[factory_name]

    def create_solver(self, name: str = "stoer-wagner", factory_name: str | None = None) -> IMinCutSolver:
        """Create a solver using the specified factory."""
        return self.get_factory(factory_name).create_solver(name)


# Global factory registry
solver_factory = SolverFactoryRegistry()
