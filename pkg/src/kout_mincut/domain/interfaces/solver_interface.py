"""Solver interface definitions."""

from abc import ABC, abstractmethod

from ..models.graph_models import MultiGraph


class IMinCutSolver(ABC):
    """Exact global min-cut solver for contracted multigraphs.

    Any faster multigraph solver can replace the default one by implementing
    this interface and registering with the solver factory.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Get the solver's registry name."""
        pass

    @abstractmethod
    def solve(self, mg: MultiGraph) -> tuple[int, frozenset[int]]:
        """
        Compute a global minimum cut of a connected multigraph.

        Args:
            mg: Multigraph with at least two supernodes

        Returns:
            The cut value (parallel edges counted individually) and one side
            of a minimum cut as a set of supernode ids
        """
        pass


class ISolverFactory(ABC):
    """Interface for solver factories."""

    @abstractmethod
    def create_solver(self, name: str) -> IMinCutSolver:
        """
        Create a solver by name.

        Args:
            name: Registered solver name

        Returns:
            Solver instance
        """
        pass

    @abstractmethod
    def get_supported_solvers(self) -> list[str]:
        """Get list of supported solver names."""
        pass
