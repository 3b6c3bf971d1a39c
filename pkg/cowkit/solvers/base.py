"""Common interface of the polynomial-time solvers
"""
import logging
from abc import ABC
from abc import abstractmethod

from ..abstracts import Graph
from ..abstracts import Method
from ..abstracts import SolveResult
from ..abstracts import Witness
from ..exceptions import ClassificationError
from ..fpt import kernelize
from ..fpt import lift_result

logger = logging.getLogger("cowkit")


class AbstractSolver(ABC):
    """Closed-form complete width for one hereditary graph class

    A graph belongs to the class iff its kernel does, so `solve` may
    reduce first and hand only reduced graphs to `solve_reduced`.
    """

    graph_class: str
    method: Method

    @abstractmethod
    def accepts(self, graph: Graph) -> bool:
        """Whether `graph` lies in this solver's class"""

    @abstractmethod
    def solve_reduced(self, kernel: Graph) -> SolveResult:
        """Width and witness of a non-empty graph with no universal vertex and no false twins"""

    def solve(self, graph: Graph) -> SolveResult:
        """Reduce, solve the kernel and lift the witness back to `graph`"""
        if not self.accepts(graph):
            raise ClassificationError(self.graph_class)

        kernel, _, trace = kernelize(graph)

        if kernel.n == 0:
            return lift_result(SolveResult(0, Witness([]), Method.REDUCED), trace)

        logger.debug("%s solving kernel %s", self, kernel)
        return lift_result(self.solve_reduced(kernel), trace)

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"
