"""Route a graph to the cheapest solver whose class contains its kernel
"""
import logging
from typing import List
from typing import Optional

from .abstracts import Graph
from .abstracts import Limits
from .abstracts import Method
from .abstracts import SolveResult
from .abstracts import Witness
from .exceptions import UnsolvedError
from .fpt import decide_k
from .fpt import fpt_cow
from .fpt import kernelize
from .fpt import lift_result
from .oracle import exact_cow
from .solvers import AbstractSolver
from .solvers import ChainSolver
from .solvers import PseudoSplitSolver
from .solvers import SplitSolver
from .solvers import TriangleFreeSolver

logger = logging.getLogger("cowkit")

SMALL_WIDTH_CEILING = 3


def default_solvers() -> List[AbstractSolver]:
    return [ChainSolver(), TriangleFreeSolver(), SplitSolver(), PseudoSplitSolver()]


class Dispatcher:
    """Kernelize, then try the closed-form solvers in order

    Kernels outside every class go to the small-width check, then to the
    parameterized search, then to the exact oracle if the kernel fits the
    configured vertex limit.
    """

    solvers: List[AbstractSolver]
    limits: Limits

    def __init__(self, solvers: Optional[List[AbstractSolver]] = None, limits: Optional[Limits] = None):
        self.solvers = solvers if solvers is not None else default_solvers()
        self.limits = limits or Limits.from_env()
        logger.debug("Dispatcher: solvers=%s, limits=%s", self.solvers, self.limits)

    def dispatch(self, graph: Graph) -> SolveResult:
        kernel, _, trace = kernelize(graph)
        logger.info(
            "Kernel keeps %s of %s vertices, parameter delta %s",
            kernel.n,
            graph.n,
            trace.parameter_delta,
        )

        if kernel.n == 0:
            return lift_result(SolveResult(0, Witness([]), Method.REDUCED), trace)

        for solver in self.solvers:
            if solver.accepts(kernel):
                logger.info("Routing kernel to %s", solver)
                return lift_result(solver.solve_reduced(kernel), trace)

        return lift_result(self._solve_general(kernel), trace)

    def _solve_general(self, kernel: Graph) -> SolveResult:
        for k in range(SMALL_WIDTH_CEILING + 1):
            witness = decide_k(kernel, k, self.limits)

            if witness is not None:
                logger.info("Kernel has small width %s", k)
                return SolveResult(len(witness), witness, Method.SMALL_WIDTH)

        try:
            result = fpt_cow(kernel, self.limits)
            return SolveResult(result.width, result.witness, Method.FPT)
        except UnsolvedError as err:
            logger.warning("Parameterized search gave up: %s", err)

        if kernel.n > self.limits.max_vertices:
            raise UnsolvedError(
                "Kernel exceeds every configured limit",
                kernel_vertices=kernel.n,
                max_vertices=self.limits.max_vertices,
            )

        width, witness = exact_cow(kernel, self.limits)
        return SolveResult(width, witness, Method.ORACLE)


def dispatch(graph: Graph, limits: Optional[Limits] = None) -> SolveResult:
    return Dispatcher(limits=limits).dispatch(graph)
