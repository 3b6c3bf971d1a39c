"""Graphs with no induced 2K2 and no triangle
"""
from ..abstracts import Graph
from ..abstracts import Method
from ..abstracts import SolveResult
from ..abstracts import Witness
from ..patterns import contains_induced
from ..patterns import pattern
from .base import AbstractSolver
from .chain import ChainSolver


class TriangleFreeSolver(AbstractSolver):
    """(2K2, K3)-free graphs reduce to a chain graph or to C5 plus isolated vertices

    In the second case the width is 5: set i is the isolated vertices plus
    the cycle vertices c_i and c_{i+2}.
    """

    graph_class = "(2K2, K3)-free"
    method = Method.C5_COMPONENT

    def accepts(self, graph: Graph) -> bool:
        return contains_induced(graph, pattern("K3")) is None and contains_induced(graph, pattern("2K2")) is None

    def solve_reduced(self, kernel: Graph) -> SolveResult:
        embedding = contains_induced(kernel, pattern("C5"))

        if embedding is None:
            return ChainSolver().solve_reduced(kernel)

        cycle = [embedding[i] for i in range(5)]
        isolated = {v for v in range(kernel.n) if not kernel.rows[v]}
        assert len(isolated) + 5 == kernel.n, "Kernel is C5 plus isolated vertices"
        witness = Witness(isolated | {cycle[i], cycle[(i + 2) % 5]} for i in range(5))
        return SolveResult(5, witness, Method.C5_COMPONENT)


def triangle_free_2k2_width(graph: Graph) -> SolveResult:
    return TriangleFreeSolver().solve(graph)
