"""Chain graphs: bipartite graphs whose sides have nested neighbourhoods
"""
from ..abstracts import Graph
from ..abstracts import Method
from ..abstracts import SolveResult
from ..abstracts import Witness
from ..abstracts import iter_bits
from ..patterns import chain_ordering
from .base import AbstractSolver


class ChainSolver(AbstractSolver):
    """Width |X| when the smallest x-side neighbourhood is empty, |X| + 1 otherwise

    With x-side order v1..vp, set i is {v1..vi} plus the y vertices missed
    by vi. A non-empty N(v1) needs the whole y side as one more set.
    """

    graph_class = "chain"
    method = Method.CHAIN

    def accepts(self, graph: Graph) -> bool:
        return chain_ordering(graph) is not None

    def solve_reduced(self, kernel: Graph) -> SolveResult:
        found = chain_ordering(kernel)
        assert found is not None, "Kernel of a chain graph is a chain graph"
        bipartition, ordering = found
        y_mask = bipartition.y_mask
        sets = []
        prefix = 0

        for v in ordering.order:
            prefix |= 1 << v
            sets.append(prefix | (y_mask & ~kernel.rows[v]))

        if kernel.rows[ordering.order[0]]:
            sets.append(y_mask)

        witness = Witness(set(iter_bits(mask)) for mask in sets)
        return SolveResult(len(witness), witness, Method.CHAIN)


def chain_width(graph: Graph) -> SolveResult:
    return ChainSolver().solve(graph)
