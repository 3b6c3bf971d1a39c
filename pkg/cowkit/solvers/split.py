from ..abstracts import Graph
from ..abstracts import Method
from ..abstracts import SolveResult
from ..abstracts import Witness
from ..abstracts import iter_bits
from ..abstracts import mask_of
from ..patterns import split_partition
from .base import AbstractSolver


class SplitSolver(AbstractSolver):
    """Split graphs, with clique Q and stable set S

    Each v in Q gives the set {v} plus the S vertices it misses. The width
    is |Q| when those sets already pair up all of S, |Q| + 1 with S added
    otherwise.
    """

    graph_class = "split"
    method = Method.SPLIT

    def accepts(self, graph: Graph) -> bool:
        return split_partition(graph) is not None

    def solve_reduced(self, kernel: Graph) -> SolveResult:
        partition = split_partition(kernel)
        assert partition is not None, "Kernel of a split graph is split"
        stable = sorted(partition.stable_part)
        s_mask = mask_of(stable)
        sets = [(1 << v) | (s_mask & ~kernel.rows[v]) for v in sorted(partition.clique_part)]
        pairs = [(1 << a) | (1 << b) for i, a in enumerate(stable) for b in stable[i + 1 :]]

        if not all(any(pair & s == pair for s in sets) for pair in pairs):
            sets.append(s_mask)

        witness = Witness(set(iter_bits(mask)) for mask in sets)
        return SolveResult(len(witness), witness, Method.SPLIT)


def split_width(graph: Graph) -> SolveResult:
    return SplitSolver().solve(graph)
