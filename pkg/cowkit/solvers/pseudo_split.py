from ..abstracts import Graph
from ..abstracts import Method
from ..abstracts import SolveResult
from ..abstracts import Witness
from ..abstracts import iter_bits
from ..abstracts import mask_of
from ..patterns import pseudo_split_partition
from .base import AbstractSolver
from .split import SplitSolver


class PseudoSplitSolver(AbstractSolver):
    """(2K2, C4)-free graphs: split, or a clique Q, stable set S and a C5 joined to Q

    With the C5 present the width is |Q| + 5. Each v in Q gives {v} plus the
    S vertices it misses, and each cycle vertex c_i gives S plus c_i, c_{i+2}.
    """

    graph_class = "pseudo-split"
    method = Method.PSEUDO_SPLIT

    def accepts(self, graph: Graph) -> bool:
        return pseudo_split_partition(graph) is not None

    def solve_reduced(self, kernel: Graph) -> SolveResult:
        partition = pseudo_split_partition(kernel)
        assert partition is not None, "Kernel of a pseudo-split graph is pseudo-split"

        if not partition.cycle_part:
            return SplitSolver().solve_reduced(kernel)

        s_mask = mask_of(partition.stable_part)
        cycle = partition.cycle_part
        sets = [(1 << v) | (s_mask & ~kernel.rows[v]) for v in sorted(partition.clique_part)]
        sets.extend(s_mask | (1 << cycle[i]) | (1 << cycle[(i + 2) % 5]) for i in range(5))
        witness = Witness(set(iter_bits(mask)) for mask in sets)
        return SolveResult(len(partition.clique_part) + 5, witness, Method.PSEUDO_SPLIT)


def pseudo_split_width(graph: Graph) -> SolveResult:
    return PseudoSplitSolver().solve(graph)
