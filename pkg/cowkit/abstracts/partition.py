"""Structural certificates: chain orderings, split and pseudo-split partitions
"""
from typing import Iterable
from typing import Sequence
from typing import Tuple

from .graph import Graph
from .graph import VertexSet
from .graph import iter_bits
from .graph import mask_of


class ChainOrdering:
    """One side of a chain graph ordered so that neighbourhoods are nested"""

    order: Tuple[int, ...]

    def __init__(self, order: Sequence[int]):
        self.order = tuple(order)

    def is_valid_for(self, graph: Graph) -> bool:
        rows = graph.rows
        return all(not rows[prev] & ~rows[cur] for prev, cur in zip(self.order, self.order[1:]))

    def __len__(self) -> int:
        return len(self.order)

    def __repr__(self) -> str:
        return f"ChainOrdering({list(self.order)})"


class SplitPartition:
    """Vertex partition into a clique and an independent set"""

    clique_part: VertexSet
    stable_part: VertexSet

    def __init__(self, clique_part: Iterable[int], stable_part: Iterable[int]):
        self.clique_part = frozenset(clique_part)
        self.stable_part = frozenset(stable_part)

    def is_valid_for(self, graph: Graph) -> bool:
        covered = mask_of(self.clique_part) | mask_of(self.stable_part)
        return (
            not self.clique_part & self.stable_part
            and covered == graph.full_mask
            and graph.is_clique(self.clique_part)
            and graph.is_independent(self.stable_part)
        )

    def to_dict(self) -> dict:
        return {"clique": sorted(self.clique_part), "stable": sorted(self.stable_part)}

    def __repr__(self) -> str:
        return f"SplitPartition(clique={sorted(self.clique_part)}, stable={sorted(self.stable_part)})"


class PseudoSplitPartition:
    """Split partition plus an optional induced C5 joined to the clique and anticomplete to the rest

    `cycle_part` is empty or lists the five cycle vertices in cycle order.
    """

    clique_part: VertexSet
    stable_part: VertexSet
    cycle_part: Tuple[int, ...]

    def __init__(self, clique_part: Iterable[int], stable_part: Iterable[int], cycle_part: Sequence[int] = ()):
        self.clique_part = frozenset(clique_part)
        self.stable_part = frozenset(stable_part)
        self.cycle_part = tuple(cycle_part)

    @property
    def cycle_mask(self) -> int:
        return mask_of(self.cycle_part)

    def is_valid_for(self, graph: Graph) -> bool:
        if not self.cycle_part:
            return SplitPartition(self.clique_part, self.stable_part).is_valid_for(graph)

        if len(self.cycle_part) != 5:
            return False

        q_mask, s_mask, c_mask = mask_of(self.clique_part), mask_of(self.stable_part), self.cycle_mask

        if q_mask & s_mask or (q_mask | s_mask) & c_mask or (q_mask | s_mask | c_mask) != graph.full_mask:
            return False

        if not (graph.is_clique(self.clique_part) and graph.is_independent(self.stable_part)):
            return False

        cycle = self.cycle_part

        for i, v in enumerate(cycle):
            if graph.rows[v] & c_mask != mask_of((cycle[i - 1], cycle[(i + 1) % 5])):
                return False

        return all(graph.rows[v] & c_mask == c_mask for v in iter_bits(q_mask)) and all(
            not graph.rows[v] & c_mask for v in iter_bits(s_mask)
        )

    def to_dict(self) -> dict:
        return {
            "clique": sorted(self.clique_part),
            "stable": sorted(self.stable_part),
            "cycle": list(self.cycle_part),
        }

    def __repr__(self) -> str:
        return (
            f"PseudoSplitPartition(clique={sorted(self.clique_part)}, "
            f"stable={sorted(self.stable_part)}, cycle={list(self.cycle_part)})"
        )
