"""Record of the reduction rules applied while kernelizing a graph
"""
from enum import Enum
from typing import Iterable
from typing import NamedTuple
from typing import Optional
from typing import Tuple

from ..exceptions import GraphDomainError
from .graph import Graph
from .graph import IndexMap
from .graph import popcount


class StepKind(Enum):
    REMOVE_UNIVERSAL = "remove_universal"
    MERGE_FALSE_TWINS = "merge_false_twins"
    TWIN_UNIVERSAL_DECREMENT = "twin_universal_decrement"


class ReductionStep(NamedTuple):
    """One rule application, in original vertex ids

    `removed` leaves the graph. `kept` is the twin that stays, or None when
    a universal vertex is dropped.
    """

    kind: StepKind
    removed: int
    kept: Optional[int] = None

    def to_list(self) -> list:
        return [self.kind.value, self.kept, self.removed]


class KernelTrace:
    """Ordered reduction steps taken on a graph with `n` vertices"""

    n: int
    steps: Tuple[ReductionStep, ...]

    def __init__(self, n: int, steps: Iterable[ReductionStep] = ()):
        self.n = n
        self.steps = tuple(steps)

    @property
    def parameter_delta(self) -> int:
        """How much the width parameter dropped while reducing"""
        return sum(1 for step in self.steps if step.kind is StepKind.TWIN_UNIVERSAL_DECREMENT)

    @property
    def removed_mask(self) -> int:
        mask = 0

        for step in self.steps:
            mask |= 1 << step.removed

        return mask

    def survivors(self) -> Tuple[int, ...]:
        """Original ids left in the kernel, ascending, i.e. kernel vertex i is survivors()[i]"""
        removed = self.removed_mask
        return tuple(v for v in range(self.n) if not removed >> v & 1)

    def replay(self, graph: Graph) -> Tuple[Graph, IndexMap]:
        """Re-apply every step on `graph`, checking each is legal where it happens"""
        if graph.n != self.n:
            raise GraphDomainError("Trace was recorded on another graph", n=graph.n, expected=self.n)

        alive = graph.full_mask

        for step in self.steps:
            size = popcount(alive)
            removed_row = graph.rows[step.removed] & alive

            if not alive >> step.removed & 1:
                raise GraphDomainError("Step removes a vertex twice", step=step.to_list())

            if step.kind is StepKind.REMOVE_UNIVERSAL:
                legal = popcount(removed_row) == size - 1
            else:
                kept_row = graph.rows[step.kept] & alive
                legal = kept_row == removed_row and bool(alive >> step.kept & 1)

                if legal and step.kind is StepKind.TWIN_UNIVERSAL_DECREMENT:
                    legal = kept_row == alive & ~(1 << step.kept) & ~(1 << step.removed)

            if not legal:
                raise GraphDomainError("Step does not apply", step=step.to_list())

            alive &= ~(1 << step.removed)

        return graph.induced(v for v in range(graph.n) if alive >> v & 1)

    def to_dict(self) -> dict:
        return {
            "steps": [step.to_list() for step in self.steps],
            "parameter_delta": self.parameter_delta,
            "kernel_vertices": list(self.survivors()),
        }

    def __len__(self) -> int:
        return len(self.steps)

    def __repr__(self) -> str:
        return f"KernelTrace(n={self.n}, steps={len(self.steps)}, delta={self.parameter_delta})"