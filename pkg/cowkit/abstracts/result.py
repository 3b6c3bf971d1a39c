"""Solver outcome
"""
from enum import Enum
from typing import Optional

from .certificate import Witness
from .trace import KernelTrace


class Method(Enum):
    """Which route produced a width"""

    REDUCED = "reduced"
    CHAIN = "chain"
    C5_COMPONENT = "c5_component"
    SPLIT = "split"
    PSEUDO_SPLIT = "pseudo_split"
    SMALL_WIDTH = "small_width"
    FPT = "fpt"
    ORACLE = "oracle"


class SolveResult:
    """Width of a graph together with a witness of exactly that size

    Args:
        width: Complete width
        witness: Independent sets covering every non-adjacent pair
        method: Route that produced the witness
        reduction_prefix: Reduction steps applied before the route ran, if any
    """

    width: int
    witness: Witness
    method: Method
    reduction_prefix: Optional[KernelTrace]

    def __init__(self, width: int, witness: Witness, method: Method, reduction_prefix: Optional[KernelTrace] = None):
        assert width >= 0, "Width must not be negative"
        assert len(witness) == width, f"Witness has {len(witness)} sets, expected {width}"
        self.width = width
        self.witness = witness
        self.method = method
        self.reduction_prefix = reduction_prefix

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "witness": self.witness.as_lists(),
            "method": self.method.value,
            "trace": self.reduction_prefix.to_dict() if self.reduction_prefix else None,
        }

    def __repr__(self) -> str:
        return f"SolveResult(width={self.width}, method={self.method.value})"
