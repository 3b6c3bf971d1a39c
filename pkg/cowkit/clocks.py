"""Clocks used to time the phases of a run
"""
from time import perf_counter

from .abstracts import AbstractClock


class PerfClock(AbstractClock):
    """Highest resolution clock available, the default for phase timings"""

    def now(self) -> float:
        return 1000 * perf_counter()


class FrozenClock(AbstractClock):
    """Clock that never moves, so every timing reads 0"""

    def __init__(self, at: float = 0.0):
        self.at = at

    def now(self) -> float:
        return self.at
