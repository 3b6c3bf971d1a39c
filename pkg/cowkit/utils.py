import hashlib
from contextlib import contextmanager
from itertools import combinations
from random import Random
from typing import Dict
from typing import Iterator
from typing import Optional

from .abstracts import AbstractClock
from .abstracts import Graph
from .formats import emit_graph6


def input_digest(graph: Graph) -> str:
    """Stable fingerprint of a graph: sha256 of its graph6 encoding"""
    return "sha256:" + hashlib.sha256(emit_graph6(graph).encode("ascii")).hexdigest()


def random_graph(n: int, p: float, rng: Optional[Random] = None) -> Graph:
    """G(n, p): every pair becomes an edge independently with probability p"""
    assert 0 <= p <= 1, "Edge probability must lie in [0, 1]"
    rng = rng or Random()
    return Graph.from_edges(n, [pair for pair in combinations(range(n), 2) if rng.random() < p])


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, 2 ** (n choose 2) of them"""
    pairs = list(combinations(range(n), 2))

    for chosen in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pair for idx, pair in enumerate(pairs) if chosen >> idx & 1])


class Stopwatch:
    """Milliseconds spent per named phase, read from `clock`"""

    clock: AbstractClock
    phases: Dict[str, float]

    def __init__(self, clock: AbstractClock):
        self.clock = clock
        self.phases = {}

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        started = self.clock.now()

        try:
            yield
        finally:
            elapsed = self.clock.now() - started
            self.phases[name] = round(self.phases.get(name, 0.0) + elapsed, 3)

    def to_dict(self) -> Dict[str, float]:
        return dict(self.phases)
