"""Certificates: covers of non-edges, edges and bipartite edges, plus verification reports
"""
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Mapping
from typing import Optional
from typing import Tuple

from .graph import VertexSet


def _freeze(sets: Iterable[Iterable[int]]) -> Tuple[VertexSet, ...]:
    return tuple(frozenset(s) for s in sets)


class _SetFamily:
    """Ordered family of vertex sets"""

    sets: Tuple[VertexSet, ...]

    def __init__(self, sets: Iterable[Iterable[int]]):
        self.sets = _freeze(sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.sets)

    def __getitem__(self, idx: int) -> VertexSet:
        return self.sets[idx]

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented

        return self.sets == other.sets  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash(self.sets)

    def as_lists(self) -> List[List[int]]:
        return [sorted(s) for s in self.sets]

    def relabel(self, mapping: Mapping[int, int]):
        return type(self)([{mapping[v] for v in s} for s in self.sets])

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.as_lists()})"


class Witness(_SetFamily):
    """Independent sets N_1..N_k such that every non-adjacent pair shares one of them"""


class CliqueCover(_SetFamily):
    """Cliques such that every edge lies inside one of them"""


class BicliqueCover:
    """Bicliques (X_i, Y_i) such that every edge joins some X_i to its Y_i"""

    bicliques: Tuple[Tuple[VertexSet, VertexSet], ...]

    def __init__(self, bicliques: Iterable[Tuple[Iterable[int], Iterable[int]]]):
        self.bicliques = tuple((frozenset(xs), frozenset(ys)) for xs, ys in bicliques)

    def __len__(self) -> int:
        return len(self.bicliques)

    def __iter__(self) -> Iterator[Tuple[VertexSet, VertexSet]]:
        return iter(self.bicliques)

    def __getitem__(self, idx: int) -> Tuple[VertexSet, VertexSet]:
        return self.bicliques[idx]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BicliqueCover):
            return NotImplemented

        return self.bicliques == other.bicliques

    def __hash__(self) -> int:
        return hash(self.bicliques)

    def as_lists(self) -> List[List[List[int]]]:
        return [[sorted(xs), sorted(ys)] for xs, ys in self.bicliques]

    def __repr__(self) -> str:
        return f"BicliqueCover({self.as_lists()})"


class Report:
    """Outcome of checking a certificate against a graph

    Args:
        ok: Whether the certificate holds
        message: Short human readable summary
        offending_set: Index of a set that breaks its own shape, if any
        offending_pair: A pair left uncovered or broken inside `offending_set`
    """

    ok: bool
    message: str
    offending_set: Optional[int]
    offending_pair: Optional[Tuple[int, int]]

    def __init__(
        self,
        ok: bool,
        message: str = "",
        offending_set: Optional[int] = None,
        offending_pair: Optional[Tuple[int, int]] = None,
    ):
        self.ok = ok
        self.message = message or ("valid" if ok else "invalid")
        self.offending_set = offending_set
        self.offending_pair = offending_pair

    @classmethod
    def passed(cls) -> "Report":
        return cls(True)

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "message": self.message,
            "offending_set": self.offending_set,
            "offending_pair": list(self.offending_pair) if self.offending_pair else None,
        }

    def __repr__(self) -> str:
        return f"Report(ok={self.ok}, message={self.message!r})"
