"""Immutable simple graphs stored as one adjacency bit row per vertex
"""
from collections import deque
from enum import Enum
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import Iterator
from typing import List
from typing import Mapping
from typing import Optional
from typing import Sequence
from typing import Tuple

from ..exceptions import GraphDomainError

VertexSet = FrozenSet[int]
IndexMap = Dict[int, int]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of `mask` in ascending order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0

    for v in vertices:
        mask |= 1 << v

    return mask


def members(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


class ComposeMode(Enum):
    """How two graphs are put side by side"""

    DISJOINT_UNION = "disjoint_union"
    JOIN = "join"


class Bipartition:
    """Ordered pair of independent vertex sets covering a bipartite graph

    Args:
        x_side: The side coloured first, holds the lowest vertex of every component
        y_side: The other side
    """

    x_side: VertexSet
    y_side: VertexSet

    def __init__(self, x_side: Iterable[int], y_side: Iterable[int]):
        self.x_side = frozenset(x_side)
        self.y_side = frozenset(y_side)

    @property
    def x_mask(self) -> int:
        return mask_of(self.x_side)

    @property
    def y_mask(self) -> int:
        return mask_of(self.y_side)

    def is_valid_for(self, graph: "Graph") -> bool:
        if self.x_side & self.y_side:
            return False

        if (self.x_mask | self.y_mask) != graph.full_mask:
            return False

        return graph.is_independent(self.x_side) and graph.is_independent(self.y_side)

    def check(self, graph: "Graph") -> None:
        """Raise GraphDomainError unless this is a bipartition of `graph`"""
        if not self.is_valid_for(graph):
            raise GraphDomainError(
                "Invalid bipartition",
                x_side=sorted(self.x_side),
                y_side=sorted(self.y_side),
            )

    def swapped(self) -> "Bipartition":
        return Bipartition(self.y_side, self.x_side)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bipartition):
            return NotImplemented

        return self.x_side == other.x_side and self.y_side == other.y_side

    def __hash__(self) -> int:
        return hash((self.x_side, self.y_side))

    def __repr__(self) -> str:
        return f"Bipartition(x_side={sorted(self.x_side)}, y_side={sorted(self.y_side)})"


class Graph:
    """Finite simple undirected graph on vertices 0..n-1

    Graphs never change after construction. Every operation that builds a
    new graph returns a fresh instance, and those that drop or renumber
    vertices also return the old -> new index map.

    Args:
        n: Number of vertices
        rows: One adjacency bit row per vertex, bit u of rows[v] is set iff u ~ v
        labels: Optional display name per vertex
    """

    n: int
    rows: Tuple[int, ...]
    labels: Optional[Tuple[str, ...]]

    def __init__(self, n: int, rows: Sequence[int], labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise GraphDomainError("Vertex count must not be negative", n=n)

        rows = tuple(rows)

        if len(rows) != n:
            raise GraphDomainError("Expected one row per vertex", n=n, rows=len(rows))

        full = (1 << n) - 1

        for v, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise GraphDomainError("Row refers to a vertex out of range", vertex=v)

            if row >> v & 1:
                raise GraphDomainError("Self-loops are not allowed", vertex=v)

            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise GraphDomainError("Adjacency rows are not symmetric", pair=(u, v))

        if labels is not None:
            labels = tuple(str(label) for label in labels)

            if len(labels) != n:
                raise GraphDomainError("Expected one label per vertex", n=n, labels=len(labels))

        self.n = n
        self.rows = rows
        self.labels = labels

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "Graph":
        rows = [0] * n

        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphDomainError("Edge endpoint out of range", edge=(u, v), n=n)

            if u == v:
                raise GraphDomainError("Self-loops are not allowed", vertex=u)

            rows[u] |= 1 << v
            rows[v] |= 1 << u

        return cls(n, rows, labels)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(v, v + 1) for v in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        assert n >= 3, "A cycle needs at least 3 vertices"
        return cls.from_edges(n, [(v, (v + 1) % n) for v in range(n)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, [(x, a + y) for x in range(a) for y in range(b)])

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphDomainError("Vertex out of range", vertex=v, n=self.n)

    def _check_vertices(self, vertices: Iterable[int]) -> int:
        mask = 0

        for v in vertices:
            self._check_vertex(v)
            mask |= 1 << v

        return mask

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.rows[v])

    def neighborhood(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return members(self.rows[v])

    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.rows) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographically"""
        for u, row in enumerate(self.rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def non_edges(self) -> Iterator[Tuple[int, int]]:
        """Distinct non-adjacent pairs as (u, v) with u < v, lexicographically"""
        full = self.full_mask

        for u, row in enumerate(self.rows):
            for v in iter_bits((full & ~row) >> (u + 1)):
                yield u, u + 1 + v

    def complement(self) -> "Graph":
        full = self.full_mask
        rows = [full & ~row & ~(1 << v) for v, row in enumerate(self.rows)]
        return Graph(self.n, rows, self.labels)

    def induced(self, vertices: Iterable[int]) -> Tuple["Graph", IndexMap]:
        """Subgraph induced by `vertices`, renumbered in ascending order of the old index"""
        keep = sorted(members(self._check_vertices(vertices)))
        index_map = {old: new for new, old in enumerate(keep)}
        rows = []

        for old in keep:
            rows.append(mask_of(index_map[u] for u in iter_bits(self.rows[old]) if u in index_map))

        labels = None if self.labels is None else [self.labels[old] for old in keep]
        return Graph(len(keep), rows, labels), index_map

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = self._check_vertices(vertices)
        return all(not self.rows[v] & mask for v in iter_bits(mask))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        mask = self._check_vertices(vertices)
        return all((self.rows[v] | (1 << v)) & mask == mask for v in iter_bits(mask))

    def universal_vertices(self) -> VertexSet:
        full = self.full_mask
        return frozenset(v for v, row in enumerate(self.rows) if row | (1 << v) == full)

    def false_twin_classes(self) -> List[VertexSet]:
        """Classes of vertices sharing an open neighbourhood, ordered by smallest member

        Equal open neighbourhoods imply non-adjacency, so each class is independent.
        """
        classes: Dict[int, List[int]] = {}

        for v, row in enumerate(self.rows):
            classes.setdefault(row, []).append(v)

        return sorted((frozenset(group) for group in classes.values()), key=min)

    def compose(self, other: "Graph", mode: ComposeMode) -> "Graph":
        """Disjoint union or join, vertices of `other` are shifted by `self.n`"""
        n, m = self.n, other.n
        own_mask = self.full_mask
        other_mask = other.full_mask << n
        join = mode is ComposeMode.JOIN
        rows = [row | (other_mask if join else 0) for row in self.rows]
        rows.extend((row << n) | (own_mask if join else 0) for row in other.rows)

        labels = None

        if self.labels is not None and other.labels is not None:
            labels = self.labels + other.labels

        return Graph(n + m, rows, labels)

    def substitution_blocks(self, parts: Mapping[int, "Graph"]) -> Dict[int, Tuple[int, ...]]:
        """New vertex indices taken by each part, blocks laid out in vertex order"""
        blocks = {}
        offset = 0

        for v in range(self.n):
            if v not in parts:
                raise GraphDomainError("Every vertex needs a substitute graph", vertex=v)

            size = parts[v].n
            blocks[v] = tuple(range(offset, offset + size))
            offset += size

        return blocks

    def substitute(self, parts: Mapping[int, "Graph"]) -> "Graph":
        """Replace every vertex v by parts[v]

        Vertices of different parts are adjacent iff the vertices they replace are.
        """
        blocks = self.substitution_blocks(parts)
        block_masks = {v: mask_of(block) for v, block in blocks.items()}
        rows = []

        for v in range(self.n):
            outside = 0

            for u in iter_bits(self.rows[v]):
                outside |= block_masks[u]

            offset = blocks[v][0] if blocks[v] else 0
            rows.extend((row << offset) | outside for row in parts[v].rows)

        return Graph(len(rows), rows)

    def bipartition(self) -> Optional[Bipartition]:
        """Two-colour each component from its lowest vertex, which lands on the x side"""
        colour: Dict[int, int] = {}

        for start in range(self.n):
            if start in colour:
                continue

            colour[start] = 0
            queue = deque([start])

            while queue:
                v = queue.popleft()

                for u in iter_bits(self.rows[v]):
                    if u not in colour:
                        colour[u] = 1 - colour[v]
                        queue.append(u)
                    elif colour[u] == colour[v]:
                        return None

        x_side = [v for v, c in colour.items() if c == 0]
        y_side = [v for v, c in colour.items() if c == 1]
        return Bipartition(x_side, y_side)

    def bipartite_complement(self, bipartition: Bipartition) -> "Graph":
        """Keep both sides, x ~ y in the result iff x and y are non-adjacent here"""
        bipartition.check(self)
        x_mask, y_mask = bipartition.x_mask, bipartition.y_mask
        rows = []

        for v, row in enumerate(self.rows):
            other_side = y_mask if x_mask >> v & 1 else x_mask
            rows.append(other_side & ~row)

        return Graph(self.n, rows, self.labels)

    def vertex_name(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v] if self.labels is not None else str(v)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented

        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"
