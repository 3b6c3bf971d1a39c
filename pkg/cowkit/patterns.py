"""Named small graphs, induced subgraph matching and structural recognizers
"""
import logging
from enum import Enum
from enum import IntEnum
from functools import lru_cache
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple
from typing import Union

from .abstracts import Bipartition
from .abstracts import ChainOrdering
from .abstracts import ComposeMode
from .abstracts import Graph
from .abstracts import PseudoSplitPartition
from .abstracts import SplitPartition
from .abstracts import mask_of
from .abstracts import popcount
from .fpt import decide_k

logger = logging.getLogger("cowkit")

Embedding = Dict[int, int]


class Pattern:
    """A small graph known by name"""

    name: str
    graph: Graph

    def __init__(self, name: str, graph: Graph):
        self.name = name
        self.graph = graph

    def __repr__(self) -> str:
        return f"Pattern(name={self.name!r}, n={self.graph.n}, edges={self.graph.edge_count()})"


def _union(*graphs: Graph) -> Graph:
    result = graphs[0]

    for graph in graphs[1:]:
        result = result.compose(graph, ComposeMode.DISJOINT_UNION)

    return result


def _join(first: Graph, second: Graph) -> Graph:
    return first.compose(second, ComposeMode.JOIN)


def _build_catalog() -> List[Pattern]:
    k1, k2, k3 = Graph.complete(1), Graph.complete(2), Graph.complete(3)
    c4, c5 = Graph.cycle(4), Graph.cycle(5)
    gem = [(4, 0), (0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (4, 2)]
    k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    net = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)])

    graphs = [
        ("2K1", Graph.empty(2)),
        ("K2+K1", _union(k2, k1)),
        ("C4", c4),
        ("2K2", _union(k2, k2)),
        ("P4", Graph.path(4)),
        ("K3+K1", _union(k3, k1)),
        ("(K2+K1)⋆2K1", _join(_union(k2, k1), Graph.empty(2))),
        ("C4⋆2K1", _join(c4, Graph.empty(2))),
        ("F1", _union(k2, k2)),
        ("F2", c5),
        ("F3", Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)])),
        ("F4", _union(Graph.complete(4), k1)),
        ("F5", Graph.from_edges(5, [(2, 0), (0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])),
        ("F6", Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (2, 5)])),
        ("F7", Graph.from_edges(6, k4 + [(3, 4), (2, 5)])),
        ("F8", Graph.from_edges(6, gem)),
        ("F9", Graph.from_edges(6, gem + [(1, 5), (5, 2)])),
        ("F10", Graph.from_edges(6, gem + [(0, 5), (5, 3), (1, 5), (5, 2)])),
        (
            "F11",
            Graph.from_edges(
                6,
                [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (3, 1), (1, 5), (3, 0), (0, 2), (2, 5)],
            ),
        ),
        ("F12", Graph.from_edges(6, k4 + [(3, 4), (2, 5), (4, 5), (0, 4), (1, 5)])),
        (
            "F13",
            Graph.from_edges(
                7,
                k4 + [(4, 5), (2, 6), (6, 3), (4, 6), (6, 5), (1, 4), (4, 3), (0, 5), (5, 2), (0, 4), (1, 5)],
            ),
        ),
        ("F14", Graph.from_edges(8, [(0, 1), (2, 3), (4, 5), (6, 7)]).complement()),
        ("K3", k3),
        ("C5", c5),
        ("C8", Graph.cycle(8)),
        ("3K2", _union(k2, k2, k2)),
        ("P5", Graph.path(5)),
        ("Net", net),
        ("G[1]", k2),
        ("G[2]", _join(_union(k2, k1), k1)),
        ("G[3]", _join(_union(net, k1), k1)),
    ]
    return [Pattern(name, graph) for name, graph in graphs]


@lru_cache(maxsize=None)
def _catalog_index() -> Dict[str, Pattern]:
    return {entry.name: entry for entry in _build_catalog()}


FORBIDDEN: Dict[int, Tuple[str, ...]] = {
    0: ("2K1",),
    1: ("K2+K1", "C4"),
    2: ("2K2", "P4", "K3+K1", "(K2+K1)⋆2K1", "C4⋆2K1"),
    3: tuple(f"F{i}" for i in range(1, 15)),
}


def catalog() -> List[Pattern]:
    return list(_catalog_index().values())


def pattern(name: str) -> Pattern:
    """Look a catalog entry up by name"""
    index = _catalog_index()

    if name not in index:
        raise KeyError(f"Unknown pattern: {name}")

    return index[name]


def forbidden_patterns(level: int) -> List[Pattern]:
    """Minimal graphs of complete width above `level`, for level 0..3"""
    if level not in FORBIDDEN:
        raise ValueError(f"No forbidden list for level {level}")

    return [pattern(name) for name in FORBIDDEN[level]]


def _matching_order(h: Graph) -> List[int]:
    """Pattern vertices ordered so each one has as many placed neighbours as possible"""
    order: List[int] = []
    placed = 0

    while len(order) < h.n:
        best = max(
            (v for v in range(h.n) if not placed >> v & 1),
            key=lambda v: (popcount(h.rows[v] & placed), h.degree(v), -v),
        )
        order.append(best)
        placed |= 1 << best

    return order


def contains_induced(graph: Graph, target: Union[Pattern, Graph]) -> Optional[Embedding]:
    """Injective map from pattern vertices into `graph` preserving adjacency and non-adjacency"""
    h = target.graph if isinstance(target, Pattern) else target

    if h.n > graph.n:
        return None

    if h.edge_count() > graph.edge_count():
        return None

    order = _matching_order(h)
    h_codegree = [h.n - 1 - h.degree(v) for v in range(h.n)]
    g_degree = [graph.degree(v) for v in range(graph.n)]
    g_codegree = [graph.n - 1 - d for d in g_degree]
    image = [-1] * h.n

    def extend(depth: int, used: int) -> bool:
        if depth == h.n:
            return True

        p = order[depth]
        earlier = order[:depth]

        for g in range(graph.n):
            if used >> g & 1:
                continue

            if g_degree[g] < h.degree(p) or g_codegree[g] < h_codegree[p]:
                continue

            row = graph.rows[g]

            if any(bool(row >> image[q] & 1) != bool(h.rows[p] >> q & 1) for q in earlier):
                continue

            image[p] = g

            if extend(depth + 1, used | (1 << g)):
                return True

        image[p] = -1
        return False

    if not extend(0, 0):
        return None

    return {p: image[p] for p in range(h.n)}


def find_obstruction(graph: Graph, level: int) -> Optional[Tuple[Pattern, Embedding]]:
    """First forbidden pattern of `level` found induced in `graph`, with its embedding"""
    for entry in forbidden_patterns(level):
        embedding = contains_induced(graph, entry)

        if embedding is not None:
            return entry, embedding

    return None


def chain_ordering(graph: Graph) -> Optional[Tuple[Bipartition, ChainOrdering]]:
    """Bipartition plus x-side order with nested neighbourhoods, if `graph` is a chain graph"""
    bipartition = graph.bipartition()

    if bipartition is None:
        return None

    order = ChainOrdering(sorted(bipartition.x_side, key=lambda v: (graph.degree(v), v)))

    if not order.is_valid_for(graph):
        return None

    assert bipartition.is_valid_for(graph)
    return bipartition, order


def split_partition(graph: Graph) -> Optional[SplitPartition]:
    """Split partition with a maximum clique, read off the degree sequence"""
    by_degree = sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))
    degrees = [graph.degree(v) for v in by_degree]
    m = max((i for i in range(1, graph.n + 1) if degrees[i - 1] >= i - 1), default=0)

    if sum(degrees[:m]) != m * (m - 1) + sum(degrees[m:]):
        return None

    clique = list(by_degree[:m])
    clique_mask = mask_of(clique)
    stable = []

    for v in by_degree[m:]:
        if graph.rows[v] & clique_mask == clique_mask:
            clique.append(v)
            clique_mask |= 1 << v
        else:
            stable.append(v)

    partition = SplitPartition(clique, stable)
    assert partition.is_valid_for(graph), f"Degree test accepted a non-split partition {partition}"
    return partition


def pseudo_split_partition(graph: Graph) -> Optional[PseudoSplitPartition]:
    """Pseudo-split partition if `graph` has no induced 2K2 or C4"""
    for name in ("2K2", "C4"):
        if contains_induced(graph, pattern(name)) is not None:
            return None

    split = split_partition(graph)

    if split is not None:
        return PseudoSplitPartition(split.clique_part, split.stable_part)

    embedding = contains_induced(graph, pattern("C5"))
    assert embedding is not None, "A (2K2, C4)-free graph that is not split contains C5"
    cycle = [embedding[i] for i in range(5)]
    cycle_mask = mask_of(cycle)
    clique = []
    stable = []

    for v in range(graph.n):
        if cycle_mask >> v & 1:
            continue

        seen = graph.rows[v] & cycle_mask

        if seen == cycle_mask:
            clique.append(v)
        elif not seen:
            stable.append(v)
        else:
            raise AssertionError(f"Vertex {v} sees part of the cycle {cycle}")

    partition = PseudoSplitPartition(clique, stable, cycle)
    assert partition.is_valid_for(graph), f"Invalid pseudo-split partition {partition}"
    return partition


class WidthClass(IntEnum):
    """Complete width when it is at most 3, MORE otherwise"""

    ZERO = 0
    ONE = 1
    TWO = 2
    THREE = 3
    MORE = 4

    def tag(self) -> str:
        return "width>3" if self is WidthClass.MORE else f"width<={int(self)}"


class Recognition(Enum):
    FORBIDDEN = "forbidden"
    STRUCTURAL = "structural"


def small_width_class(graph: Graph, method: Union[Recognition, str] = Recognition.FORBIDDEN) -> WidthClass:
    """Smallest level in 0..3 whose characterization `graph` meets"""
    method = Recognition(method)

    for level in range(4):
        if method is Recognition.FORBIDDEN:
            hit = find_obstruction(graph, level) is None
        else:
            hit = decide_k(graph, level) is not None

        if hit:
            logger.debug("small_width_class(%s, %s) = %s", graph, method.value, level)
            return WidthClass(level)

    return WidthClass.MORE
