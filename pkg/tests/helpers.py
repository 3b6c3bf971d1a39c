"""Graph generators and comparison helpers shared by the tests
"""
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from itertools import combinations_with_replacement
from itertools import product
from random import Random
from typing import Callable
from typing import Iterator
from typing import List
from typing import Sequence

from .conftest import logger
from cowkit import Graph
from cowkit import contains_induced


def isomorphic(first: Graph, second: Graph) -> bool:
    """An induced embedding between graphs of equal order and size is an isomorphism"""
    if first.n != second.n or first.edge_count() != second.edge_count():
        return False

    return contains_induced(first, second) is not None


def vertex_deleted(graph: Graph) -> Iterator[Graph]:
    for v in range(graph.n):
        sub, _ = graph.induced(u for u in range(graph.n) if u != v)
        yield sub


def chain_graphs(max_n: int) -> Iterator[Graph]:
    """Every chain graph up to isomorphism with both sides non-empty

    x vertex i sees the first thresholds[i] vertices of y, thresholds non-decreasing.
    """
    for n in range(2, max_n + 1):
        for a in range(1, n):
            b = n - a

            for thresholds in combinations_with_replacement(range(b + 1), a):
                edges = [(x, a + y) for x, t in enumerate(thresholds) for y in range(t)]
                yield Graph.from_edges(n, edges)


def split_graphs(clique_size: int, stable_size: int) -> Iterator[Graph]:
    """Every split graph with the given part sizes up to reordering of the stable part"""
    clique = [(u, v) for u, v in combinations(range(clique_size), 2)]

    for neighbourhoods in combinations_with_replacement(range(1 << clique_size), stable_size):
        edges = list(clique)

        for s, mask in enumerate(neighbourhoods):
            edges.extend((q, clique_size + s) for q in range(clique_size) if mask >> q & 1)

        yield Graph.from_edges(clique_size + stable_size, edges)


def pseudo_split_graphs(clique_size: int, stable_size: int) -> Iterator[Graph]:
    """C5 on 0..4 joined to a clique Q, plus a stable set S that only sees Q"""
    q0 = 5
    s0 = 5 + clique_size
    base = [(i, (i + 1) % 5) for i in range(5)]
    base += [(q0 + u, q0 + v) for u, v in combinations(range(clique_size), 2)]
    base += [(c, q0 + q) for c in range(5) for q in range(clique_size)]

    for neighbourhoods in combinations_with_replacement(range(1 << clique_size), stable_size):
        edges = list(base)

        for s, mask in enumerate(neighbourhoods):
            edges.extend((q0 + q, s0 + s) for q in range(clique_size) if mask >> q & 1)

        yield Graph.from_edges(5 + clique_size + stable_size, edges)


def bipartite_graphs(x_size: int, y_size: int) -> Iterator[Graph]:
    """Every labeled bipartite graph with x side 0..x_size-1 and y side after it"""
    pairs = list(product(range(x_size), range(x_size, x_size + y_size)))

    for chosen in range(1 << len(pairs)):
        yield Graph.from_edges(x_size + y_size, [pair for idx, pair in enumerate(pairs) if chosen >> idx & 1])


def random_bipartite(rng: Random, x_size: int, y_size: int, p: float = 0.5) -> Graph:
    pairs = product(range(x_size), range(x_size, x_size + y_size))
    return Graph.from_edges(x_size + y_size, [pair for pair in pairs if rng.random() < p])


def random_chordal_bipartite(rng: Random, max_n: int = 7) -> Graph:
    """Rejection sample: a bipartite graph on at most 7 vertices is chordal iff it has no induced C6"""
    assert max_n <= 7, "Longer cycles need their own check"
    c6 = Graph.cycle(6)

    while True:
        x_size = rng.randint(1, max_n - 1)
        y_size = rng.randint(1, max_n - x_size)
        graph = random_bipartite(rng, x_size, y_size)

        if contains_induced(graph, c6) is None:
            return graph


def concurrent_solve(solve: Callable, graphs: Sequence[Graph], workers: int = 4) -> List:
    """Run `solve` over `graphs` from several threads, results in input order"""
    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = list(executor.map(solve, graphs))

    logger.info("Solved %s graphs on %s threads", len(graphs), workers)
    return results
