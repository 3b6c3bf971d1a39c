"""Exact exponential oracles for complete width, edge clique cover and biclique cover

All three problems are set covers: a family of target pairs, each encoded as
a two-bit mask, must be hit by candidate masks that contain both of its bits.
One branch-and-bound engine, iteratively deepened on the cover size, serves
every problem. It branches on the uncovered target with the fewest covering
candidates, so each search is exhaustive and the first cover found is minimum.
"""
import logging
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from .abstracts import BicliqueCover
from .abstracts import Bipartition
from .abstracts import CliqueCover
from .abstracts import Graph
from .abstracts import Limits
from .abstracts import Report
from .abstracts import VertexSet
from .abstracts import Witness
from .abstracts import iter_bits
from .abstracts import members
from .abstracts import popcount
from .exceptions import LimitExceededError

logger = logging.getLogger("cowkit")


def _bron_kerbosch(rows: Sequence[int], r: int, p: int, x: int, out: List[int]) -> None:
    if not p and not x:
        out.append(r)
        return

    pivot = max(iter_bits(p | x), key=lambda u: popcount(p & rows[u]))

    for v in iter_bits(p & ~rows[pivot]):
        bit = 1 << v
        _bron_kerbosch(rows, r | bit, p & rows[v], x & rows[v], out)
        p &= ~bit
        x |= bit


def _maximal_clique_masks(graph: Graph) -> List[int]:
    out: List[int] = []
    _bron_kerbosch(graph.rows, 0, graph.full_mask, 0, out)
    return sorted(out)


def maximal_cliques(graph: Graph) -> List[VertexSet]:
    """Every maximal clique, ordered by bit row"""
    return [members(mask) for mask in _maximal_clique_masks(graph)]


def maximal_independent_sets(graph: Graph) -> List[VertexSet]:
    """Every maximal independent set, ordered by bit row"""
    return [members(mask) for mask in _maximal_clique_masks(graph.complement())]


def _maximal_biclique_masks(graph: Graph, bipartition: Bipartition) -> List[Tuple[int, int]]:
    x_side = sorted(bipartition.x_side)
    rows = graph.rows
    closed = set()
    stack = [rows[x] for x in x_side if rows[x]]

    while stack:
        y_part = stack.pop()

        if y_part in closed:
            continue

        closed.add(y_part)

        for x in x_side:
            meet = y_part & rows[x]

            if meet and meet not in closed:
                stack.append(meet)

    bicliques = []

    for y_part in sorted(closed):
        x_part = 0

        for x in x_side:
            if rows[x] & y_part == y_part:
                x_part |= 1 << x

        bicliques.append((x_part, y_part))

    return bicliques


def maximal_bicliques(graph: Graph, bipartition: Bipartition) -> List[Tuple[VertexSet, VertexSet]]:
    """Every maximal biclique with both sides non-empty, as (x part, y part)

    The y parts are exactly the non-empty intersections of x-side neighbourhoods.
    """
    bipartition.check(graph)
    return [(members(xs), members(ys)) for xs, ys in _maximal_biclique_masks(graph, bipartition)]


def _min_cover(targets: Sequence[int], candidates: Sequence[int]) -> List[int]:
    """Smallest list of candidates such that every target is a subset of one of them"""
    if not targets:
        return []

    coverers: Dict[int, List[int]] = {t: [c for c in candidates if c & t == t] for t in targets}

    for target, options in coverers.items():
        assert options, f"No candidate covers target {sorted(iter_bits(target))}"

    ordered = sorted(targets, key=lambda t: (len(coverers[t]), t))
    best_reach = max(sum(1 for t in targets if c & t == t) for c in candidates)
    chosen: List[int] = []

    def search(uncovered: List[int], budget: int) -> bool:
        if not uncovered:
            return True

        if budget == 0 or len(uncovered) > budget * best_reach:
            return False

        target = uncovered[0]

        for candidate in coverers[target]:
            chosen.append(candidate)
            rest = [t for t in uncovered if candidate & t != t]

            if search(rest, budget - 1):
                return True

            chosen.pop()

        return False

    for budget in range(1, len(targets) + 1):
        if search(ordered, budget):
            logger.debug("Cover of size %s found for %s targets", budget, len(targets))
            return sorted(chosen)

    raise AssertionError("A cover of size len(targets) always exists")


def _pair_masks(pairs) -> List[int]:
    return [(1 << u) | (1 << v) for u, v in pairs]


def _check_vertices(graph: Graph, allowed: int, what: str = "Vertex count") -> None:
    if graph.n > allowed:
        raise LimitExceededError(what, graph.n, allowed)


def exact_cow(graph: Graph, limits: Optional[Limits] = None) -> Tuple[int, Witness]:
    """Minimum witness, searched over maximal independent sets"""
    limits = limits or Limits.from_env()
    _check_vertices(graph, limits.max_vertices)
    targets = _pair_masks(graph.non_edges())
    candidates = _maximal_clique_masks(graph.complement())
    cover = _min_cover(targets, candidates)
    logger.debug("exact_cow: n=%s, non-edges=%s, width=%s", graph.n, len(targets), len(cover))
    return len(cover), Witness(members(mask) for mask in cover)


def brute_force_cow(graph: Graph, limits: Optional[Limits] = None) -> Tuple[int, Witness]:
    """Minimum witness, searched over every independent set with at least two vertices"""
    limits = limits or Limits.from_env()
    _check_vertices(graph, limits.brute_force_vertices)
    targets = _pair_masks(graph.non_edges())
    candidates = [
        mask for mask in range(1 << graph.n) if popcount(mask) >= 2 and graph.is_independent(iter_bits(mask))
    ]
    cover = _min_cover(targets, candidates)
    return len(cover), Witness(members(mask) for mask in cover)


def exact_ecc(graph: Graph, limits: Optional[Limits] = None) -> Tuple[int, CliqueCover]:
    """Edge clique cover number, computed as the complete width of the complement"""
    count, witness = exact_cow(graph.complement(), limits)
    return count, CliqueCover(witness.sets)


def exact_ecc_direct(graph: Graph, limits: Optional[Limits] = None) -> Tuple[int, CliqueCover]:
    """Edge clique cover number searched over every clique with at least two vertices"""
    limits = limits or Limits.from_env()
    _check_vertices(graph, limits.brute_force_vertices)
    targets = _pair_masks(graph.edges())
    candidates = [mask for mask in range(1 << graph.n) if popcount(mask) >= 2 and graph.is_clique(iter_bits(mask))]
    cover = _min_cover(targets, candidates)
    return len(cover), CliqueCover(members(mask) for mask in cover)


def exact_biclique_cover(
    graph: Graph,
    bipartition: Bipartition,
    limits: Optional[Limits] = None,
) -> Tuple[int, BicliqueCover]:
    """Minimum biclique cover, searched over maximal bicliques"""
    limits = limits or Limits.from_env()
    bipartition.check(graph)
    _check_vertices(graph, limits.max_vertices)
    edge_count = graph.edge_count()

    if edge_count > limits.max_edges:
        raise LimitExceededError("Edge count", edge_count, limits.max_edges)

    bicliques = _maximal_biclique_masks(graph, bipartition)
    by_mask = {xs | ys: (xs, ys) for xs, ys in bicliques}
    cover = _min_cover(_pair_masks(graph.edges()), list(by_mask))
    chosen = [by_mask[mask] for mask in cover]
    return len(chosen), BicliqueCover((members(xs), members(ys)) for xs, ys in chosen)


def verify_witness(graph: Graph, witness: Witness) -> Report:
    """Check every set is independent and every non-adjacent pair shares a set"""
    masks = []

    for idx, vertex_set in enumerate(witness):
        outside = [v for v in vertex_set if not 0 <= v < graph.n]

        if outside:
            return Report(False, f"set {idx} names vertex {outside[0]} out of range", offending_set=idx)

        mask = 0

        for v in vertex_set:
            mask |= 1 << v

        for v in iter_bits(mask):
            inside = graph.rows[v] & mask

            if inside:
                u = next(iter_bits(inside))
                pair = (min(u, v), max(u, v))
                return Report(False, f"set {idx} is not independent", offending_set=idx, offending_pair=pair)

        masks.append(mask)

    for u, v in graph.non_edges():
        pair = (1 << u) | (1 << v)

        if not any(mask & pair == pair for mask in masks):
            return Report(False, f"non-adjacent pair {(u, v)} shares no set", offending_pair=(u, v))

    return Report.passed()


def _verify_clique_cover(graph: Graph, cover: CliqueCover) -> Report:
    masks = []

    for idx, clique in enumerate(cover):
        if any(not 0 <= v < graph.n for v in clique):
            return Report(False, f"clique {idx} names a vertex out of range", offending_set=idx)

        if not graph.is_clique(clique):
            missing = next((u, v) for u in sorted(clique) for v in sorted(clique) if u < v and not graph.has_edge(u, v))
            return Report(False, f"set {idx} is not a clique", offending_set=idx, offending_pair=missing)

        masks.append(sum(1 << v for v in clique))

    for u, v in graph.edges():
        pair = (1 << u) | (1 << v)

        if not any(mask & pair == pair for mask in masks):
            return Report(False, f"edge {(u, v)} lies in no clique", offending_pair=(u, v))

    return Report.passed()


def _verify_biclique_cover(graph: Graph, cover: BicliqueCover) -> Report:
    for idx, (xs, ys) in enumerate(cover):
        if any(not 0 <= v < graph.n for v in xs | ys):
            return Report(False, f"biclique {idx} names a vertex out of range", offending_set=idx)

        if xs & ys:
            return Report(False, f"biclique {idx} has overlapping sides", offending_set=idx)

        for x in sorted(xs):
            for y in sorted(ys):
                if not graph.has_edge(x, y):
                    pair = (min(x, y), max(x, y))
                    return Report(False, f"biclique {idx} is not complete", offending_set=idx, offending_pair=pair)

    for u, v in graph.edges():
        if not any((u in xs and v in ys) or (v in xs and u in ys) for xs, ys in cover):
            return Report(False, f"edge {(u, v)} lies in no biclique", offending_pair=(u, v))

    return Report.passed()


def verify_cover(graph: Graph, cover) -> Report:
    """Check a clique cover or a biclique cover of the edges of `graph`"""
    if isinstance(cover, BicliqueCover):
        return _verify_biclique_cover(graph, cover)

    if isinstance(cover, CliqueCover):
        return _verify_clique_cover(graph, cover)

    raise TypeError(f"Unsupported cover type: {type(cover).__name__}")
