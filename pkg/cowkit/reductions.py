"""Polynomial reduction from biclique cover to complete width

From a bipartite G with sides X, Y and parameter k, build G' as the
bipartite complement of G plus two apex vertices: x_apex sees Y and
y_apex, y_apex sees X and x_apex. G has a biclique cover of size k iff
G' has complete width at most k + 2. Both directions translate
certificates explicitly.
"""
import logging
from typing import Dict
from typing import List
from typing import Set

from .abstracts import BicliqueCover
from .abstracts import Bipartition
from .abstracts import Graph
from .abstracts import Witness
from .exceptions import InvalidCertificateError
from .oracle import verify_cover
from .oracle import verify_witness

logger = logging.getLogger("cowkit")


class CowInstance:
    """Complete width instance built from a bipartite graph

    Vertices 0..n-1 keep their ids, x_apex is n and y_apex is n + 1.
    """

    graph: Graph
    k: int
    x_apex: int
    y_apex: int
    index_map: Dict[int, int]
    source: Graph
    bipartition: Bipartition

    def __init__(self, graph: Graph, k: int, source: Graph, bipartition: Bipartition):
        self.graph = graph
        self.k = k
        self.source = source
        self.bipartition = bipartition
        self.x_apex = source.n
        self.y_apex = source.n + 1
        self.index_map = {v: v for v in range(source.n)}

    @property
    def x_prime(self) -> frozenset:
        return self.bipartition.x_side | {self.x_apex}

    @property
    def y_prime(self) -> frozenset:
        return self.bipartition.y_side | {self.y_apex}

    def to_dict(self) -> dict:
        return {
            "k_prime": self.k,
            "x_apex": self.x_apex,
            "y_apex": self.y_apex,
            "x_side": sorted(self.bipartition.x_side),
            "y_side": sorted(self.bipartition.y_side),
            "index_map": {str(old): new for old, new in self.index_map.items()},
        }

    def __repr__(self) -> str:
        return f"CowInstance(n={self.graph.n}, k={self.k})"


def biclique_to_cow(graph: Graph, bipartition: Bipartition, k: int) -> CowInstance:
    bipartition.check(graph)
    n = graph.n
    complement = graph.bipartite_complement(bipartition)
    x_apex, y_apex = n, n + 1
    x_mask, y_mask = bipartition.x_mask, bipartition.y_mask
    rows = []

    for v, row in enumerate(complement.rows):
        apex = y_apex if x_mask >> v & 1 else x_apex
        rows.append(row | (1 << apex))

    rows.append(y_mask | (1 << y_apex))
    rows.append(x_mask | (1 << x_apex))
    instance = CowInstance(Graph(n + 2, rows), k + 2, graph, bipartition)
    logger.debug("biclique_to_cow: %s with k=%s -> %s", graph, k, instance)
    return instance


def cover_to_witness(instance: CowInstance, cover: BicliqueCover) -> Witness:
    """Each biclique X_i + Y_i is independent in G', and X', Y' finish the witness"""
    report = verify_cover(instance.source, cover)

    if not report:
        raise InvalidCertificateError(f"Biclique cover does not verify: {report.message}")

    sets = [set(xs) | set(ys) for xs, ys in cover]
    sets.append(set(instance.x_prime))
    sets.append(set(instance.y_prime))
    witness = Witness(sets)
    assert verify_witness(instance.graph, witness), "Translated witness does not verify"
    return witness


def _normalize(instance: CowInstance, witness: Witness) -> List[Set[int]]:
    """Make X' and Y' witness sets of their own and strip the apexes from every other set"""
    x_side, y_side = instance.bipartition.x_side, instance.bipartition.y_side
    sets = [set(s) for s in witness]

    def pick(apex: int, side: frozenset) -> int:
        for idx, vertex_set in enumerate(sets):
            if apex in vertex_set and vertex_set & side:
                return idx

        for idx, vertex_set in enumerate(sets):
            if apex in vertex_set:
                return idx

        raise InvalidCertificateError("Witness leaves an apex uncovered", apex=apex)

    x_idx = pick(instance.x_apex, x_side)
    sets[x_idx] = set(instance.x_prime)
    y_idx = pick(instance.y_apex, y_side)

    if y_idx == x_idx:
        raise InvalidCertificateError("Both apexes share one witness set")

    sets[y_idx] = set(instance.y_prime)

    for idx, vertex_set in enumerate(sets):
        if idx not in (x_idx, y_idx):
            vertex_set.discard(instance.x_apex)
            vertex_set.discard(instance.y_apex)

    return [s for idx, s in enumerate(sets) if idx not in (x_idx, y_idx)]


def witness_to_cover(instance: CowInstance, witness: Witness) -> BicliqueCover:
    """Biclique cover of the source with exactly len(witness) - 2 bicliques

    Sets that meet only one side become degenerate bicliques so the size
    stays exact.
    """
    report = verify_witness(instance.graph, witness)

    if not report:
        raise InvalidCertificateError(f"Witness does not verify: {report.message}")

    x_side, y_side = instance.bipartition.x_side, instance.bipartition.y_side
    rest = _normalize(instance, witness)
    cover = BicliqueCover((s & x_side, s & y_side) for s in rest)
    assert verify_cover(instance.source, cover), "Translated cover does not verify"
    return cover
