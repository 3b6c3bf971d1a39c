import pytest

from .conftest import C6
from .conftest import logger
from .conftest import P4
from .helpers import bipartite_graphs
from .helpers import isomorphic
from .helpers import random_chordal_bipartite
from cowkit import BicliqueCover
from cowkit import biclique_to_cow
from cowkit import Bipartition
from cowkit import contains_induced
from cowkit import cover_to_witness
from cowkit import exact_biclique_cover
from cowkit import exact_cow
from cowkit import Graph
from cowkit import GraphDomainError
from cowkit import InvalidCertificateError
from cowkit import pattern
from cowkit import verify_cover
from cowkit import verify_witness
from cowkit import Witness
from cowkit import witness_to_cover

K11 = Graph.complete(2)
K11_SIDES = Bipartition({0}, {1})


def test_biclique_to_cow_examples():
    instance = biclique_to_cow(K11, K11_SIDES, 1)
    assert instance.k == 3
    assert isomorphic(instance.graph, P4)
    assert exact_cow(instance.graph)[0] == 3
    assert (instance.x_apex, instance.y_apex) == (2, 3)
    assert instance.to_dict()["index_map"] == {"0": 0, "1": 1}

    instance = biclique_to_cow(C6, C6.bipartition(), 3)
    assert instance.graph.n == 8
    assert instance.k == 5
    assert exact_cow(instance.graph)[0] == 5

    with pytest.raises(GraphDomainError):
        biclique_to_cow(K11, Bipartition({0, 1}, set()), 1)


def test_chordal_bipartite_sources_stay_small(rng):
    three_k2 = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])

    for _ in range(100):
        graph = random_chordal_bipartite(rng)
        instance = biclique_to_cow(graph, graph.bipartition(), 1)
        assert contains_induced(instance.graph, three_k2) is None
        assert contains_induced(instance.graph, pattern("C8")) is None


def test_cover_to_witness():
    instance = biclique_to_cow(K11, K11_SIDES, 1)
    witness = cover_to_witness(instance, BicliqueCover([({0}, {1})]))
    assert len(witness) == 3
    assert verify_witness(instance.graph, witness)

    instance = biclique_to_cow(C6, C6.bipartition(), 3)
    _, cover = exact_biclique_cover(C6, C6.bipartition())
    witness = cover_to_witness(instance, cover)
    assert len(witness) == 5
    assert verify_witness(instance.graph, witness)

    empty = Graph.empty(2)
    instance = biclique_to_cow(empty, K11_SIDES, 0)
    witness = cover_to_witness(instance, BicliqueCover([]))
    assert len(witness) == 2
    assert verify_witness(instance.graph, witness)

    with pytest.raises(InvalidCertificateError):
        cover_to_witness(biclique_to_cow(K11, K11_SIDES, 1), BicliqueCover([]))


def test_witness_to_cover():
    instance = biclique_to_cow(C6, C6.bipartition(), 3)
    _, cover = exact_biclique_cover(C6, C6.bipartition())
    back = witness_to_cover(instance, cover_to_witness(instance, cover))
    assert len(back) == 3
    assert verify_cover(C6, back)

    instance = biclique_to_cow(K11, K11_SIDES, 1)
    _, witness = exact_cow(instance.graph)
    back = witness_to_cover(instance, witness)
    assert len(back) == 1
    assert verify_cover(K11, back)

    with pytest.raises(InvalidCertificateError):
        witness_to_cover(instance, Witness([{0, 2}]))


def _equivalence(x_size, y_size):
    bipartition = Bipartition(range(x_size), range(x_size, x_size + y_size))

    for graph in bipartite_graphs(x_size, y_size):
        count, cover = exact_biclique_cover(graph, bipartition)
        instance = biclique_to_cow(graph, bipartition, count)
        width, witness = exact_cow(instance.graph)
        assert width == count + 2

        assert len(cover_to_witness(instance, cover)) == count + 2
        back = witness_to_cover(instance, witness)
        assert len(back) == count
        assert verify_cover(graph, back)


@pytest.mark.parametrize("x_size, y_size", [(1, 1), (1, 2), (1, 3), (2, 2), (1, 4), (2, 3)])
def test_reduction_equivalence(x_size, y_size):
    _equivalence(x_size, y_size)
    logger.info("Reduction holds for all bipartite graphs with sides %s, %s", x_size, y_size)


@pytest.mark.slow
@pytest.mark.parametrize("x_size, y_size", [(1, 5), (2, 4), (3, 3)])
def test_reduction_equivalence_on_six_vertices(x_size, y_size):
    _equivalence(x_size, y_size)
