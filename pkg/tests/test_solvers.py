import pytest

from .conftest import C4
from .conftest import C5
from .conftest import C6
from .conftest import K1
from .conftest import K3_K1
from .conftest import logger
from .conftest import P4
from .helpers import chain_graphs
from .helpers import pseudo_split_graphs
from .helpers import split_graphs
from cowkit import chain_ordering
from cowkit import chain_width
from cowkit import ChainSolver
from cowkit import ClassificationError
from cowkit import ComposeMode
from cowkit import exact_cow
from cowkit import Graph
from cowkit import kernelize
from cowkit import Method
from cowkit import pseudo_split_partition
from cowkit import pseudo_split_width
from cowkit import PseudoSplitSolver
from cowkit import split_partition
from cowkit import split_width
from cowkit import SplitSolver
from cowkit import triangle_free_2k2_width
from cowkit import TriangleFreeSolver
from cowkit import verify_witness
from cowkit import Witness


def _check(solver, graph):
    result = solver.solve(graph)
    assert verify_witness(graph, result.witness)
    assert len(result.witness) == result.width
    assert result.width == exact_cow(graph)[0], graph
    return result


def test_chain_examples():
    result = ChainSolver().solve(P4)
    assert result.width == 3
    assert result.method is Method.CHAIN
    assert verify_witness(P4, result.witness)

    graph = Graph.from_edges(4, [(1, 2), (1, 3)])
    result = ChainSolver().solve(graph)
    assert result.width == 2
    assert result.witness == Witness([{0, 2, 3}, {0, 1}])

    with pytest.raises(ClassificationError) as err:
        ChainSolver().solve(C6)

    assert err.value.meta_info["graph_class"] == "chain"


def test_chain_formula_on_kernels():
    for graph in chain_graphs(7):
        kernel, _, _ = kernelize(graph)

        if kernel.n == 0:
            continue

        assert kernel.n >= 3
        _, ordering = chain_ordering(kernel)
        first = ordering.order[0]
        expected = len(ordering) if not kernel.rows[first] else len(ordering) + 1
        assert exact_cow(kernel)[0] == expected


@pytest.mark.parametrize("max_n", [6])
def test_chain_solver_matches_oracle(max_n):
    for graph in chain_graphs(max_n):
        _check(ChainSolver(), graph)


@pytest.mark.slow
def test_chain_solver_matches_oracle_on_eight_vertices():
    for graph in chain_graphs(8):
        _check(ChainSolver(), graph)


def test_triangle_free_examples():
    result = _check(TriangleFreeSolver(), C5)
    assert result.width == 5
    assert result.method is Method.C5_COMPONENT

    c5_k1 = C5.compose(K1, ComposeMode.DISJOINT_UNION)
    result = _check(TriangleFreeSolver(), c5_k1)
    assert result.width == 5
    assert all(5 in vertex_set for vertex_set in result.witness)

    c5_2k1 = c5_k1.compose(K1, ComposeMode.DISJOINT_UNION)
    assert _check(TriangleFreeSolver(), c5_2k1).width == 5

    assert _check(TriangleFreeSolver(), C4).width == 2
    assert _check(TriangleFreeSolver(), P4).method is Method.CHAIN

    with pytest.raises(ClassificationError):
        TriangleFreeSolver().solve(Graph.complete(3))

    with pytest.raises(ClassificationError):
        TriangleFreeSolver().solve(C6)


def test_triangle_free_solver_on_chain_graphs():
    for graph in chain_graphs(6):
        _check(TriangleFreeSolver(), graph)


def test_split_examples():
    assert _check(SplitSolver(), P4).width == 3
    assert _check(SplitSolver(), Graph.from_edges(4, [(0, 1)])).width == 2
    result = _check(SplitSolver(), K3_K1)
    assert result.width == 3
    assert result.method is Method.SPLIT

    with pytest.raises(ClassificationError):
        SplitSolver().solve(C4)


@pytest.mark.parametrize("clique_size, stable_size", [(1, 4), (2, 3), (3, 2), (2, 4), (3, 3), (4, 2)])
def test_split_solver_matches_oracle(clique_size, stable_size):
    for graph in split_graphs(clique_size, stable_size):
        result = _check(SplitSolver(), graph)
        kernel, _, trace = kernelize(graph)

        if kernel.n:
            q = len(split_partition(kernel).clique_part)
            assert result.width - trace.parameter_delta in (q, q + 1)


@pytest.mark.slow
@pytest.mark.parametrize("clique_size, stable_size", [(2, 6), (3, 5), (4, 4), (5, 3), (6, 2)])
def test_split_solver_matches_oracle_on_eight_vertices(clique_size, stable_size):
    for graph in split_graphs(clique_size, stable_size):
        _check(SplitSolver(), graph)


def test_pseudo_split_examples():
    result = _check(PseudoSplitSolver(), C5)
    assert result.width == 5
    assert result.method is Method.PSEUDO_SPLIT

    with_q_and_s = Graph.from_edges(7, [(i, (i + 1) % 5) for i in range(5)] + [(5, c) for c in range(5)])
    result = _check(PseudoSplitSolver(), with_q_and_s)
    assert result.width == 6

    for graph in split_graphs(2, 3):
        assert PseudoSplitSolver().solve(graph).width == SplitSolver().solve(graph).width

    with pytest.raises(ClassificationError):
        PseudoSplitSolver().solve(C4)


@pytest.mark.parametrize("clique_size, stable_size", [(0, 0), (1, 0), (0, 2), (1, 1), (1, 2), (2, 1)])
def test_pseudo_split_solver_matches_oracle(clique_size, stable_size):
    for graph in pseudo_split_graphs(clique_size, stable_size):
        result = _check(PseudoSplitSolver(), graph)
        kernel, _, trace = kernelize(graph)
        partition = pseudo_split_partition(kernel)

        if partition.cycle_part:
            assert result.width - trace.parameter_delta == len(partition.clique_part) + 5

    logger.info("Pseudo-split graphs with |Q|=%s, |S|=%s agree", clique_size, stable_size)


def test_module_level_solvers():
    assert chain_width(P4).width == 3
    assert triangle_free_2k2_width(C5).width == 5
    assert split_width(P4).width == 3
    assert pseudo_split_width(C5).width == 5
    assert pseudo_split_width(C5).method is Method.PSEUDO_SPLIT

    with pytest.raises(ClassificationError):
        chain_width(C5)

    with pytest.raises(ClassificationError):
        split_width(C4)
