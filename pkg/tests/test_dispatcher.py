import pytest

from .conftest import C4
from .conftest import C5
from .conftest import K2
from .conftest import logger
from .conftest import P4
from .conftest import TWO_K2
from .helpers import concurrent_solve
from cowkit import all_graphs
from cowkit import ComposeMode
from cowkit import default_solvers
from cowkit import dispatch
from cowkit import Dispatcher
from cowkit import exact_cow
from cowkit import gk
from cowkit import Graph
from cowkit import Limits
from cowkit import Method
from cowkit import random_graph
from cowkit import SplitSolver
from cowkit import UnsolvedError
from cowkit import verify_witness
from cowkit import Witness


def test_dispatch_examples():
    result = dispatch(Graph.complete(5))
    assert result.width == 0
    assert result.method is Method.REDUCED
    assert result.witness == Witness([])

    result = dispatch(C5)
    assert result.width == 5
    assert result.method is Method.C5_COMPONENT

    result = dispatch(C4)
    assert result.width == 2
    assert result.method is Method.REDUCED
    assert result.reduction_prefix.parameter_delta == 2

    result = dispatch(P4)
    assert result.width == 3
    assert result.method is Method.CHAIN

    c5_join = K2.compose(C5, ComposeMode.JOIN)
    c5_join = c5_join.compose(Graph.complete(1), ComposeMode.DISJOINT_UNION)
    result = dispatch(c5_join)
    assert result.width == exact_cow(c5_join)[0]
    assert result.method is Method.PSEUDO_SPLIT

    result = dispatch(gk(3))
    assert result.width == 3
    assert result.method is Method.SPLIT

    result = Dispatcher(solvers=[]).dispatch(gk(3))
    assert result.width == 3
    assert result.method is Method.SMALL_WIDTH
    assert verify_witness(gk(3), result.witness)


def test_dispatch_falls_back_to_fpt_and_oracle():
    two_k2_k1 = TWO_K2.compose(Graph.complete(1), ComposeMode.DISJOINT_UNION)
    result = dispatch(two_k2_k1)
    assert result.width == exact_cow(two_k2_k1)[0]
    assert result.method is Method.FPT

    result = Dispatcher(limits=Limits(max_k=3)).dispatch(two_k2_k1)
    assert result.method is Method.ORACLE
    assert result.width == exact_cow(two_k2_k1)[0]

    with pytest.raises(UnsolvedError):
        Dispatcher(limits=Limits(max_k=3, max_vertices=4)).dispatch(two_k2_k1)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_dispatch_matches_oracle(n):
    for graph in all_graphs(n):
        result = dispatch(graph)
        assert result.width == exact_cow(graph)[0]
        assert verify_witness(graph, result.witness)


def test_dispatch_on_random_graphs(rng):
    graphs = [random_graph(rng.randint(5, 8), rng.uniform(0.55, 0.85), rng) for _ in range(30)]
    results = concurrent_solve(dispatch, graphs)

    for graph, result in zip(graphs, results):
        assert result.width == exact_cow(graph)[0]
        assert verify_witness(graph, result.witness)

    logger.info("Methods used: %s", sorted({result.method.value for result in results}))


def test_custom_solver_list():
    dispatcher = Dispatcher(solvers=[SplitSolver()])
    assert dispatcher.dispatch(P4).method is Method.SPLIT
    assert [type(solver).__name__ for solver in default_solvers()] == [
        "ChainSolver",
        "TriangleFreeSolver",
        "SplitSolver",
        "PseudoSplitSolver",
    ]
