"""Pytest config & fixtures
"""
from logging import basicConfig
from logging import getLogger
from os import getenv
from random import Random

import pytest

from cowkit import ComposeMode
from cowkit import FrozenClock
from cowkit import Graph
from cowkit import Limits
from cowkit import PerfClock

# Make log messages visible on test failure (or with pytest -s)
basicConfig(level="INFO")
logger = getLogger("cowkit")
logger.setLevel(getenv("LOG_LEVEL", "INFO"))

K1 = Graph.complete(1)
K2 = Graph.complete(2)
K3 = Graph.complete(3)
P3 = Graph.path(3)
P4 = Graph.path(4)
C4 = Graph.cycle(4)
C5 = Graph.cycle(5)
C6 = Graph.cycle(6)
TWO_K2 = Graph.from_edges(4, [(0, 1), (2, 3)])
K2_K1 = K2.compose(K1, ComposeMode.DISJOINT_UNION)
K3_K1 = K3.compose(K1, ComposeMode.DISJOINT_UNION)

clocks = [
    PerfClock(),
    FrozenClock(),
]


@pytest.fixture(params=clocks)
def clock(request):
    """Parametrization for different clock."""
    return request.param


@pytest.fixture
def limits():
    return Limits()


@pytest.fixture
def rng():
    return Random(int(getenv("COWKIT_TEST_SEED", "20240607")))


@pytest.fixture(params=["forbidden", "structural"])
def recognition(request):
    return request.param
