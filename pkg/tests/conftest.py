import random

import pytest

from tests.helpers import make_graph


@pytest.fixture
def triangle():
    return make_graph([(1, 2), (1, 3), (2, 3)])


@pytest.fixture
def path():
    return make_graph([(1, 2), (2, 3), (3, 4)])


@pytest.fixture
def star():
    return make_graph([(0, 1), (0, 2), (0, 3), (0, 4)])


@pytest.fixture
def bowtie():
    # two triangles sharing node 3
    return make_graph([(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])


@pytest.fixture
def diamond():
    # K4 minus the edge 1-4
    return make_graph([(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def two_triangles():
    return make_graph([(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)])


@pytest.fixture
def karate():
    nx = pytest.importorskip("networkx")
    return make_graph(nx.karate_club_graph().edges())


@pytest.fixture
def rng():
    return random.Random(20240611)
