import pytest

from cactusguard import Graph


def cycle(k):
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def path(k):
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


@pytest.fixture
def triangle():
    return cycle(3)


@pytest.fixture
def bull():
    # triangle 0,1,2 with leaves 3 on 1 and 4 on 2
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


@pytest.fixture
def three_pan():
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3)])


@pytest.fixture
def star():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def k4():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def triangle_bridge_triangle():
    # triangles {0,1,2} and {3,4,5} joined by the bridge 2-3
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
