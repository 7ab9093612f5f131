import pytest

from liec.graph import SimpleGraph
from liec.templates import B_PRIME, BOW_TIE


def pytest_report_header(config):
    return "liec: exhaustive checks use the built-in oracle as ground truth"


@pytest.fixture
def triangle():
    return SimpleGraph([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def bow_tie():
    return BOW_TIE.graph


@pytest.fixture
def b_prime():
    return B_PRIME.graph
