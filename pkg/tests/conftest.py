import pytest

from bispan.catalog import named_graph


@pytest.fixture
def k4():
    return named_graph("K4")


@pytest.fixture
def w5():
    return named_graph("W5")
