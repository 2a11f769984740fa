import pytest

from core.game import make_params, parse_configuration
from core.order import build_poset
from core.statespace import build_graph, reduce


@pytest.fixture(scope="session")
def p63():
    return make_params(6, 3)


@pytest.fixture(scope="session")
def p64():
    return make_params(6, 4)


@pytest.fixture(scope="session")
def g63(p63):
    return build_graph(p63)


@pytest.fixture(scope="session")
def g64(p64):
    return build_graph(p64)


@pytest.fixture(scope="session")
def rg63(g63, p63):
    return reduce(g63, p63)


@pytest.fixture(scope="session")
def rg64(g64, p64):
    return reduce(g64, p64)


@pytest.fixture(scope="session")
def pv411(rg63):
    """GC(4,1,1) for n=6, p=3: the five-element poset used throughout."""
    return build_poset(parse_configuration("4,1,1"), rg63)


@pytest.fixture(scope="session")
def pv3210(rg64):
    return build_poset(parse_configuration("3,2,1,0"), rg64)
