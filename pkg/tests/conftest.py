import os
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(ROOT, "src"))
sys.path.insert(0, ROOT)

from core.circulant import parse_spec  # noqa: E402
from core.cotwins import crown_graph  # noqa: E402
from core.graph import named_graph  # noqa: E402


@pytest.fixture
def c8_twins():
    """C_8(±1,±3,4): adjacent twins, chain C_8 -> C_4 -> K_2 -> K_1"""
    return parse_spec(8, "±1,±3,4")


@pytest.fixture
def c14():
    """C_14(±1,±2,±3): twin-free with nonadjacent co-twins"""
    return parse_spec(14, "±1,±2,±3")


@pytest.fixture
def c18():
    return parse_spec(18, "±2,±3,±4,±8")


@pytest.fixture
def q3():
    return named_graph("q3")


@pytest.fixture
def icosahedron():
    return named_graph("icosahedron")


@pytest.fixture
def envelope():
    return named_graph("envelope")


@pytest.fixture
def crown4():
    return crown_graph(4)
