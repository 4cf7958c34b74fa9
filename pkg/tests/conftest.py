import numpy as np
import pytest

from signednet import build_graph


@pytest.fixture
def triangle_positive():
    return build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)])


@pytest.fixture
def triangle_negative():
    return build_graph(3, [(0, 1, -1.0), (1, 2, -1.0), (0, 2, -1.0)])


@pytest.fixture
def triangle_one_negative():
    # two positive edges: antibalanced, not balanced
    return build_graph(3, [(0, 1, 1.0), (0, 2, 1.0), (1, 2, -1.0)])


@pytest.fixture
def triangle_two_negative():
    # balanced with certificate (+, -, -)
    return build_graph(3, [(0, 1, -1.0), (0, 2, -1.0), (1, 2, 1.0)])


@pytest.fixture
def dyad_negative():
    return build_graph(2, [(0, 1, -1.0)])


@pytest.fixture
def strictly_unbalanced_4():
    """Triangle {0,1,2} all positive plus node 3 attached by one positive and
    one negative edge: the 4-cycle-free counterexample to both structures."""
    return build_graph(4, [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0), (1, 3, 1.0), (2, 3, -1.0)])


@pytest.fixture
def four_cycle_positive():
    return build_graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (0, 3, 1.0)])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
