import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from rtspanner import build_graph


@pytest.fixture
def triangle():
    """Unit-weight directed triangle 0 -> 1 -> 2 -> 0."""
    return build_graph(3, [(0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)])


@pytest.fixture
def two_cycle():
    """0 -> 1 (w=2), 1 -> 0 (w=3)."""
    return build_graph(2, [(0, 1, 2.0), (1, 0, 3.0)])


@pytest.fixture
def disjoint_two_cycles():
    return build_graph(4, [(0, 1, 1.0), (1, 0, 1.0), (2, 3, 1.0), (3, 2, 1.0)])
