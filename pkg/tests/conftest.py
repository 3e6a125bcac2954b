"""
Shared fixtures for the Network Dictionary Toolkit test suite
"""

import os
import sys

import numpy as np
import pytest

# Add parent directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Tests never write log files
os.environ["NDL_LOG_DIR"] = ""

from core.classes.network import Network  # noqa: E402


def cycle(n: int) -> Network:
    return Network.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Network:
    return Network.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Network:
    return Network.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Network:
    """Node 0 is the center"""
    return Network.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def bowtie() -> Network:
    """Two triangles sharing node 0"""
    return Network.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


@pytest.fixture
def rng():
    return np.random.Generator(np.random.Philox(12345))
