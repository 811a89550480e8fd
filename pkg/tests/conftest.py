from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from aca.graph import Graph


@pytest.fixture
def two_triangles_bridge() -> Graph:
    """Triangles {0,1,2} and {3,4,5} joined by the bridge (2,3)."""
    return Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])


@pytest.fixture
def ring_of_cliques() -> Graph:
    """Four triangles chained into a ring through single bridges."""
    edges = []
    for c in range(4):
        base = 3 * c
        edges += [(base, base + 1), (base, base + 2), (base + 1, base + 2)]
    edges += [(2, 3), (5, 6), (8, 9), (11, 0)]
    return Graph(12, edges)


@pytest.fixture
def two_cliques_bridge() -> Graph:
    """Two 5-cliques joined by the bridge (4,5)."""
    edges = []
    for base in (0, 5):
        for i in range(5):
            for j in range(i + 1, 5):
                edges.append((base + i, base + j))
    edges.append((4, 5))
    return Graph(10, edges)


def make_er(rng: np.random.Generator, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)
