"""
py.test configuration
"""
import numpy as np
import pytest

from bigradedpd.complex.bifiltration import Bifiltration, OneFiltration
from bigradedpd.complex.generate import random_bifiltration, random_degenerate_bifiltration
from bigradedpd.complex.simplicial import SimplicialComplex, clique_complex, full_simplex

#: the oracle is quartic in the grid size
ORACLE_N = 8


def _small(instances, limit=ORACLE_N):
    return [b for b in instances if b.n <= limit]


@pytest.fixture(scope="module")
def triangle() -> SimplicialComplex:
    return full_simplex(2)


@pytest.fixture(scope="module")
def circle() -> SimplicialComplex:
    """
    Three vertices and three edges, no face.
    """
    return clique_complex(range(3), [(0, 1), (1, 2), (0, 2)], max_dim=1)


@pytest.fixture(scope="module")
def edge_filtration() -> OneFiltration:
    """
    ``u, v, uv``.
    """
    complex_ = clique_complex(range(2), [(0, 1)], max_dim=1)
    return OneFiltration.from_ids(complex_, [0, 1, 2])


@pytest.fixture(scope="module")
def merge_square_h0():
    """
    H0 of ``merge_square``; the top grade is (4, 4).
    """
    return {
        ((1, 2), (4, 4)): 1,
        ((2, 1), (4, 4)): 1,
        ((2, 2), (4, 4)): -1,
        ((2, 2), (3, 3)): 1,
        ((4, 4), (4, 4)): 1,
    }


@pytest.fixture(scope="module")
def merge_square() -> Bifiltration:
    """
    Vertices at (1, 2) and (2, 1) joined by an edge at (3, 3), and a lone vertex at (4, 4).
    """
    complex_ = clique_complex(range(3), [(0, 1)], max_dim=1)
    return Bifiltration(complex_, {0: [(1, 2)], 1: [(2, 1)], 2: [(4, 4)], 3: [(3, 3)]}, 4)


@pytest.fixture(scope="module")
def four_cycle() -> Bifiltration:
    """
    A square loop whose four edges all enter above every vertex; the loop exists only at the
    top grade (8, 8).
    """
    complex_ = clique_complex(range(4), [(0, 1), (1, 2), (2, 3), (0, 3)], max_dim=1)
    return Bifiltration(complex_, {0: [(1, 4)], 1: [(4, 2)], 2: [(3, 3)], 3: [(2, 1)],
                                   4: [(5, 6)], 5: [(8, 5)], 6: [(6, 7)], 7: [(7, 8)]}, 8)


@pytest.fixture(scope="module")
def shared_corners() -> Bifiltration:
    """
    Degenerate: both vertices enter in column 1, the second and the edge share row 2.
    """
    complex_ = clique_complex(range(2), [(0, 1)], max_dim=1)
    return Bifiltration(complex_, {0: [(1, 1)], 1: [(1, 2)], 2: [(2, 2)]}, 2)


@pytest.fixture(scope="module")
def random_instances():
    rng = np.random.default_rng(20180611)
    instances = [random_bifiltration(rng, vertices=int(rng.integers(2, 5)),
                                     edge_probability=0.6) for _ in range(24)]
    return _small(instances)


@pytest.fixture(scope="module")
def multi_critical_instances():
    rng = np.random.default_rng(4096)
    instances = [random_bifiltration(rng, vertices=3, edge_probability=0.7,
                                     multi_critical=True, max_corners=2) for _ in range(24)]
    return _small(instances)


@pytest.fixture(scope="module")
def degenerate_instances():
    rng = np.random.default_rng(77)
    return [random_degenerate_bifiltration(rng, vertices=3, edge_probability=0.7, n=4)
            for _ in range(8)]
