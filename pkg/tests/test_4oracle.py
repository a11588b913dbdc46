"""
Tests the brute-force oracle: birth-death values, inversion, path identities and pushforwards.
"""
import numpy as np
import pytest

from bigradedpd.complex import Bifiltration
from bigradedpd.exc import CapExceededError
from bigradedpd.matrix import persistence_diagram_1d
from bigradedpd.oracle import BirthDeathOracle, birth_death_table, brute_diagram, diagram_1d, zb
from bigradedpd.poset import Grade, GridInterval, Path, path_galois, zeta_integrate


def _entries(diagram, dim):
    return {(tuple(iv.lower), tuple(iv.upper)): value
            for d, iv, value in diagram.items() if d == dim}


def _squares(n):
    """
    Every ``(d, h)`` with ``(1, 1) <= d <= h - (1, 1)``.
    """
    for di in range(1, n):
        for dj in range(1, n):
            for hi in range(di + 1, n + 1):
                for hj in range(dj + 1, n + 1):
                    yield Grade(di, dj), Grade(hi, hj)


@pytest.mark.parametrize("interval, expected", [
    (((2, 2), (3, 3)), 1),
    (((2, 2), (3, 4)), 1),
    (((1, 2), (3, 3)), 0),
    (((2, 2), (2, 2)), 0),
    # the top stands for the cycles themselves
    (((2, 2), (4, 4)), 2),
    (((4, 4), (4, 4)), 3),
])
def test_zb(merge_square: Bifiltration, interval, expected):
    lower, upper = interval
    assert zb(merge_square, 0, GridInterval(Grade(*lower), Grade(*upper))) == expected


def test_merge_square(merge_square: Bifiltration, merge_square_h0):
    diagram = brute_diagram(merge_square)
    assert _entries(diagram, 0) == merge_square_h0
    assert diagram.dimensions == [0]


def test_zeta_recovers_table(random_instances):
    for b in random_instances[:5]:
        diagram = brute_diagram(b)
        for d in range(b.complex.dimension + 1):
            assert zeta_integrate(diagram.for_dimension(d)) == birth_death_table(b, d)


def test_path_expressions(merge_square: Bifiltration, random_instances):
    for b in [merge_square] + random_instances[:4]:
        for d in range(b.complex.dimension + 1):
            oracle = BirthDeathOracle(b, d)
            for lower, upper in _squares(b.n):
                value = oracle.inversion(GridInterval(lower, upper))
                assert oracle.path_expressions(lower, upper) == [value] * 5


def test_product_formula(merge_square: Bifiltration, random_instances):
    for b in [merge_square] + random_instances[:4]:
        for d in range(b.complex.dimension + 1):
            oracle = BirthDeathOracle(b, d)
            for lower, upper in _squares(b.n):
                adeh, big_b, big_d = oracle.product_formula(lower, upper)
                value = oracle.inversion(GridInterval(lower, upper))
                assert adeh in (0, 1, 2)
                assert oracle.path_products_hold(lower, upper)
                assert -2 <= value <= 2
                if adeh == 0:
                    assert value == 0
                elif adeh == 1:
                    assert value == big_b * big_d


def test_path_pushforward(merge_square: Bifiltration, random_instances):
    rng = np.random.default_rng(6)
    for b in [merge_square] + random_instances[:4]:
        diagram = brute_diagram(b)
        for p in [Path.left_top(b.n), Path.bottom_right(b.n), Path.random(b.n, rng)]:
            f = b.restrict_to_path(p)
            pushed = diagram.pushforward(lambda a: path_galois(p, a), f.chain)
            assert pushed == persistence_diagram_1d(f)
            for d in range(b.complex.dimension + 1):
                assert pushed.for_dimension(d) == diagram_1d(f, d)


def test_refinement_pushforward(shared_corners: Bifiltration, degenerate_instances):
    small = [shared_corners] + degenerate_instances
    checked = 0
    for b in small:
        refined, refinement = b.refine_to_nondegenerate()
        if refined.n > 9:
            continue
        expected = brute_diagram(b)
        assert brute_diagram(refined).pushforward(refinement.ceiling, b.grid) == expected
        checked += 1
    assert checked


def test_shared_corners(shared_corners: Bifiltration):
    # the edge enters at the top, so the killed class reads like an essential one
    assert _entries(brute_diagram(shared_corners), 0) == {
        ((1, 1), (2, 2)): 1,
        ((1, 2), (2, 2)): 1,
    }


def test_cap(merge_square: Bifiltration):
    with pytest.raises(CapExceededError):
        brute_diagram(merge_square, cap=3)
    assert brute_diagram(merge_square, cap=4) == brute_diagram(merge_square)


def test_field_choice(circle):
    b = Bifiltration(circle, {0: [(1, 1)], 1: [(2, 2)], 2: [(3, 3)], 3: [(4, 4)], 4: [(5, 5)],
                              5: [(6, 6)]}, 6)
    for p in (2, 3, 5):
        assert _entries(brute_diagram(b, field=p), 1) == {((6, 6), (6, 6)): 1}
