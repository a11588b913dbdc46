"""
Tests vineyard transpositions of reduced decompositions.
"""
import numpy as np
import pytest

from bigradedpd.complex import OneFiltration, random_order
from bigradedpd.complex.generate import random_complex
from bigradedpd.exc import TranspositionError
from bigradedpd.matrix import ImplicitCell, RVDecomposition, add_implicit_cells, boundary_matrix, \
    reduce
from bigradedpd.vineyard import NEGATIVE_POSITIVE, POSITIVE_POSITIVE, crossing_violations, \
    nested_or_disjoint, scrub_crossings, transpose


def _scrubbed(f: OneFiltration, field=2) -> RVDecomposition:
    rv = reduce(boundary_matrix(f, field))
    for key in rv.order:
        scrub_crossings(rv, key)
    return rv


def _pairs(rv: RVDecomposition):
    return set(rv.pairs())


def test_nested_or_disjoint():
    assert nested_or_disjoint((0, 5), (1, 3))
    assert nested_or_disjoint((0, 1), (2, 3))
    assert not nested_or_disjoint((0, 2), (1, 3))


def test_transpose_switches_vertices(edge_filtration: OneFiltration):
    rv = reduce(boundary_matrix(edge_filtration))
    outcome = transpose(rv, 0)
    assert outcome.case == POSITIVE_POSITIVE
    assert outcome.case_number == 1
    assert outcome.first == 0 and outcome.second == 1
    assert outcome.partners_before == (None, 2)
    assert outcome.partners_after == (2, None)
    assert outcome.switched
    assert rv.order == [1, 0, 2]
    rv.verify()


def test_transpose_rejects_faces(edge_filtration: OneFiltration):
    rv = reduce(boundary_matrix(edge_filtration))
    with pytest.raises(TranspositionError):
        transpose(rv, 1)
    with pytest.raises(TranspositionError):
        transpose(rv, 2)
    add_implicit_cells(rv)
    with pytest.raises(TranspositionError):
        transpose(rv, 2)


@pytest.mark.parametrize("field", [2, 3])
def test_random_transpositions(field):
    rng = np.random.default_rng(90 + field)
    for _ in range(8):
        complex_ = random_complex(rng, vertices=int(rng.integers(3, 6)), edge_probability=0.7)
        f = random_order(rng, complex_)
        rv = _scrubbed(f, field)
        assert crossing_violations(rv) == []
        for _ in range(40):
            k = int(rng.integers(len(rv.order) - 1))
            if rv.D[rv.order[k + 1]][rv.order[k]]:
                continue
            transpose(rv, k)
            rv.verify()
            assert crossing_violations(rv) == []
            fresh = reduce(boundary_matrix(OneFiltration.from_ids(complex_, rv.order), field))
            assert _pairs(rv) == _pairs(fresh)


def test_transposition_counter(triangle):
    rv = reduce(boundary_matrix(OneFiltration.from_ids(triangle, triangle.ids)))
    transpose(rv, 3)
    transpose(rv, 4)
    assert rv.counters["transpositions"] == 2
    assert rv.order == [0, 1, 2, 4, 5, 3, 6]


def test_essential_class_changes_hands(circle):
    rv = add_implicit_cells(reduce(boundary_matrix(OneFiltration.from_ids(circle, circle.ids))))
    # edge 4 kills vertex 2, edge 5 closes the loop; swapping them moves the loop to edge 4
    outcome = transpose(rv, 4)
    assert outcome.case == NEGATIVE_POSITIVE
    assert outcome.switched
    assert outcome.partners_before == (2, ImplicitCell(5))
    assert outcome.partners_after == (ImplicitCell(5), 2)
    rv.verify()
    assert crossing_violations(rv) == []

    fresh = reduce(boundary_matrix(OneFiltration.from_ids(circle, [0, 1, 2, 3, 5, 4])))
    assert fresh.unpaired() == [0, 4]
    assert _pairs(rv) == _pairs(fresh) | {(0, ImplicitCell(0)), (4, ImplicitCell(5))}


def _real_count(rv: RVDecomposition) -> int:
    return sum(1 for key in rv.order if not isinstance(key, ImplicitCell))


def _movable(rv: RVDecomposition, rng) -> int:
    while True:
        k = int(rng.integers(_real_count(rv) - 1))
        if not rv.D[rv.order[k + 1]][rv.order[k]]:
            return k


def _spans(rv: RVDecomposition, *keys):
    spans = []
    for key in keys:
        partner = rv.partner(key)
        end = len(rv.order) if partner is None else rv.position[partner]
        spans.append(tuple(sorted((rv.position[key], end))))
    return spans


@pytest.mark.parametrize("field", [2, 3, 5])
def test_transpositions_with_essential_classes(field):
    rng = np.random.default_rng(60 + field)
    switches = 0
    for _ in range(10):
        complex_ = random_complex(rng, vertices=int(rng.integers(3, 6)), edge_probability=0.7)
        rv = add_implicit_cells(_scrubbed(random_order(rng, complex_), field))
        for _ in range(60):
            k = _movable(rv, rng)
            tau, sigma = rv.order[k], rv.order[k + 1]
            before = _spans(rv, tau, sigma)
            outcome = transpose(rv, k)
            if outcome.switched:
                switches += 1
                assert nested_or_disjoint(*before)
                assert nested_or_disjoint(*_spans(rv, tau, sigma))
            rv.verify()
            assert crossing_violations(rv) == []
            assert rv.unpaired() == []

            real = [key for key in rv.order if not isinstance(key, ImplicitCell)]
            fresh = reduce(boundary_matrix(OneFiltration.from_ids(complex_, real), field))
            essential = {(rv.partner(cell), cell) for cell in rv.order
                         if isinstance(cell, ImplicitCell)}
            assert {positive for positive, _ in essential} == set(fresh.unpaired())
            assert _pairs(rv) == _pairs(fresh) | essential
    assert switches


def test_transposition_cost():
    rng = np.random.default_rng(12)
    for _ in range(6):
        complex_ = random_complex(rng, vertices=5, edge_probability=0.7)
        rv = add_implicit_cells(_scrubbed(random_order(rng, complex_), 3))
        size = len(rv.order)
        for _ in range(40):
            before = rv.counters.copy()
            transpose(rv, _movable(rv, rng))
            spent = rv.counters - before
            # one addition to keep V triangular, at most one more to restore unique lows
            assert spent["column_additions"] - spent["crossing_fixes"] <= 2
            assert spent["field_ops"] <= 2 * size * spent["column_additions"]
