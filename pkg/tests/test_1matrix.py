"""
Tests fields, sparse columns and the persistence reduction.
"""
import numpy as np
import pytest

from bigradedpd.complex.bifiltration import OneFiltration
from bigradedpd.complex.generate import random_complex, random_order
from bigradedpd.complex.simplicial import SimplicialComplex
from bigradedpd.exc import FieldError, InvariantViolation
from bigradedpd.matrix import GF2, ImplicitCell, PrimeField, SparseColumn, \
    add_implicit_cells, boundary_matrix, coerce_field, persistence_diagram_1d, reduce
from bigradedpd.oracle import diagram_1d


@pytest.mark.parametrize("p", [0, 1, 4, 9])
def test_field_rejects_composites(p):
    with pytest.raises(FieldError):
        PrimeField(p)


def test_field_arithmetic():
    f = PrimeField(7)
    assert f.inv(3) == 5
    assert f.div(1, 5) == 3
    assert f.neg(2) == 5
    assert f.element(-1) == 6
    with pytest.raises(FieldError):
        f.inv(0)
    assert coerce_field(3) == PrimeField(3)
    assert coerce_field(GF2) is GF2


def test_sparse_column_add():
    a = SparseColumn(GF2, {1: 1, 2: 1})
    ops = a.add_scaled(SparseColumn(GF2, {2: 1, 3: 1}), 1)
    assert ops == 2
    assert a.as_dict() == {1: 1, 3: 1}
    assert a.low({1: 0, 2: 1, 3: 2}) == 3


def test_sparse_column_mod_p():
    f = PrimeField(3)
    a = SparseColumn(f, {0: 2, 1: 1})
    a.add_scaled(SparseColumn(f, {0: 1, 1: 1}), 1)
    # 2 + 1 vanishes mod 3
    assert a.as_dict() == {1: 2}
    assert a.scaled(2).as_dict() == {1: 1}
    # no zero entries are stored
    assert SparseColumn(f, {0: 3}).as_dict() == {}


def test_boundary_signs(triangle):
    d = boundary_matrix(OneFiltration.from_ids(triangle, triangle.ids), 3)
    # (0, 1, 2) -> (1, 2) - (0, 2) + (0, 1)
    assert d.columns[6].as_dict() == {5: 1, 4: 2, 3: 1}


def test_reduce_edge(edge_filtration: OneFiltration):
    rv = reduce(boundary_matrix(edge_filtration))
    assert rv.pairs() == [(1, 2)]
    assert rv.unpaired() == [0]
    assert rv.partner(2) == 1
    assert rv.partner(1) == 2
    assert rv.partner(0) is None
    assert rv.is_positive(0) and not rv.is_positive(2)
    rv.verify()


def test_implicit_cells(circle: SimplicialComplex, triangle: SimplicialComplex):
    rv = add_implicit_cells(reduce(boundary_matrix(OneFiltration.from_ids(circle, circle.ids))))
    assert rv.order[-2:] == [ImplicitCell(0), ImplicitCell(5)]
    assert rv.dims[ImplicitCell(5)] == 2
    assert rv.unpaired() == []
    # the cell over the loop is bounded by the loop itself
    assert rv.R[ImplicitCell(5)].as_dict() == {3: 1, 4: 1, 5: 1}
    assert rv.D[ImplicitCell(5)] == rv.R[ImplicitCell(5)]
    assert rv.R[ImplicitCell(0)].as_dict() == {0: 1}
    assert rv.partner(ImplicitCell(5)) == 5
    rv.verify()

    rv = add_implicit_cells(
        reduce(boundary_matrix(OneFiltration.from_ids(triangle, triangle.ids))))
    assert rv.order[-1] == ImplicitCell(0)
    assert len(rv.order) == len(triangle) + 1


def test_verify_catches_corruption(edge_filtration: OneFiltration):
    rv = reduce(boundary_matrix(edge_filtration))
    rv.R[2] = SparseColumn(GF2, {0: 1})
    with pytest.raises(InvariantViolation):
        rv.verify()


def test_verify_catches_negative_low(circle: SimplicialComplex):
    rv = add_implicit_cells(reduce(boundary_matrix(OneFiltration.from_ids(circle, circle.ids))))
    # a unit column would leave the cell on the edge 4 once that edge kills a class
    cell = ImplicitCell(5)
    rv.D[cell] = SparseColumn(GF2, {4: 1})
    rv.R[cell] = SparseColumn(GF2, {4: 1})
    del rv.pivots[5]
    rv.pivots[4] = cell
    with pytest.raises(InvariantViolation, match="negative"):
        rv.verify()


@pytest.mark.parametrize("field", [2, 3])
def test_diagram_1d_matches_oracle(field):
    rng = np.random.default_rng(2018 + field)
    for _ in range(12):
        complex_ = random_complex(rng, vertices=int(rng.integers(2, 6)), edge_probability=0.6)
        f = random_order(rng, complex_)
        dgm = persistence_diagram_1d(f, field)
        for d in range(complex_.dimension + 1):
            assert dgm.for_dimension(d) == diagram_1d(f, d, field)


def test_diagram_1d_counts(circle: SimplicialComplex):
    f = OneFiltration.from_ids(circle, circle.ids)
    dgm = persistence_diagram_1d(f)
    # three vertices: one essential class, two killed by edges; the last edge closes the loop
    assert dgm.for_dimension(0).items() == [((1, 6), 1), ((2, 4), 1), ((3, 5), 1)]
    assert dgm.for_dimension(1).items() == [((6, 6), 1)]
