"""
Exact sparse linear algebra for persistence.

.. currentmodule:: bigradedpd.matrix

.. autosummary::
    :toctree:

    field
    sparse
    reduce
"""
from bigradedpd.matrix.field import GF2, PrimeField, coerce_field
from bigradedpd.matrix.reduce import BoundaryMatrix, ImplicitCell, RVDecomposition, \
    add_implicit_cells, boundary_matrix, persistence_diagram_1d, reduce
from bigradedpd.matrix.sparse import SparseColumn
