"""
Simplicial complexes, their bifiltrations, and the text format they are read from.

.. currentmodule:: bigradedpd.complex

.. autosummary::
    :toctree:

    simplicial
    bifiltration
    parser
    generate
"""
from bigradedpd.complex.bifiltration import AppearanceCurve, Bifiltration, OneFiltration, \
    Violation
from bigradedpd.complex.generate import diagonal_bifiltration, nested_bifiltration, \
    random_bifiltration, random_degenerate_bifiltration, random_order
from bigradedpd.complex.parser import load_bifiltration, parse_bifiltration, write_bifiltration
from bigradedpd.complex.simplicial import Simplex, SimplicialComplex, clique_complex, \
    full_simplex
