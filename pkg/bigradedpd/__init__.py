"""
Main package for bigradedpd - generalized persistence diagrams of bifiltrations.

.. currentmodule:: bigradedpd

.. autosummary::
    :toctree:

    poset
    complex
    matrix
    vineyard
    sweep
    oracle
    diagram
    plot

    exc
"""

__author__ = "Laura Dickinson"
__copyright__ = "Copyright (C) 2026 Laura Dickinson"

__licence__ = "MIT"
__status__ = "Development"

from pkg_resources import DistributionNotFound, get_distribution

try:
    __version__ = get_distribution("bigraded-pd").version
except DistributionNotFound:
    # package is not installed
    pass

from bigradedpd.complex import AppearanceCurve, Bifiltration, OneFiltration, Simplex, \
    SimplicialComplex, load_bifiltration, parse_bifiltration, write_bifiltration
from bigradedpd.diagram import SignedDiagram
from bigradedpd.exc import *
from bigradedpd.matrix import PrimeField, RVDecomposition, boundary_matrix, reduce
from bigradedpd.oracle import brute_diagram, diagram_1d, zb
from bigradedpd.poset import Grade, Grid, GridInterval, IntervalFunction, Path, mobius_invert, \
    zeta_integrate
from bigradedpd.sweep import Sweep, compute_diagram, sweep
from bigradedpd.vineyard import transpose
