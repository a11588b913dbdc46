"""
Grades, intervals, paths and the incidence algebra of the chain and the grid.

.. currentmodule:: bigradedpd.poset

.. autosummary::
    :toctree:

    grades
    mobius
    galois
"""
from bigradedpd.poset.galois import RefinementMap, is_galois_connection, path_galois, \
    pushforward, refinement_galois
from bigradedpd.poset.grades import STEP_X, STEP_Y, Chain, Grade, Grid, GridInterval, Path, \
    lex_key
from bigradedpd.poset.mobius import IntervalFunction, mobius_1d, mobius_2d, mobius_invert, \
    mobius_terms, zeta_integrate
