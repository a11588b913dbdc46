"""
The sweep that computes the generalized persistence diagram of a bifiltration.

.. currentmodule:: bigradedpd.sweep

.. autosummary::
    :toctree:

    curves
    sweep
"""
from bigradedpd.sweep.curves import BirthCurve, EssentialCurve
from bigradedpd.sweep.sweep import Sweep, compute_diagram, sweep
