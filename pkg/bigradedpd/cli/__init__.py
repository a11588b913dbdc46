"""
Command line interface.

.. currentmodule:: bigradedpd.cli

.. autosummary::
    :toctree:

    tool
"""
