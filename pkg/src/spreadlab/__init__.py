"""Finite-truncation workbench for distributional symmetries of quantum
stochastic processes: exact monoid combinatorics on integer indices and
operator models (monotone, q-deformed, Boolean, fermionic chain) together
with a seeded invariance-check harness."""

__version__ = "0.1.0"
