"""Exact-arithmetic tools for n-homogeneous duals of path-algebra quotients,
the associated linear n-complexes, their contractions to 2-complexes, and
Koszulity-type checkers, all over a prime field."""

__version__ = "0.1.0"
