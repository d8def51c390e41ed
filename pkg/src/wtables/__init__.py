"""Exact tableau combinatorics classifying the finite-dimensional irreducible
modules of finite W-algebras attached to standard-Levi special nilpotent
orbits in types B and C."""

__version__ = "0.1.0"
