"""Exact verification of PBW deformations of S(V)#S_n for doubled permutation
and doubled standard representations."""

__version__ = "0.1.0"
