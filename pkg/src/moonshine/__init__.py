"""Exact q-series machinery for Hecke operators, Faber polynomials and
replicability of the Moonshine function J, with companion checks on
commuting pairs, supersingular primes and rooted trees."""

from .qseries import BiSeries, LaurentSeries, PrecisionError, SeriesError
from .modular import delta, eisenstein, j_invariant, moonshine_J
from .hecke import hecke, scaled_hecke
from .faber import faber_poly

__all__ = [
    "BiSeries",
    "LaurentSeries",
    "PrecisionError",
    "SeriesError",
    "delta",
    "eisenstein",
    "j_invariant",
    "moonshine_J",
    "hecke",
    "scaled_hecke",
    "faber_poly",
]
