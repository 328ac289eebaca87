"""Noncommutative A-ideals of knots in the quantum plane."""

from .coefficients import T, TPoly, TRat
from .quantum_torus import QTElement, Shift, clear_to_plane, e, qt_mul, qt_theta
from .quantum_plane import GroebnerBasis, PlanePoly, buchberger, reduce, saturate_monomials

__all__ = [
    "T",
    "TPoly",
    "TRat",
    "QTElement",
    "Shift",
    "clear_to_plane",
    "e",
    "qt_mul",
    "qt_theta",
    "GroebnerBasis",
    "PlanePoly",
    "buchberger",
    "reduce",
    "saturate_monomials",
]

__version__ = "0.1.0"
