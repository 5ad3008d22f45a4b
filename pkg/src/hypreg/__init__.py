"""Numeric and symbolic toolkit for a canonical higher cycle on
hyperelliptic Jacobians: periods, iterated integrals, regulator values
via two independent formulas, and exact Johnson-homomorphism monodromy.
"""

from .curve import CurvePoint, HyperellipticCurve, Tolerances, continue_y, h_eval, involution, make_curve
from .paths import LiftedPath, LoopSystem, cut_halves, intersection, separating_loop, symplectic_basis
from .reference import reference_curve

__all__ = [
    "CurvePoint",
    "HyperellipticCurve",
    "Tolerances",
    "continue_y",
    "cut_halves",
    "h_eval",
    "intersection",
    "involution",
    "LiftedPath",
    "LoopSystem",
    "make_curve",
    "reference_curve",
    "separating_loop",
    "symplectic_basis",
]

__version__ = "0.1.0"
