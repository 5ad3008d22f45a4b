"""The reference genus-2 configuration used throughout the test suite.

Curve y^2 = x(x-1)(x-2)(x-3)(x-4) with q1 over x=0, q2 over x=4, base
point p over x=2 and lam = -i.  The branch cut of log h is then the lower
half of the circle |x - 2| = 2, clearing the unmarked branch points by 1.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import polynomial as npoly

from .curve import HyperellipticCurve, Tolerances, make_curve

REFERENCE_CONFIG = {
    "f_coeffs": [[0.0, 0.0], [24.0, 0.0], [-50.0, 0.0], [35.0, 0.0], [-10.0, 0.0], [1.0, 0.0]],
    "q1_index": 0,
    "q2_index": 4,
    "p_index": 2,
    "lambda": [0.0, -1.0],
}


def reference_curve(tol: Tolerances | None = None) -> HyperellipticCurve:
    c = np.array([complex(re, im) for re, im in REFERENCE_CONFIG["f_coeffs"]])
    lam = complex(*REFERENCE_CONFIG["lambda"])
    return make_curve(
        c,
        REFERENCE_CONFIG["q1_index"],
        REFERENCE_CONFIG["q2_index"],
        REFERENCE_CONFIG["p_index"],
        lam,
        tol=tol,
    )


def genus1_curve(tol: Tolerances | None = None) -> HyperellipticCurve:
    """y^2 = x^3 - x with q1 over -1, q2 over 1, p over 0."""
    c = npoly.polyfromroots([-1.0, 0.0, 1.0])
    return make_curve(c, 0, 2, 1, complex(0.0, -1.0), tol=tol)
