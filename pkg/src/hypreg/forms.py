"""Differential 1-forms: rational forms, the normalized holomorphic basis
with its period matrix, and the real-harmonic dual basis.

Rational forms are pairs (a, b) of rational functions of x representing
a(x) dx + b(x) dx/y.  Harmonic forms are translation-invariant and stored
as coefficient vectors against (dz_1..dz_g, conj dz_1..conj dz_g).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npoly

from .curve import HyperellipticCurve
from .errors import SingularPeriodMatrix, SingularSystem


def _ratval(num, den, x):
    v = npoly.polyval(x, num)
    if den is not None and len(den) > 1 or (den is not None and den[0] != 1.0):
        v = v / npoly.polyval(x, den)
    return v


@dataclass
class RationalForm:
    """a(x) dx + b(x) dx/y with rational a, b given by coefficient arrays."""

    a_num: np.ndarray = field(default_factory=lambda: np.zeros(1, dtype=complex))
    a_den: np.ndarray | None = None
    b_num: np.ndarray = field(default_factory=lambda: np.zeros(1, dtype=complex))
    b_den: np.ndarray | None = None
    label: str = ""

    def pullback(self, x, y, dxds):
        out = np.zeros_like(np.asarray(x), dtype=complex)
        if np.any(self.a_num):
            out = out + _ratval(self.a_num, self.a_den, x)
        if np.any(self.b_num):
            out = out + _ratval(self.b_num, self.b_den, x) / y
        return out * dxds

    def poles(self):
        ps = []
        for den in (self.a_den, self.b_den):
            if den is not None and len(np.trim_zeros(np.asarray(den), "b")) > 1:
                ps.extend(npoly.polyroots(np.asarray(den, dtype=complex)))
        return np.asarray(ps, dtype=complex)


def monomial_form(k: int) -> RationalForm:
    """x^k dx / y."""
    b = np.zeros(k + 1, dtype=complex)
    b[k] = 1.0
    return RationalForm(b_num=b, label=f"x^{k} dx/y")


def holomorphic_basis(curve: HyperellipticCurve):
    """The standard basis x^(i-1) dx/y, i = 1..g (holomorphic also at infinity)."""
    return [monomial_form(i) for i in range(curve.genus)]


def dlog_h(curve: HyperellipticCurve) -> RationalForm:
    """d(log h) = (1/(x - e_q1) - 1/(x - e_q2)) dx; lam drops out."""
    a, b = curve.e_q1, curve.e_q2
    num = np.array([a - b], dtype=complex)
    den = npoly.polyfromroots([a, b]).astype(complex)
    return RationalForm(a_num=num, a_den=den, label="dh/h")


def exact_form(num, den=None) -> RationalForm:
    """dR for a rational function R(x) = num/den (den=None means 1)."""
    num = np.asarray(num, dtype=complex)
    if den is None:
        return RationalForm(a_num=npoly.polyder(num), label="dR")
    den = np.asarray(den, dtype=complex)
    dnum = npoly.polysub(
        npoly.polymul(npoly.polyder(num), den), npoly.polymul(num, npoly.polyder(den))
    )
    return RationalForm(a_num=dnum, a_den=npoly.polymul(den, den), label="dR")


def exact_odd_form(curve: HyperellipticCurve, s_coeffs) -> RationalForm:
    """d(y S(x)) = (S' f + S f'/2) dx / y for a polynomial S."""
    s = np.asarray(s_coeffs, dtype=complex)
    f = curve.f_coeffs
    b = npoly.polyadd(
        npoly.polymul(npoly.polyder(s), f),
        0.5 * npoly.polymul(s, npoly.polyder(f)),
    )
    return RationalForm(b_num=b, label="d(yS)")


def rational_primitive_value(num, den, x):
    return _ratval(np.asarray(num, dtype=complex), den, x)


class NormalizedBasis:
    """Holomorphic basis dz_i with unit A-periods and period matrix Z.

    dz_i = sum_k N[i, k] x^k dx/y, with int_{A_i} dz_j = delta_ij and
    Z[i, j] = int_{A_{g+i}} dz_j.
    """

    def __init__(self, curve, loops, N, Z, raw_a, raw_b):
        self.curve = curve
        self.loops = loops
        self.N = N
        self.Z = Z
        self.raw_a_periods = raw_a
        self.raw_b_periods = raw_b

    @property
    def genus(self):
        return self.curve.genus

    def period_rows(self):
        """P[l, i] = int_{A_l} dz_i for l = 1..2g (identity stacked on Z)."""
        g = self.genus
        return np.vstack([np.eye(g, dtype=complex), self.Z])

    def dz_pullback(self, x, y, dxds):
        """(g, n) array of the pullbacks of dz_i at path samples."""
        x = np.asarray(x)
        pows = np.vstack([x**k for k in range(self.genus)])
        return (self.N @ pows) * (dxds / y)[None, :]

    def dz_forms(self):
        return [
            RationalForm(b_num=self.N[i].copy(), label=f"dz_{i + 1}")
            for i in range(self.genus)
        ]

    def zeta_arc(self, cut, t):
        """dz pullback densities along a lifted cut half at parameters t."""
        t = np.asarray(t, dtype=float)
        x = self.curve.arc_x(t)
        y = cut.y_of_t(t)
        dx = self.curve.arc_dx(t)
        pows = np.vstack([x**k for k in range(self.genus)])
        return (self.N @ pows) * (dx / y)[None, :]


@dataclass
class HarmonicForm:
    """hol . dz + antihol . conj(dz) as coefficient vectors."""

    basis: NormalizedBasis
    hol: np.ndarray
    antihol: np.ndarray
    label: str = ""

    def pullback(self, x, y, dxds):
        zeta = self.basis.dz_pullback(x, y, dxds)
        return self.hol @ zeta + self.antihol @ np.conj(zeta)

    def poles(self):
        return np.asarray([], dtype=complex)


def normalize(curve, loops, integrator, order=24) -> NormalizedBasis:
    """Invert the A-period matrix of the standard basis.

    ``integrator(form, path)`` must return the line integral of a rational
    form over a lifted path at the requested order.
    """
    g = curve.genus
    omega = holomorphic_basis(curve)
    raw_a = np.array(
        [[integrator(omega[j], loops.loops[i]) for j in range(g)] for i in range(g)]
    )
    cond = np.linalg.cond(raw_a)
    if not np.isfinite(cond) or cond > curve.tol.condition:
        raise SingularPeriodMatrix(f"A-period matrix condition {cond:.3e}")
    N = np.linalg.inv(raw_a.T)  # dz_i = sum_k N[i,k] omega_k
    raw_b = np.array(
        [
            [integrator(omega[j], loops.loops[g + i]) for j in range(g)]
            for i in range(g)
        ]
    )
    Z = raw_b @ N.T
    return NormalizedBasis(curve, loops, N, Z, raw_a, raw_b)


def harmonic_duals(basis: NormalizedBasis):
    """The 2g real-harmonic forms dual to the loop basis.

    Solves int_{A_m} dx_l = delta_lm over the span of dz_i and conj(dz_i);
    the consistency identity dz_i = dx_i + sum_j Z_ij dx_{g+j} then holds
    exactly at the level of coefficient vectors.
    """
    g = basis.genus
    P = basis.period_rows()
    M = np.hstack([P, np.conj(P)])
    cond = np.linalg.cond(M)
    if not np.isfinite(cond) or cond > basis.curve.tol.condition:
        raise SingularSystem(f"dual-basis system condition {cond:.3e}")
    C = np.linalg.solve(M, np.eye(2 * g, dtype=complex))
    forms = []
    for l in range(2 * g):
        forms.append(
            HarmonicForm(
                basis=basis,
                hol=C[:g, l].copy(),
                antihol=C[g:, l].copy(),
                label=f"dx_{l + 1}",
            )
        )
    return forms


def harmonic_from_dz(basis: NormalizedBasis, i: int) -> HarmonicForm:
    hol = np.zeros(basis.genus, dtype=complex)
    hol[i] = 1.0
    return HarmonicForm(basis=basis, hol=hol, antihol=np.zeros_like(hol), label=f"dz_{i + 1}")
