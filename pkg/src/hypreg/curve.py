"""Hyperelliptic curve model: y^2 = f(x) with marked Weierstrass points.

A curve carries three marked finite Weierstrass points q1, q2, p and the
degree-2 map  h(x, y) = lam * (x - e_q1) / (x - e_q2)  which has a double
zero at q1 and a double pole at q2.  The locus where h is real and
nonnegative (the branch cut of log h) is a circular arc from e_q1 to e_q2
in the x-plane; it is parameterized here so that h(x(t)) = t / (1 - t).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import (
    ArcHitsBranchPoint,
    IndicesCollide,
    NotSquarefree,
    PathTooCloseToBranchPoint,
    SeedMismatch,
)

INF = complex(np.inf, 0.0)


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds used by validation and continuation."""

    geometric: float = 1e-6       # clearance of arcs/paths from branch points
    on_curve: float = 1e-10       # residual |y^2 - f(x)|, relative
    condition: float = 1e10       # condition number cap for period solves


@dataclass(frozen=True)
class CurvePoint:
    x: complex
    y: complex

    def __iter__(self):
        return iter((self.x, self.y))


@dataclass
class HyperellipticCurve:
    f_coeffs: np.ndarray          # ascending coefficients of f, squarefree
    genus: int
    branch_points: np.ndarray     # finite roots of f, sorted
    q1_index: int
    q2_index: int
    p_index: int
    lam: complex
    tol: Tolerances = field(default_factory=Tolerances)
    arc_clearance: float = 0.0    # min distance of the cut arc to unmarked roots

    # -- basic evaluations ------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.f_coeffs) - 1

    @property
    def e_q1(self) -> complex:
        return complex(self.branch_points[self.q1_index])

    @property
    def e_q2(self) -> complex:
        return complex(self.branch_points[self.q2_index])

    @property
    def e_p(self) -> complex:
        return complex(self.branch_points[self.p_index])

    @property
    def point_q1(self) -> CurvePoint:
        return CurvePoint(self.e_q1, 0.0)

    @property
    def point_q2(self) -> CurvePoint:
        return CurvePoint(self.e_q2, 0.0)

    @property
    def point_p(self) -> CurvePoint:
        return CurvePoint(self.e_p, 0.0)

    def f(self, x):
        return npoly.polyval(x, self.f_coeffs)

    def df(self, x):
        return npoly.polyval(x, npoly.polyder(self.f_coeffs))

    def h_of_x(self, x):
        return self.lam * (x - self.e_q1) / (x - self.e_q2)

    def log_h_p(self) -> complex:
        """log h at the base point p, with the argument taken in (0, 2pi)."""
        return _log_cut(self.h_of_x(self.e_p))

    def on_curve(self, point: CurvePoint) -> bool:
        scale = 1.0 + abs(self.f(point.x))
        return abs(point.y**2 - self.f(point.x)) <= self.tol.on_curve * scale

    def dist_to_branch(self, x) -> np.ndarray:
        """Distance from x (array) to the nearest finite branch point."""
        x = np.asarray(x, dtype=complex)
        d = np.abs(x[..., None] - self.branch_points[None, :])
        return d.min(axis=-1)

    # -- the branch cut arc of log h --------------------------------------
    #
    # Solving h(x) = s for s = t/(1-t) gives the rational parameterization
    # below; it is regular at both ends because the composite map is written
    # without forming s explicitly.

    def arc_x(self, t):
        t = np.asarray(t, dtype=float)
        a, b, lam = self.e_q1, self.e_q2, self.lam
        den = lam * (1.0 - t) - t
        return (a * lam * (1.0 - t) - t * b) / den

    def arc_dx(self, t):
        t = np.asarray(t, dtype=float)
        a, b, lam = self.e_q1, self.e_q2, self.lam
        den = lam * (1.0 - t) - t
        return lam * (a - b) / den**2

    def arc_circle(self):
        """Circumcircle (center, radius) through three arc samples.

        Returns None when the arc is a straight segment (real lam).
        """
        z1, z2, z3 = self.arc_x([0.0, 0.5, 1.0])
        cross = ((z2 - z1) * np.conj(z3 - z1)).imag
        if abs(cross) < 1e-12 * abs(z2 - z1) * abs(z3 - z1):
            return None
        A = np.array(
            [[(z2 - z1).real, (z2 - z1).imag], [(z3 - z1).real, (z3 - z1).imag]]
        )
        rhs = 0.5 * np.array([abs(z2) ** 2 - abs(z1) ** 2, abs(z3) ** 2 - abs(z1) ** 2])
        cx, cy = np.linalg.solve(A, rhs)
        c = complex(cx, cy)
        return c, abs(z1 - c)

    def unmarked_branch_points(self) -> np.ndarray:
        keep = [
            i
            for i in range(len(self.branch_points))
            if i not in (self.q1_index, self.q2_index)
        ]
        return self.branch_points[keep]


def _log_cut(w: complex) -> complex:
    """log with the argument continued into (0, 2pi); cut along [0, +inf)."""
    ang = np.angle(w) % (2.0 * np.pi)
    return np.log(abs(w)) + 1j * ang


def make_curve(
    f_coeffs,
    q1_index: int,
    q2_index: int,
    p_index: int,
    lam: complex,
    tol: Tolerances | None = None,
) -> HyperellipticCurve:
    """Validate the input data and build a curve.

    ``f_coeffs`` are ascending coefficients of a squarefree f of degree
    2g+1 or 2g+2.  The marked indices refer to finite roots of f sorted
    by (real, imag).
    """
    tol = tol or Tolerances()
    c = np.asarray(f_coeffs, dtype=complex)
    c = np.trim_zeros(c, "b")
    deg = len(c) - 1
    if deg < 3:
        raise NotSquarefree("degree of f must be at least 3")
    genus = (deg - 1) // 2

    roots = npoly.polyroots(c)
    order = np.lexsort((roots.imag.round(9), roots.real.round(9)))
    roots = roots[order]
    gaps = np.abs(roots[:, None] - roots[None, :]) + np.eye(deg) * 1e30
    if gaps.min() <= tol.geometric:
        raise NotSquarefree(f"double root detected, min gap {gaps.min():.3e}")

    n_finite = deg
    idx = (q1_index, q2_index, p_index)
    if len(set(idx)) != 3 or not all(0 <= i < n_finite for i in idx):
        raise IndicesCollide(f"marked indices {idx} invalid for {n_finite} finite roots")
    if abs(complex(lam)) == 0.0:
        raise IndicesCollide("lam must be nonzero")

    curve = HyperellipticCurve(
        f_coeffs=c,
        genus=genus,
        branch_points=roots,
        q1_index=q1_index,
        q2_index=q2_index,
        p_index=p_index,
        lam=complex(lam),
        tol=tol,
    )

    # arc clearance: 10^3 samples against every unmarked branch point
    t = np.linspace(0.0, 1.0, 1001)
    arc = curve.arc_x(t)
    if not np.all(np.isfinite(arc)):
        raise ArcHitsBranchPoint("cut arc passes through infinity (lam real positive?)")
    others = curve.unmarked_branch_points()
    if len(others):
        clearance = np.abs(arc[:, None] - others[None, :]).min()
    else:
        clearance = np.inf
    if clearance <= tol.geometric:
        raise ArcHitsBranchPoint(
            f"cut arc clearance {clearance:.3e} below tolerance; change lam"
        )
    curve.arc_clearance = float(clearance)
    return curve


def h_eval(curve: HyperellipticCurve, point: CurvePoint):
    """Evaluate h at a curve point; q2 maps to the infinity marker."""
    if not curve.on_curve(point):
        raise SeedMismatch(f"point {point} not on curve")
    if abs(point.x - curve.e_q2) <= curve.tol.geometric:
        return INF
    return curve.h_of_x(point.x)


def involution(point: CurvePoint) -> CurvePoint:
    return CurvePoint(point.x, -point.y)


def continue_y(
    curve: HyperellipticCurve,
    x_of_t,
    t_grid,
    y_start: complex,
    branch_sign: int = 1,
    max_depth: int = 48,
):
    """Continue a branch of sqrt(f) along a parameterized x-plane path.

    ``x_of_t`` is a callable on the (sorted) parameter grid.  The returned
    array of y values is aligned with ``t_grid``.  Interior samples must
    keep clear of the branch set; endpoints may sit exactly on it, in which
    case y = 0 there and ``branch_sign`` (+1 or -1, relative to the
    principal square root) selects the sheet on the first interior sample.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    x = np.asarray(x_of_t(t_grid), dtype=complex)
    n = len(t_grid)
    dist = curve.dist_to_branch(x)
    at_branch = dist <= curve.tol.geometric
    if np.any(at_branch[1:-1]):
        k = int(np.where(at_branch[1:-1])[0][0]) + 1
        raise PathTooCloseToBranchPoint(
            f"interior sample {k} at distance {dist[k]:.3e} from branch set"
        )

    w = np.sqrt(curve.f(x))  # principal branch at every sample
    y = np.empty(n, dtype=complex)

    if at_branch[0]:
        if abs(y_start) > curve.tol.geometric:
            raise SeedMismatch("path starts at a branch point but y_start != 0")
        y[0] = 0.0
        y[1] = branch_sign * w[1]
        start = 1
    else:
        scale = 1.0 + abs(curve.f(x[0]))
        if abs(y_start**2 - curve.f(x[0])) > 1e4 * curve.tol.on_curve * scale:
            raise SeedMismatch(
                f"seed residual {abs(y_start ** 2 - curve.f(x[0])):.3e} too large"
            )
        y[0] = y_start
        start = 0

    for k in range(start, n - 1):
        if at_branch[k + 1]:
            if k + 1 != n - 1:
                raise PathTooCloseToBranchPoint("interior branch point hit")
            y[k + 1] = 0.0
            break
        y[k + 1] = _step(curve, x_of_t, t_grid[k], y[k], t_grid[k + 1], w[k + 1], max_depth)
    return y


def _step(curve, x_of_t, t0, y0, t1, w1, depth):
    """Single nearest-branch continuation step with adaptive halving."""
    d_plus = abs(w1 - y0)
    d_minus = abs(-w1 - y0)
    near, far = min(d_plus, d_minus), max(d_plus, d_minus)
    if near < 0.5 * far:
        return w1 if d_plus <= d_minus else -w1
    if depth <= 0:
        raise PathTooCloseToBranchPoint(
            f"sheet ambiguity near t={t1:.6g} not resolved by step halving"
        )
    tm = 0.5 * (t0 + t1)
    xm = complex(x_of_t(np.asarray([tm]))[0])
    if curve.dist_to_branch(xm) <= curve.tol.geometric:
        raise PathTooCloseToBranchPoint(f"midpoint t={tm:.6g} on branch set")
    ym = _step(curve, x_of_t, t0, y0, tm, np.sqrt(curve.f(xm)), depth - 1)
    return _step(curve, x_of_t, tm, ym, t1, w1, depth - 1)
