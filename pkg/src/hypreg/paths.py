"""Paths on the curve: x-plane segments, lifts, loop systems, intersections.

A path lives in the x-plane as a chain of parameterized segments; its lift
to the curve is fixed by a starting y value (or a sheet sign when the path
starts at a branch point).  Based loops at the marked point p are built as
tail + circle + reversed tail; the homology bookkeeping canonicalizes the
raw circle system to a standard symplectic basis by integer concatenation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .curve import HyperellipticCurve, continue_y
from .errors import (
    CannotAvoidMarkedPoints,
    DegenerateLoop,
    EvenSubset,
    NonTransverse,
    PathTooCloseToBranchPoint,
    SubsetNotSeparable,
)

_FINE = 33  # fine-trace points per panel, endpoints included


# ----------------------------------------------------------------------
# segments
# ----------------------------------------------------------------------


class LineSeg:
    """Straight segment z0 -> z1, s in [0, 1]."""

    def __init__(self, z0, z1):
        self.z0 = complex(z0)
        self.z1 = complex(z1)

    def x(self, s):
        s = np.asarray(s, dtype=float)
        return self.z0 + (self.z1 - self.z0) * s

    def dx(self, s):
        s = np.asarray(s, dtype=float)
        return np.full_like(s, self.z1 - self.z0, dtype=complex)

    def reversed(self):
        return LineSeg(self.z1, self.z0)

    @property
    def start(self):
        return self.z0

    @property
    def end(self):
        return self.z1

    def descriptor(self):
        return ("line", self.z0, self.z1)

    def __repr__(self):
        return f"LineSeg({self.z0:.4g}, {self.z1:.4g})"


class ArcSeg:
    """Circular arc around ``center``: theta0 -> theta1 (radians, signed)."""

    def __init__(self, center, radius, theta0, theta1):
        self.center = complex(center)
        self.radius = float(radius)
        self.theta0 = float(theta0)
        self.theta1 = float(theta1)

    def _theta(self, s):
        return self.theta0 + (self.theta1 - self.theta0) * np.asarray(s, dtype=float)

    def x(self, s):
        return self.center + self.radius * np.exp(1j * self._theta(s))

    def dx(self, s):
        dth = self.theta1 - self.theta0
        return 1j * dth * self.radius * np.exp(1j * self._theta(s))

    def reversed(self):
        return ArcSeg(self.center, self.radius, self.theta1, self.theta0)

    @property
    def start(self):
        return self.x(0.0) + 0j

    @property
    def end(self):
        return self.x(1.0) + 0j

    def descriptor(self):
        return ("circle", self.center, self.radius, self.theta0, self.theta1)

    def __repr__(self):
        return (
            f"ArcSeg(c={self.center:.4g}, r={self.radius:.4g}, "
            f"{self.theta0:.4g}->{self.theta1:.4g})"
        )


class CutArc:
    """Sub-range of the branch-cut arc of log h, h(x(t)) = t/(1-t)."""

    def __init__(self, curve: HyperellipticCurve, t0=0.0, t1=1.0):
        self.curve = curve
        self.t0 = float(t0)
        self.t1 = float(t1)

    def _t(self, s):
        return self.t0 + (self.t1 - self.t0) * np.asarray(s, dtype=float)

    def x(self, s):
        return self.curve.arc_x(self._t(s))

    def dx(self, s):
        return self.curve.arc_dx(self._t(s)) * (self.t1 - self.t0)

    def reversed(self):
        return CutArc(self.curve, self.t1, self.t0)

    @property
    def start(self):
        return complex(self.x(0.0))

    @property
    def end(self):
        return complex(self.x(1.0))

    def descriptor(self):
        circ = self.curve.arc_circle()
        if circ is None:
            return ("line", self.start, self.end)
        c, r = circ
        ts = np.linspace(0.0, 1.0, 33)
        ang = np.unwrap(np.angle(self.x(ts) - c))
        return ("circle", c, r, float(ang[0]), float(ang[-1]))

    def __repr__(self):
        return f"CutArc({self.t0:.4g}->{self.t1:.4g})"


# ----------------------------------------------------------------------
# lifted paths
# ----------------------------------------------------------------------


@dataclass
class Block:
    """Maximal run of segments lifted by one continuation sweep.

    ``y0`` is the y value at the block start; when the block starts at a
    branch point (y0 = 0) the sheet is fixed by ``branch_sign`` relative to
    the principal square root at the first interior sample.
    """

    segments: list
    y0: complex = 0.0
    branch_sign: int = 1


@dataclass
class PanelSpec:
    block: int
    seg: int
    a: float
    b: float
    sub_left: bool = False
    sub_right: bool = False


class LiftedPath:
    def __init__(self, curve: HyperellipticCurve, blocks, label=""):
        self.curve = curve
        self.blocks = list(blocks)
        self.label = label
        self._panels = None
        self._trace = None
        self._samples = {}

    # -- construction helpers ------------------------------------------

    @classmethod
    def from_segments(cls, curve, segments, y0=0.0, branch_sign=1, label=""):
        return cls(curve, [Block(list(segments), complex(y0), branch_sign)], label=label)

    def concat(self, other: "LiftedPath", label="") -> "LiftedPath":
        if abs(self.x_end - other.x_start) > 1e-9:
            raise ValueError("concatenated paths must share endpoints")
        return LiftedPath(self.curve, self.blocks + other.blocks, label=label)

    def reverse(self, label="") -> "LiftedPath":
        blocks = []
        for bi in range(len(self.blocks) - 1, -1, -1):
            blk = self.blocks[bi]
            segs = [s.reversed() for s in reversed(blk.segments)]
            y_end, end_sign = self._block_end_state(bi)
            blocks.append(Block(segs, y_end, end_sign))
        return LiftedPath(self.curve, blocks, label=label or self.label + "^-1")

    # -- geometry -------------------------------------------------------

    @property
    def segments(self):
        return [s for blk in self.blocks for s in blk.segments]

    @property
    def x_start(self):
        return self.blocks[0].segments[0].start

    @property
    def x_end(self):
        return self.blocks[-1].segments[-1].end

    @property
    def closed(self):
        return abs(self.x_end - self.x_start) < 1e-9

    def winding_numbers(self):
        """Winding of the x-projection around every finite branch point."""
        total = np.zeros(len(self.curve.branch_points))
        for seg in self.segments:
            s = np.linspace(0.0, 1.0, 257)
            z = seg.x(s)[:, None] - self.curve.branch_points[None, :]
            dang = np.diff(np.unwrap(np.angle(z), axis=0), axis=0).sum(axis=0)
            total += dang
        w = total / (2.0 * np.pi)
        wi = np.rint(w)
        if np.abs(w - wi).max() > 1e-6:
            raise PathTooCloseToBranchPoint(f"non-integer winding {w}")
        return wi.astype(int)

    # -- panels -----------------------------------------------------------

    def panels(self):
        if self._panels is None:
            specs = []
            for bi, blk in enumerate(self.blocks):
                for si, seg in enumerate(blk.segments):
                    specs.extend(self._subdivide(bi, si, seg))
            self._panels = specs
        return self._panels

    def _subdivide(self, bi, si, seg):
        curve = self.curve
        tol = curve.tol.geometric
        left_branch = curve.dist_to_branch(seg.start) <= tol
        right_branch = curve.dist_to_branch(seg.end) <= tol
        out = []
        stack = [(0.0, 1.0, 0)]
        while stack:
            a, b, depth = stack.pop()
            s = np.linspace(a, b, 9)
            pts = np.asarray(seg.x(s))
            length = np.abs(np.diff(pts)).sum()
            d = curve.dist_to_branch(pts)
            touches_left = left_branch and a == 0.0
            touches_right = right_branch and b == 1.0
            interior = d[1:-1]
            if touches_left or touches_right:
                # distance to branch points other than the endpoint one
                ref = pts[0] if touches_left else pts[-1]
                e = curve.branch_points[np.argmin(np.abs(curve.branch_points - ref))]
                others = curve.branch_points[np.abs(curve.branch_points - e) > tol]
                d_eff = (
                    np.abs(pts[:, None] - others[None, :]).min() if len(others) else np.inf
                )
                ratio = 0.7
            else:
                d_eff = min(d[0], d[-1], interior.min()) if len(interior) else d.min()
                if d_eff <= tol:
                    raise PathTooCloseToBranchPoint(
                        f"segment {seg!r} interior at distance {d_eff:.3e}"
                    )
                ratio = 1.0
            if length <= ratio * d_eff or depth >= 22 or length < 1e-13:
                out.append(
                    PanelSpec(
                        bi,
                        si,
                        a,
                        b,
                        sub_left=touches_left,
                        sub_right=touches_right,
                    )
                )
            else:
                m = 0.5 * (a + b)
                stack.append((m, b, depth + 1))
                stack.append((a, m, depth + 1))
        out.sort(key=lambda p: p.a)
        return out

    @staticmethod
    def _panel_map(spec: PanelSpec, sigma):
        """Map sigma in [-1,1] to (local s, ds/dsigma) with sqrt clustering."""
        sigma = np.asarray(sigma, dtype=float)
        a, b = spec.a, spec.b
        if spec.sub_left and spec.sub_right:
            # both ends singular: sin^2 flattening
            xi = np.sin(0.25 * np.pi * (sigma + 1.0)) ** 2
            dxi = 0.25 * np.pi * np.sin(0.5 * np.pi * (sigma + 1.0))
        elif spec.sub_left:
            u = 0.5 * (sigma + 1.0)
            xi = u * u
            dxi = u
        elif spec.sub_right:
            u = 0.5 * (1.0 - sigma)
            xi = 1.0 - u * u
            dxi = u
        else:
            xi = 0.5 * (sigma + 1.0)
            dxi = np.full_like(sigma, 0.5)
        return a + (b - a) * xi, (b - a) * dxi

    # -- sheet tracing ----------------------------------------------------

    def _block_panel_groups(self):
        groups = [[] for _ in self.blocks]
        for spec in self.panels():
            groups[spec.block].append(spec)
        return groups

    def _lift_block(self, bi, extra_params=()):
        """Continue y over the block on fine grids (+ extra parameter sets).

        Parameters are (seg_index, local_s); returns dict keyed by rounded
        parameter with y values, plus ordered fine trace arrays.
        """
        blk = self.blocks[bi]
        groups = self._block_panel_groups()[bi]
        params = []
        for spec in groups:
            s_fine, _ = self._panel_map(spec, np.cos(np.linspace(np.pi, 0.0, _FINE)))
            params.extend((spec.seg, s) for s in s_fine)
        params.extend(extra_params)
        params = sorted(set((int(k), round(float(s), 14)) for k, s in params))
        tau = np.array([k + s for k, s in params])
        keys = np.array([k for k, _ in params])
        locs = np.array([s for _, s in params])

        def x_of_tau(tv):
            tv = np.atleast_1d(np.asarray(tv, dtype=float))
            out = np.empty(len(tv), dtype=complex)
            idx = np.clip(np.floor(tv + 1e-12).astype(int), 0, len(blk.segments) - 1)
            for k in np.unique(idx):
                m = idx == k
                out[m] = blk.segments[k].x(tv[m] - k)
            return out

        y = continue_y(
            self.curve, x_of_tau, tau, blk.y0, branch_sign=blk.branch_sign
        )
        return keys, locs, tau, x_of_tau(tau), y

    def trace(self):
        """Dense (segment, s, x, y) trace over the whole path."""
        if self._trace is None:
            rows = []
            seg_offset = 0
            for bi, blk in enumerate(self.blocks):
                keys, locs, tau, x, y = self._lift_block(bi)
                rows.append(
                    (keys + seg_offset, locs, x, y)
                )
                seg_offset += len(blk.segments)
            self._trace = tuple(np.concatenate(cols) for cols in zip(*rows))
        return self._trace

    def _block_end_state(self, bi):
        """(y_end, end sheet sign) of one block, from its fine trace."""
        keys, locs, tau, x, y = self._lift_block(bi)
        y_end = y[-1]
        nz = np.nonzero(np.abs(y) > 1e3 * self.curve.tol.geometric)[0]
        if len(nz) == 0:
            return y_end, 1
        k = nz[-1]
        sign = 1 if abs(y[k] - np.sqrt(self.curve.f(x[k]))) < abs(
            y[k] + np.sqrt(self.curve.f(x[k]))
        ) else -1
        return y_end, sign

    @property
    def y_start(self):
        return self.blocks[0].y0

    @property
    def y_end(self):
        return self._block_end_state(len(self.blocks) - 1)[0]

    def y_at(self, seg_index, s):
        """Sheet-correct y at an arbitrary path position via the fine trace."""
        keys, locs, x, y = self.trace()
        pos = keys + locs
        i = int(np.argmin(np.abs(pos - (seg_index + s))))
        seg = self.segments[seg_index]
        xq = complex(seg.x(float(s)))
        w = np.sqrt(self.curve.f(xq))
        return w if abs(w - y[i]) <= abs(w + y[i]) else -w

    def samples(self, order):
        """Quadrature samples: per-panel GL nodes with lifted y values.

        Returns a dict of flat arrays (x, dxds, y, w) plus panel index
        offsets; dxds includes the panel map jacobian so that
        sum(w * g(x, y) * dxds) integrates g over the path.
        """
        if order in self._samples:
            return self._samples[order]
        nodes, weights = np.polynomial.legendre.leggauss(order)
        groups = self._block_panel_groups()
        xs, ds, ys, ws, offsets = [], [], [], [], [0]
        for bi, blk in enumerate(self.blocks):
            specs = groups[bi]
            extra = []
            per_panel = []
            for spec in specs:
                s_loc, dsd = self._panel_map(spec, nodes)
                per_panel.append((spec, s_loc, dsd))
                extra.extend((spec.seg, round(float(s), 14)) for s in s_loc)
            keys, locs, tau, xf, yf = self._lift_block(bi, extra_params=extra)
            lookup = {}
            for k, s, yv in zip(keys, locs, yf):
                lookup[(k, round(s, 14))] = yv
            for spec, s_loc, dsd in per_panel:
                seg = blk.segments[spec.seg]
                x = np.asarray(seg.x(s_loc))
                dx = np.asarray(seg.dx(s_loc)) * dsd
                y = np.array([lookup[(spec.seg, round(s, 14))] for s in s_loc])
                xs.append(x)
                ds.append(dx)
                ys.append(y)
                ws.append(weights.copy())
                offsets.append(offsets[-1] + order)
        out = {
            "x": np.concatenate(xs),
            "dxds": np.concatenate(ds),
            "y": np.concatenate(ys),
            "w": np.concatenate(ws),
            "offsets": np.array(offsets),
            "order": order,
        }
        self._samples[order] = out
        return out


# ----------------------------------------------------------------------
# crossing computations
# ----------------------------------------------------------------------


def _line_line(d1, d2):
    _, a0, a1 = d1
    _, b0, b1 = d2
    u, v = a1 - a0, b1 - b0
    det = u.real * (-v.imag) - u.imag * (-v.real)
    norm = abs(u) * abs(v)
    if abs(det) < 1e-12 * norm:
        # parallel: overlap only if collinear
        w = b0 - a0
        if abs(u.real * w.imag - u.imag * w.real) < 1e-10 * max(abs(u), 1.0):
            raise NonTransverse("collinear overlapping segments")
        return []
    w = b0 - a0
    s = (w.real * (-v.imag) - w.imag * (-v.real)) / det
    t = (u.real * w.imag - u.imag * w.real) / det
    return [(s, t)]

def _line_circle(d1, d2):
    _, a0, a1 = d1
    _, c, r, th0, th1 = d2
    u = a1 - a0
    w = a0 - c
    A = abs(u) ** 2
    B = 2.0 * (w.real * u.real + w.imag * u.imag)
    C = abs(w) ** 2 - r * r
    disc = B * B - 4.0 * A * C
    if disc <= 1e-14 * (A * r) ** 1.0:
        return []
    out = []
    for s in ((-B + np.sqrt(disc)) / (2 * A), (-B - np.sqrt(disc)) / (2 * A)):
        z = a0 + s * u
        t = _angle_param(np.angle(z - c), th0, th1)
        if t is not None:
            out.append((s, t))
    return out

def _circle_circle(d1, d2):
    _, c1, r1, a0, a1 = d1
    _, c2, r2, b0, b1 = d2
    dd = abs(c2 - c1)
    if dd < 1e-12:
        if abs(r1 - r2) < 1e-10:
            raise NonTransverse("identical supporting circles")
        return []
    if dd >= r1 + r2 - 1e-12 or dd <= abs(r1 - r2) + 1e-12:
        return []
    ex = (c2 - c1) / dd
    xx = (dd * dd - r2 * r2 + r1 * r1) / (2.0 * dd)
    yy = np.sqrt(max(r1 * r1 - xx * xx, 0.0))
    out = []
    for sgn in (1.0, -1.0):
        z = c1 + ex * (xx + 1j * sgn * yy)
        s = _angle_param(np.angle(z - c1), a0, a1)
        t = _angle_param(np.angle(z - c2), b0, b1)
        if s is not None and t is not None:
            out.append((s, t))
    return out

def _angle_param(theta, th0, th1):
    """Locate angle theta on the traversal th0 -> th1; None if outside."""
    span = th1 - th0
    if abs(span) < 1e-14:
        return None
    k = (theta - th0) / span
    # shift by multiples of 2pi/span into [0,1)
    step = 2.0 * np.pi / abs(span)
    k = k - np.floor(k / step) * step
    if -1e-12 <= k < 1.0 - 1e-12:
        return float(k)
    if k >= 1.0 and k - step >= -1e-12 and k - step < 1.0 - 1e-12:
        return float(k - step)
    return None


def _segment_crossings(seg_a, seg_b):
    """(s_a, s_b) parameter pairs of transversal x-plane crossings."""
    da, db = seg_a.descriptor(), seg_b.descriptor()
    if da[0] == "line" and db[0] == "line":
        raw = _line_line(da, db)
    elif da[0] == "line":
        raw = _line_circle(da, db)
    elif db[0] == "line":
        raw = [(s, t) for t, s in _line_circle(db, da)]
    else:
        raw = _circle_circle(da, db)
    eps = 1e-9
    out = []
    for s, t in raw:
        if -eps < s < 1.0 - eps and -eps < t < 1.0 - eps:
            out.append((max(s, 0.0), max(t, 0.0)))
    return out


def intersection(a: LiftedPath, b: LiftedPath) -> int:
    """Signed homological crossing count of two closed lifted paths.

    Crossings are x-plane intersections where both lifts are on the same
    sheet; each counts with the orientation sign of the tangent frame.
    """
    if not (a.closed and b.closed):
        raise ValueError("intersection needs closed paths")
    segs_a, segs_b = a.segments, b.segments
    total = 0
    for ia, sa in enumerate(segs_a):
        for ib, sb in enumerate(segs_b):
            for s, t in _segment_crossings(sa, sb):
                z = complex(sa.x(s))
                # contact at a shared base point is not a crossing
                if min(abs(z - a.x_start), abs(z - b.x_start)) < 1e-9:
                    continue
                ta = complex(sa.dx(s))
                tb = complex(sb.dx(t))
                cr = ta.real * tb.imag - ta.imag * tb.real
                if abs(cr) < 1e-9 * abs(ta) * abs(tb):
                    raise NonTransverse(f"tangential crossing at {z:.6g}")
                ya = a.y_at(ia, s)
                yb = b.y_at(ib, t)
                if abs(ya - yb) < abs(ya + yb):
                    total += 1 if cr > 0 else -1
    return total


# ----------------------------------------------------------------------
# loop system
# ----------------------------------------------------------------------


@dataclass
class LoopSystem:
    curve: HyperellipticCurve
    loops: list            # 2g canonical based loops (LiftedPath)
    primitive: list        # raw circle loops the canonical ones are words in
    words: list            # integer words: loops[i] = prod primitive[k]^words[i][k]
    raw_pairing: np.ndarray
    pairing: np.ndarray

    @property
    def genus(self):
        return self.curve.genus


def _based_loop(curve, center, radius, tail_angle, tail_len, ccw=True, label=""):
    p = curve.e_p
    w = p + tail_len * np.exp(1j * tail_angle)
    top = center + 1j * radius
    th0 = np.pi / 2.0
    th1 = th0 + (2.0 * np.pi if ccw else -2.0 * np.pi)
    segs = [
        LineSeg(p, w),
        LineSeg(w, top),
        ArcSeg(center, radius, th0, th1),
        LineSeg(top, w),
        LineSeg(w, p),
    ]
    return LiftedPath.from_segments(curve, segs, y0=0.0, branch_sign=1, label=label)


def _pair_circle(curve, i, j, pad=0.45):
    e = curve.branch_points
    c = 0.5 * (e[i] + e[j])
    r_min = 0.5 * abs(e[i] - e[j])
    others = np.delete(e, [i, j])
    d_other = np.abs(others - c).min() if len(others) else 4.0 * r_min
    if d_other <= r_min + curve.tol.geometric:
        raise CannotAvoidMarkedPoints(
            f"no circle separates roots ({i},{j}) from the rest"
        )
    return c, r_min + pad * (d_other - r_min)


def symplectic_basis(curve: HyperellipticCurve) -> LoopSystem:
    """Based loops A_1..A_2g with the standard symplectic pairing.

    Raw loops circle consecutive branch-point pairs; the measured pairing
    matrix is then reduced to standard form by integer concatenation on
    the B side (the A-side circles are kept as-is).
    """
    g = curve.genus
    e = curve.branch_points
    spread = float(np.abs(e - e.mean()).max())
    loops = []
    for k in range(2 * g):
        if k < g:
            i, j = 2 * k, 2 * k + 1
        else:
            i, j = 2 * (k - g) + 1, 2 * (k - g) + 2
        c, r = _pair_circle(curve, i, j)
        ang = np.pi / 2.0 + 0.11 * (k - g + 0.5)
        tail_len = 1.15 * spread + 0.07 * k + 0.4
        loops.append(
            _based_loop(curve, c, r, ang, tail_len, label=f"raw[{k}]")
        )
    # tails must clear q1, q2
    tol = 50.0 * curve.tol.geometric
    for lp in loops:
        for seg in lp.segments:
            if isinstance(seg, LineSeg):
                s = np.linspace(0.0, 1.0, 200)
                pts = seg.x(s)
                dq = min(
                    np.abs(pts - curve.e_q1).min(), np.abs(pts - curve.e_q2).min()
                )
                if dq <= tol and abs(seg.start - curve.e_p) > tol:
                    raise CannotAvoidMarkedPoints(
                        f"tail {seg!r} within {dq:.2e} of a marked point"
                    )

    raw = np.zeros((2 * g, 2 * g), dtype=int)
    for i in range(2 * g):
        for j in range(i + 1, 2 * g):
            raw[i, j] = intersection(loops[i], loops[j])
            raw[j, i] = -raw[i, j]

    # orient B circles so that <a_k, b_k> = +1
    for k in range(g):
        if raw[k, g + k] == 0:
            raise CannotAvoidMarkedPoints("degenerate raw pairing")
        if raw[k, g + k] < 0:
            loops[g + k] = loops[g + k].reverse(label=f"raw[{g + k}]")
            raw[:, g + k] *= -1
            raw[g + k, :] *= -1

    U = raw[:g, g:]
    if abs(round(float(np.linalg.det(U)))) != 1:
        raise CannotAvoidMarkedPoints(f"raw A/B pairing not unimodular: {U}")
    if np.any(raw[:g, :g]) or np.any(raw[g:, g:]):
        raise CannotAvoidMarkedPoints("raw loops of equal type intersect")
    Uinv = np.rint(np.linalg.inv(U)).astype(int)
    assert np.array_equal(U @ Uinv, np.eye(g, dtype=int))

    words = [np.eye(2 * g, dtype=int)[k] for k in range(g)]
    for k in range(g):
        wd = np.zeros(2 * g, dtype=int)
        wd[g:] = Uinv[:, k]
        words.append(wd)

    canonical = []
    for k, wd in enumerate(words):
        path = None
        for idx, n in enumerate(wd):
            if n == 0:
                continue
            piece = loops[idx] if n > 0 else loops[idx].reverse()
            for _ in range(abs(n)):
                path = piece if path is None else path.concat(piece)
        path.label = f"A[{k + 1}]"
        canonical.append(path)

    W = np.stack(words, axis=1)
    pairing = W.T @ raw @ W

    std = np.zeros((2 * g, 2 * g), dtype=int)
    std[:g, g:] = np.eye(g, dtype=int)
    std[g:, :g] = -np.eye(g, dtype=int)
    if not np.array_equal(pairing, std):
        raise CannotAvoidMarkedPoints(f"canonicalization failed: {pairing}")

    return LoopSystem(
        curve=curve,
        loops=canonical,
        primitive=loops,
        words=[np.asarray(w) for w in words],
        raw_pairing=raw,
        pairing=pairing,
    )


# ----------------------------------------------------------------------
# the cut arc and separating loops
# ----------------------------------------------------------------------


class CutHalf(LiftedPath):
    """One lift of the branch-cut arc, with fast arbitrary-parameter access."""

    def __init__(self, curve, sign):
        super().__init__(
            curve,
            [Block([CutArc(curve)], 0.0, sign)],
            label=f"cut[{'+' if sign > 0 else '-'}]",
        )
        self.sign = sign
        # dense sign table on a grid clustered (but not collapsing) at the ends
        tt = np.sin(0.5 * np.pi * np.linspace(0.0, 1.0, 4097)) ** 2
        tt[0], tt[-1] = 0.0, 1.0
        dist = curve.dist_to_branch(curve.arc_x(tt))
        keep = dist > 3.0 * curve.tol.geometric
        keep[0] = keep[-1] = True
        tt = tt[keep]
        y = continue_y(curve, curve.arc_x, tt, 0.0, branch_sign=sign)
        w = np.sqrt(curve.f(curve.arc_x(tt)))
        rel = np.ones(len(tt))
        mask = np.abs(w) > 0
        rel[mask] = np.where(
            np.abs(y[mask] - w[mask]) <= np.abs(y[mask] + w[mask]), 1.0, -1.0
        )
        self._tt = tt
        self._rel_sign = rel

    def y_of_t(self, t):
        """Vectorized lifted y at arbitrary arc parameters in [0, 1]."""
        t = np.asarray(t, dtype=float)
        idx = np.clip(np.searchsorted(self._tt, t), 1, len(self._tt) - 1)
        left = np.abs(t - self._tt[idx - 1]) < np.abs(t - self._tt[idx])
        idx = np.where(left, idx - 1, idx)
        return self._rel_sign[idx] * np.sqrt(self.curve.f(self.curve.arc_x(t)))


def cut_halves(curve: HyperellipticCurve):
    """The two lifts of the positive-real locus of h, from q1 to q2.

    Both carry the parameterization h(x(t)) = t/(1-t); the minus half is
    the involution image of the plus half.
    """
    return CutHalf(curve, +1), CutHalf(curve, -1)


def separating_loop(curve: HyperellipticCurve, branch_subset) -> LiftedPath:
    """Lift of a circle separating an odd branch subset containing e_q1.

    The preimage of the circle is one closed curve double-covering it; it
    is null-homologous and invariant under the involution.
    """
    subset = sorted(set(int(i) for i in branch_subset))
    n = len(curve.branch_points)
    if any(i < 0 or i >= n for i in subset):
        raise SubsetNotSeparable(f"indices {subset} out of range")
    if len(subset) % 2 == 0:
        raise EvenSubset("separating subset must have odd cardinality")
    if len(subset) == 1:
        raise DegenerateLoop("single branch point gives a contractible preimage")
    if curve.q1_index not in subset:
        raise SubsetNotSeparable("subset must contain the q1 branch point")
    if curve.q2_index in subset:
        raise SubsetNotSeparable("subset must exclude the q2 branch point")
    inside = curve.branch_points[subset]
    outside = np.delete(curve.branch_points, subset)
    c = inside.mean()
    r_in = np.abs(inside - c).max()
    r_out = np.abs(outside - c).min() if len(outside) else np.inf
    if r_out <= r_in + 100.0 * curve.tol.geometric:
        raise SubsetNotSeparable(
            f"no circle around {c:.4g} separates the subset ({r_in:.3g} vs {r_out:.3g})"
        )
    r = 0.5 * (r_in + min(r_out, 2.5 * r_in))
    return double_cover_circle(curve, c, r, theta0=np.pi / 2.0, ccw=True)


def double_cover_circle(curve, center, radius, theta0=np.pi / 2.0, ccw=True, y0=None):
    """Lift of a circle enclosing an odd number of branch points (two laps)."""
    s = 2.0 * np.pi if ccw else -2.0 * np.pi
    segs = [
        ArcSeg(center, radius, theta0, theta0 + s),
        ArcSeg(center, radius, theta0 + s, theta0 + 2 * s),
    ]
    if y0 is None:
        y0 = complex(np.sqrt(curve.f(center + radius * np.exp(1j * theta0))))
    return LiftedPath.from_segments(curve, segs, y0=y0, label="separating")
