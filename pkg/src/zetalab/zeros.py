"""Zero location and counting: argument-principle census over rectangles,
critical-line zero finding on |eta(1/2 + it)|, the multiplicity functional
w(f, a) = lim Re[eps * f'(a+eps)/f(a+eps)], and the zero-free line checks.
"""

from __future__ import annotations

import cmath
import logging
import math
import time
from dataclasses import dataclass

import numpy as np

from .errors import (
    BoundaryTooCloseToZero,
    EvaluationFailure,
    NonIntegerWinding,
    ZetaLabError,
)
from .reporting import CheckResult
from .zeta_eval import DEFAULT_CONFIG, EvalConfig, eta, zeta

__all__ = [
    "Rect",
    "ZeroRecord",
    "count_zeros_rect",
    "find_critical_zeros",
    "multiplicity",
    "check_line_zeros",
]

logger = logging.getLogger(__name__)

#: boundary clearance demanded from known zeros (and the pole when not indented).
BOUNDARY_CLEARANCE = 1e-6
#: indent the contour around the pole s=1 when it sits this close to the boundary.
_INDENT_TRIGGER = 1e-4
#: radius of the indentation arc.
_INDENT_RADIUS = 1e-2
#: |zeta| below this on the boundary means a zero is unresolvably close.
_BOUNDARY_ZETA_FLOOR = 5e-7

_MAX_SUBDIVISION_DEPTH = 48


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle in the complex plane for scans and windings."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def __post_init__(self) -> None:
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("rectangle must satisfy re_min < re_max and im_min < im_max")

    @property
    def corners(self) -> tuple[complex, complex, complex, complex]:
        """Counterclockwise from the lower-left corner."""
        return (
            complex(self.re_min, self.im_min),
            complex(self.re_max, self.im_min),
            complex(self.re_max, self.im_max),
            complex(self.re_min, self.im_max),
        )

    def boundary_distance(self, z: complex) -> float:
        """Distance from z to the rectangle's boundary curve."""
        dx = max(self.re_min - z.real, 0.0, z.real - self.re_max)
        dy = max(self.im_min - z.imag, 0.0, z.imag - self.im_max)
        outside = math.hypot(dx, dy)
        if outside > 0.0:
            return outside
        return min(
            z.real - self.re_min,
            self.re_max - z.real,
            z.imag - self.im_min,
            self.im_max - z.imag,
        )


@dataclass(frozen=True)
class ZeroRecord:
    """A located zero: position, residual magnitude there, estimated order,
    and how it was confirmed."""

    location: complex
    refined_abs_value: float
    multiplicity_estimate: float
    method: str  # 'minimum-refinement' | 'winding-confirmed'

    def __post_init__(self) -> None:
        if not self.refined_abs_value < 1e-6:
            raise ValueError(f"refined_abs_value {self.refined_abs_value} not < 1e-6")
        nearest = round(self.multiplicity_estimate)
        if nearest < 0 or abs(self.multiplicity_estimate - nearest) > 0.1:
            raise ValueError(
                f"multiplicity estimate {self.multiplicity_estimate} not near a non-negative integer"
            )
        if self.method not in ("minimum-refinement", "winding-confirmed"):
            raise ValueError(f"unknown method {self.method!r}")


def _clip_segment_outside_circle(
    p: complex, q: complex, center: complex, radius: float
) -> list[tuple[complex, complex]]:
    """Sub-segments of [p, q] lying outside the disk, in walk order."""
    d = q - p
    a = abs(d) ** 2
    if a == 0.0:
        return [(p, q)] if abs(p - center) >= radius else []
    b = 2.0 * ((p - center).real * d.real + (p - center).imag * d.imag)
    c = abs(p - center) ** 2 - radius * radius
    disc = b * b - 4.0 * a * c
    if disc <= 0.0:
        return [(p, q)]  # no crossing; tangency keeps the whole segment
    sq = math.sqrt(disc)
    t1 = (-b - sq) / (2.0 * a)
    t2 = (-b + sq) / (2.0 * a)
    t1c = min(max(t1, 0.0), 1.0)
    t2c = min(max(t2, 0.0), 1.0)
    pieces = []
    if t1c > 0.0:
        pieces.append((p, p + t1c * d))
    if t2c < 1.0:
        pieces.append((p + t2c * d, q))
    return pieces


def _boundary_waypoints(r: Rect, samples_per_edge: int) -> list[complex]:
    """Closed counterclockwise waypoint loop, with a clockwise indentation
    arc around the pole s = 1 whenever it hugs the boundary."""
    corners = r.corners
    edges = [(corners[i], corners[(i + 1) % 4]) for i in range(4)]
    pole = 1.0 + 0.0j
    indent = r.boundary_distance(pole) < _INDENT_TRIGGER

    pieces: list[tuple[complex, complex, float]] = []
    for p, q in edges:
        edge_len = abs(q - p)
        subs = (
            _clip_segment_outside_circle(p, q, pole, _INDENT_RADIUS) if indent else [(p, q)]
        )
        pieces.extend((a, b, edge_len) for a, b in subs)
    if not pieces:
        raise ValueError("rectangle degenerates to the indentation disk")

    waypoints: list[complex] = []
    n_pieces = len(pieces)
    for i, (p, q, edge_len) in enumerate(pieces):
        n_pts = max(2, int(math.ceil(samples_per_edge * abs(q - p) / edge_len)))
        for j in range(n_pts):
            waypoints.append(p + (q - p) * (j / n_pts))
        nxt = pieces[(i + 1) % n_pieces][0]
        if abs(q - nxt) > 1e-12:
            # gap swallowed by the disk: go clockwise around the pole so the
            # excised neighborhood (and the pole) stays outside the contour
            th_q = cmath.phase(q - pole)
            th_n = cmath.phase(nxt - pole)
            sweep = (th_q - th_n) % (2.0 * math.pi)
            n_arc = 64
            waypoints.append(q)
            for j in range(1, n_arc):
                waypoints.append(pole + _INDENT_RADIUS * cmath.exp(1j * (th_q - sweep * j / n_arc)))
    waypoints.append(waypoints[0])
    return waypoints


def count_zeros_rect(
    r: Rect, samples_per_edge: int = 256, cfg: EvalConfig | None = None
) -> int:
    """Zeros minus poles of zeta inside r, by the accumulated argument change
    of zeta along the discretized boundary divided by 2*pi.

    Edges are refined adaptively until consecutive argument increments stay
    below pi/2. If the pole s = 1 lies within 1e-4 of the boundary the
    contour is indented around it (radius 1e-2), excluding it from the
    census; a zero that close to the boundary raises instead.

    Args:
        r: the rectangle; its boundary must clear every zero by 1e-6.
        samples_per_edge: base discretization, >= 64.
        cfg: zeta evaluation parameters.

    Raises:
        BoundaryTooCloseToZero: boundary within clearance of a zero, or the
            winding cannot be resolved within the refinement budget.
        NonIntegerWinding: accumulated winding farther than 0.1 from an
            integer.
    """
    cfg = cfg or DEFAULT_CONFIG
    if samples_per_edge < 64:
        raise ValueError("samples_per_edge must be >= 64")

    # trivial zeros sit on the real axis at -2, -4, ...
    k = 2
    while -k >= r.re_min - 1.0:
        if r.boundary_distance(complex(-k, 0.0)) < BOUNDARY_CLEARANCE:
            raise BoundaryTooCloseToZero(f"boundary within {BOUNDARY_CLEARANCE} of trivial zero {-k}")
        k += 2

    waypoints = _boundary_waypoints(r, samples_per_edge)

    def f(z: complex) -> complex:
        val = zeta(z, cfg).value
        if abs(val) < _BOUNDARY_ZETA_FLOOR:
            raise BoundaryTooCloseToZero(
                f"|zeta| = {abs(val):.2e} at boundary point {z}; zero too close"
            )
        return val

    values = [f(z) for z in waypoints]

    total = 0.0
    budget = [400_000]

    def accumulate(z1, z2, f1, f2, depth) -> float:
        inc = cmath.phase(f2 / f1)
        if abs(inc) <= 0.5 * math.pi:
            return inc
        if depth >= _MAX_SUBDIVISION_DEPTH:
            raise BoundaryTooCloseToZero(
                f"cannot resolve argument change near {z1}; suspected singularity"
            )
        budget[0] -= 1
        if budget[0] <= 0:
            raise BoundaryTooCloseToZero("winding refinement budget exhausted")
        zm = 0.5 * (z1 + z2)
        fm = f(zm)
        return accumulate(z1, zm, f1, fm, depth + 1) + accumulate(zm, z2, fm, f2, depth + 1)

    for i in range(len(waypoints) - 1):
        total += accumulate(waypoints[i], waypoints[i + 1], values[i], values[i + 1], 0)

    winding = total / (2.0 * math.pi)
    nearest = round(winding)
    if abs(winding - nearest) > 0.1:
        raise NonIntegerWinding(f"winding {winding:.4f} is not within 0.1 of an integer")
    return int(nearest)


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def _golden_min(g, a: float, b: float, f_tol: float, x_tol: float) -> tuple[float, float]:
    """Golden-section minimum of g on [a, b]; stops when the best value
    drops below f_tol or the bracket width below x_tol."""
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    gc = g(c)
    gd = g(d)
    while (b - a) > x_tol:
        if gc < gd:
            b, d, gd = d, c, gc
            c = b - _INVPHI * (b - a)
            gc = g(c)
            newest = gc
        else:
            a, c, gc = c, d, gd
            d = a + _INVPHI * (b - a)
            gd = g(d)
            newest = gd
        if newest < f_tol:
            break
    return (c, gc) if gc <= gd else (d, gd)


def find_critical_zeros(
    t_min: float, t_max: float, step: float, cfg: EvalConfig | None = None
) -> list[ZeroRecord]:
    """Scan |eta(1/2 + it)| on a grid, refine local minima by golden section,
    confirm candidates by a winding count on a 0.2 x 0.2 square, and attach
    a multiplicity estimate.

    Args:
        t_min, t_max: scan window, 0 < t_min < t_max.
        step: grid spacing, <= 0.05 so no zero slips between grid points.

    Returns:
        ZeroRecords sorted by t; empty when the window holds no zero.
    """
    cfg = cfg or DEFAULT_CONFIG
    if not (0.0 < t_min < t_max):
        raise ValueError("need 0 < t_min < t_max")
    if not (0.0 < step <= 0.05):
        raise ValueError("step must be in (0, 0.05]")

    ts = np.arange(t_min, t_max + 0.5 * step, step)
    mags = np.array([abs(eta(complex(0.5, t), cfg).value) for t in ts])

    def g(t: float) -> float:
        return abs(eta(complex(0.5, t), cfg).value)

    records = []
    for i in range(1, len(ts) - 1):
        if not (mags[i] <= mags[i - 1] and mags[i] <= mags[i + 1]):
            continue
        t_star, g_star = _golden_min(g, ts[i] - step, ts[i] + step, 1e-8, 1e-10)
        if g_star >= 1e-8:
            continue  # a shallow minimum, not a zero
        if records and abs(records[-1].location.imag - t_star) < 1e-6:
            continue
        location = complex(0.5, t_star)
        method = "minimum-refinement"
        try:
            square = Rect(0.4, 0.6, t_star - 0.1, t_star + 0.1)
            if count_zeros_rect(square, 64, cfg) == 1:
                method = "winding-confirmed"
        except ZetaLabError as exc:
            logger.warning("winding confirmation failed at t=%.6f: %s", t_star, exc)
        mult = multiplicity(lambda z: zeta(z, cfg).value, location, 1e-4)
        records.append(ZeroRecord(location, g_star, mult, method))
    return sorted(records, key=lambda rec: rec.location.imag)


def multiplicity(f, a: complex, eps: float) -> float:
    """Zero order of f at a (negative at a pole), from the functional

        w(f, a) = lim_{eps->0} Re[eps * f'(a + eps) / f(a + eps)].

    f' uses central differences at steps eps/10 and eps/20, Richardson
    combined (the step bias is O((h/eps)^2) at a pole, so a single step
    would bias the pole order by ~1%); the eps limit is then Richardson
    extrapolated across eps and eps/2. Level disagreement above 0.05 is
    logged as low confidence.

    Args:
        f: complex evaluator, callable on the probe circle.
        a: the point under test.
        eps: probe distance, in [1e-6, 1e-3].

    Raises:
        EvaluationFailure: f failed on a probe point.
    """
    a = complex(a)
    if not 1e-6 <= eps <= 1e-3:
        raise ValueError("eps must lie in [1e-6, 1e-3]")

    def level(e: float) -> float:
        z = a + e
        h = e / 10.0
        try:
            f0 = f(z)
            d_h = (f(z + h) - f(z - h)) / (2.0 * h)
            d_h2 = (f(z + 0.5 * h) - f(z - 0.5 * h)) / h
        except Exception as exc:  # noqa: BLE001 - contract: wrap evaluator faults
            raise EvaluationFailure(f"evaluator failed near {z}: {exc}") from exc
        deriv = (4.0 * d_h2 - d_h) / 3.0
        return (e * deriv / f0).real

    w1 = level(eps)
    w2 = level(0.5 * eps)
    if abs(w1 - w2) > 0.05:
        logger.warning("multiplicity levels disagree by %.3f at %s; low confidence", abs(w1 - w2), a)
    return 2.0 * w2 - w1


def check_line_zeros(line_re: float, t_max: float, cfg: EvalConfig | None = None) -> CheckResult:
    """Verify min |zeta| along Re(s) = 0 or Re(s) = 1 stays above the 1e-3
    floor (excluding 1e-3 neighborhoods of s = 0 and s = 1); on the zero
    line additionally pins zeta(0) = -1/2.

    Args:
        line_re: 0 or 1.
        t_max: scan height, <= 50.
    """
    cfg = cfg or DEFAULT_CONFIG
    if line_re not in (0, 1):
        raise ValueError("line_re must be 0 or 1")
    if t_max > 50.0:
        raise ValueError("t_max must be <= 50")

    start = time.perf_counter()
    ts = np.arange(0.002, t_max, 0.05)
    mags = np.array([abs(zeta(complex(line_re, t), cfg).value) for t in ts])
    min_idx = int(np.argmin(mags))
    observed_min = float(mags[min_idx])
    residual = max(0.0, 1e-3 - observed_min)
    details = f"min |zeta({int(line_re)}+it)| = {observed_min:.6g} at t = {ts[min_idx]:.4f}"
    n = len(ts)
    if line_re == 0:
        at_zero = abs(zeta(0.0, cfg).value - (-0.5))
        residual = max(residual, at_zero)
        details += f"; |zeta(0) + 1/2| = {at_zero:.3g}"
        n += 1
    tolerance = 1e-10
    duration = int((time.perf_counter() - start) * 1000)
    verdict = "pass" if residual <= tolerance else "fail"
    return CheckResult(
        id=f"SEC5_LINE_RE{int(line_re)}",
        verdict=verdict,
        worst_residual=residual,
        tolerance=tolerance,
        n_samples=n,
        details=details,
        duration_ms=duration,
    )
