"""Lower convex envelope of a sampled 1-D function, plus tangent location
from an external anchor point (the two operations behind the linear pieces
of the entanglement curve)."""

from dataclasses import dataclass, field

import numpy as np

# hull strictly below the curve by more than this counts as a replaced
# (linear) region rather than round-off
SEGMENT_TOL = 1e-9


@dataclass(frozen=True)
class SampledCurve:
    xs: np.ndarray
    ys: np.ndarray

    def __post_init__(self):
        xs = np.asarray(self.xs, dtype=float)
        ys = np.asarray(self.ys, dtype=float)
        if xs.ndim != 1 or xs.size < 2 or ys.shape != xs.shape:
            raise ValueError("need at least two (x, y) samples of equal length")
        if np.any(np.diff(xs) <= 0.0):
            raise ValueError("xs must be strictly increasing")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "ys", ys)


@dataclass(frozen=True)
class HullResult:
    hull_ys: np.ndarray
    segments: list = field(default_factory=list)


def _cross(ax, ay, bx, by, cx, cy) -> float:
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def lower_convex_hull(curve: SampledCurve) -> HullResult:
    """Largest convex function not above the samples, evaluated back on xs.

    Vertices come from an Andrew monotone chain over the sample points;
    between vertices the hull is linear.  segments lists the x-intervals
    where the hull lies strictly below the curve.
    """
    xs, ys = curve.xs, curve.ys
    n = xs.size
    stack = []
    for i in range(n):
        while len(stack) >= 2:
            j, k = stack[-2], stack[-1]
            if _cross(xs[j], ys[j], xs[k], ys[k], xs[i], ys[i]) <= 0.0:
                stack.pop()
            else:
                break
        stack.append(i)
    hx = xs[stack]
    hy = ys[stack]
    hull_ys = np.interp(xs, hx, hy)
    below = (ys - hull_ys) > SEGMENT_TOL
    segments = []
    i = 0
    while i < n:
        if below[i]:
            j = i
            while j + 1 < n and below[j + 1]:
                j += 1
            segments.append((float(xs[max(i - 1, 0)]), float(xs[min(j + 1, n - 1)])))
            i = j + 1
        else:
            i += 1
    return HullResult(hull_ys=hull_ys, segments=segments)


def tangent_from_point(f, x0: float, f0: float, bracket, *, tol: float = 1e-12) -> float:
    """Abscissa t where the line through (x0, f0) touches f tangentially.

    Solves g(t) = f'(t) (t - x0) - (f(t) - f0) = 0 by bisection on the
    bracket followed by a few Newton steps; f' uses central differences.
    Raises ValueError when g does not change sign on the bracket.
    """

    def deriv(t: float) -> float:
        h = 1e-6 * (1.0 + abs(t))
        return (f(t + h) - f(t - h)) / (2.0 * h)

    def g(t: float) -> float:
        return deriv(t) * (t - x0) - (f(t) - f0)

    lo, hi = float(bracket[0]), float(bracket[1])
    glo, ghi = g(lo), g(hi)
    if glo == 0.0:
        return lo
    if ghi == 0.0:
        return hi
    if glo * ghi > 0.0:
        raise ValueError(f"tangency condition has no sign change on {bracket!r}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0.0:
            lo = hi = mid
            break
        if glo * gm < 0.0:
            hi, ghi = mid, gm
        else:
            lo, glo = mid, gm
    t = 0.5 * (lo + hi)
    for _ in range(3):
        h = 1e-6 * (1.0 + abs(t))
        gp = (g(t + h) - g(t - h)) / (2.0 * h)
        if gp == 0.0:
            break
        step = g(t) / gp
        t -= step
    return t
