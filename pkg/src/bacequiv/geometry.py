"""Areas of criterion regions and level curves of the BAC-function.

The area of ``{(p, q) in T : 0 < S(p, q) < a/b}`` reduces to the 1-D integral

    A(a/b) = int_0^1  b (x^a - 1)^2 x^(b-1) / (2 (x^(a+b) - 1)^2)  dx,

whose integrand has a removable singularity at ``x = 1`` with limit
``a^2 b / (2 (a+b)^2)``. Uniformly drawn channels land in a region with
probability four times its area.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import integrate

from ._errors import DomainError
from .criteria import CriticalSet, critical_set, quasi_symmetric_boundary, stable_count

__all__ = [
    "AreaTable",
    "LevelCurve",
    "RatioRecord",
    "area",
    "area_integrand",
    "percentages",
    "ratios",
    "trace_level_curve",
    "square_curves",
]

AREA_TOL = 1e-13
MAX_BISECTIONS = 1200
TAU_EPS = 1e-4


def area_integrand(x: float, a: int, b: int) -> float:
    if x >= 1.0:
        return a * a * b / (2.0 * (a + b) ** 2)
    if x <= 0.0:
        return b / 2.0 if b == 1 else 0.0
    lx = np.log(x)
    # expm1 keeps both factors accurate as x -> 1
    num = np.expm1(a * lx)
    den = np.expm1((a + b) * lx)
    return b * num * num * np.exp((b - 1) * lx) / (2.0 * den * den)


@lru_cache(maxsize=None)
def _area(a: int, b: int) -> float:
    # peak of the integrand sits near 1 for large b; give quad the hint
    points = [1.0 - 1.0 / b] if b > 4 else None
    val, _err = integrate.quad(
        area_integrand, 0.0, 1.0, args=(a, b), epsabs=AREA_TOL, epsrel=AREA_TOL,
        limit=500, points=points,
    )
    return val


def area(r) -> float:
    """Area of the part of the triangle where ``0 < S < r``; total is 1/4."""
    r = Fraction(r)
    if r == 0:
        return 0.0
    if not 0 < r <= 1:
        raise DomainError(f"area is defined for r in (0, 1], got {r}")
    return _area(r.numerator, r.denominator)


@dataclass(frozen=True)
class AreaTable:
    n: int
    boundaries: CriticalSet
    cumulative: tuple[float, ...]
    percentages: tuple[float, ...]

    def rounded(self) -> tuple[int, ...]:
        return tuple(int(round(v)) for v in self.percentages)


def percentages(n: int) -> AreaTable:
    """Share (in percent) of each stable region of order ``n``, left to right."""
    if n < 3:
        raise DomainError(f"percentage tables need n >= 3, got {n}")
    cs = critical_set(n)
    cum = tuple(area(r) for r in cs.values)
    pct = tuple(400.0 * (hi - lo) for lo, hi in zip(cum, cum[1:]))
    return AreaTable(n, cs, cum, pct)


@dataclass(frozen=True)
class RatioRecord:
    """Areas of the regions next to the BSC (``R``) and next to the
    Z-channel (``r_small``), each divided by the average region area."""

    n: int
    R: float
    r_small: float


def ratios(n: int) -> RatioRecord:
    if n < 4:
        raise DomainError(f"ratios need n >= 4, got {n}")
    t = stable_count(n)
    big = 4 * t * (0.25 - area(quasi_symmetric_boundary(n)))
    small = 4 * t * area(Fraction(1, n - 1))
    return RatioRecord(n, big, small)


@dataclass(frozen=True)
class LevelCurve:
    """Polyline on ``S = r`` (or its images), ordered by increasing p + q.

    ``points`` has shape ``(m, 2)`` holding ``(p, q)``. ``label`` names the
    value the extended BAC-function takes on the curve, ``region`` the part
    of the unit square the curve lives in.
    """

    r: Fraction | None
    points: np.ndarray
    label: str = ""
    region: str = "T"

    def residuals(self) -> np.ndarray:
        """``|p^a (1-p)^b - q^b (1-q)^a|`` at each sample, after mapping the
        curve back into the triangle T."""
        if self.r is None:
            return np.abs(self.points.sum(axis=1) - 1.0)
        p, q = self.points[:, 0], self.points[:, 1]
        if self.region.endswith("+"):
            p, q = 1 - q, 1 - p
        if self.region.startswith("T'"):
            p, q = q, p
        if self.r == 0:
            # the Z-axis p = 0; the power relation degenerates there
            return np.abs(p)
        a, b = self.r.numerator, self.r.denominator
        return np.abs(p**a * (1 - p) ** b - q**b * (1 - q) ** a)


def _tau_grid(samples: int, eps: float) -> np.ndarray:
    if samples < 2:
        raise DomainError(f"need at least 2 samples, got {samples}")
    return np.linspace(eps, 1.0 - eps, samples)


def trace_level_curve(r, samples: int = 256, eps: float = TAU_EPS) -> LevelCurve:
    """Sample ``S(p, q) = r`` in the triangle, one point per anti-diagonal.

    On each anti-diagonal ``p + q = tau`` the BAC-function increases with
    ``p`` on ``[0, tau/2]``, so bisection finds the unique crossing.
    """
    r = Fraction(r)
    if not 0 < r <= 1:
        raise DomainError(f"level curves are traced for r in (0, 1], got {r}")
    tau = _tau_grid(samples, eps)
    if r == 1:
        p = tau / 2
        return LevelCurve(r, np.column_stack([p, tau - p]), label=str(r))

    a, b = r.numerator, r.denominator
    lo = np.zeros_like(tau)
    hi = tau / 2

    def g(p):
        # log of p^a (1-p)^b / (q^b (1-q)^a); negative means S < r
        q = tau - p
        with np.errstate(divide="ignore"):
            return a * np.log(p) + b * np.log1p(-p) - b * np.log(q) - a * np.log1p(-q)

    # run to full double precision: for small r the crossing point can be
    # far below any absolute tolerance near the origin
    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        done = (mid <= lo) | (mid >= hi)
        if done.all():
            break
        below = g(mid) < 0
        lo = np.where(below & ~done, mid, lo)
        hi = np.where(below | done, hi, mid)
    p = 0.5 * (lo + hi)
    return LevelCurve(r, np.column_stack([p, tau - p]), label=str(r))


def _z_axis(samples: int, eps: float) -> np.ndarray:
    q = _tau_grid(samples, eps)
    return np.column_stack([np.zeros_like(q), q])


def _reciprocal_label(r: Fraction) -> str:
    return "inf" if r == 0 else str(1 / r)


def square_curves(n: int, samples: int = 256, eps: float = TAU_EPS) -> list[LevelCurve]:
    """All critical curves of order ``n`` drawn in the unit square.

    For each critical value ``r``: the curve in T, its mirror in T' under
    ``(p, q) -> (q, p)`` (where the extended function equals ``1/r``), and
    the images of both under ``(p, q) -> (1-q, 1-p)`` in the upper half.
    The diagonal ``r = 1`` is its own mirror and is emitted once per half.
    The last entry is the noisy line ``p + q = 1``.
    """
    if n < 2:
        raise DomainError(f"square curves need n >= 2, got {n}")
    curves: list[LevelCurve] = []
    for r in critical_set(n).values:
        if r == 0:
            base = LevelCurve(r, _z_axis(samples, eps), label="0")
        else:
            base = trace_level_curve(r, samples, eps)
        pts = base.points
        lower = [base]
        if r != 1:
            lower.append(LevelCurve(r, pts[:, ::-1].copy(), _reciprocal_label(r), "T'"))
        curves.extend(lower)
        for c in lower:
            img = np.column_stack([1 - c.points[:, 1], 1 - c.points[:, 0]])
            region = "T+" if c.region == "T" else "T'+"
            curves.append(LevelCurve(r, img, c.label, region))
    t = np.linspace(0.0, 1.0, samples)
    curves.append(LevelCurve(None, np.column_stack([t, 1 - t]), "noisy", "noisy"))
    return curves
