import math
from fractions import Fraction as F

import numpy as np
import pytest
from scipy import integrate, optimize

from bacequiv import DomainError, critical_set, percentages, ratios, square_curves, trace_level_curve
from bacequiv.geometry import area, area_integrand

A_HALF = 1 / 3 - math.sqrt(3) * math.pi / 27
A_THIRD = 3 / 8 - 3 * math.pi / 32


def slice_area(r):
    """Area of 0 < S < r as the integral over p + q = tau of the crossing point.

    (p, tau) has unit Jacobian, and S < r on [0, p_r(tau)) by monotonicity.
    """
    a, b = r.numerator, r.denominator

    def crossing(tau):
        g = lambda p: a * math.log(p) + b * math.log1p(-p) - b * math.log(tau - p) - a * math.log1p(-(tau - p))
        return optimize.brentq(g, 1e-300, tau / 2, xtol=1e-15, rtol=1e-15)

    val, _ = integrate.quad(crossing, 0, 1, epsabs=1e-12, limit=200)
    return val


def test_closed_forms():
    assert abs(area(F(1, 2)) - A_HALF) < 1e-10
    assert abs(area(F(1, 3)) - A_THIRD) < 1e-10
    assert abs(area(F(1)) - 0.25) < 1e-12
    assert area(F(0)) == 0


def test_domain():
    with pytest.raises(DomainError):
        area(F(3, 2))


def test_integrand_limit_at_one():
    assert area_integrand(1.0, 1, 2) == pytest.approx(1 / 9, abs=0)
    assert area_integrand(1 - 1e-7, 1, 2) == pytest.approx(1 / 9, rel=1e-6)
    assert area_integrand(1 - 1e-9, 3, 7) == pytest.approx(9 * 7 / (2 * 100), rel=1e-6)


@pytest.mark.parametrize("r", [F(1, 4), F(1, 5), F(2, 5), F(3, 4), F(2, 7)])
def test_area_matches_slice_integration(r):
    assert abs(area(r) - slice_area(r)) < 1e-9


def test_area_strictly_increasing():
    for n in range(2, 41):
        values = [area(r) for r in critical_set(n).values]
        assert all(x < y for x, y in zip(values, values[1:]))


@pytest.mark.parametrize("n,row", [
    (3, (53, 47)),
    (4, (32, 21, 47)),
    (5, (22, 11, 21, 18, 29)),
    (6, (16, 6, 11, 21, 18, 29)),
    (7, (12, 4, 6, 11, 8, 12, 18, 8, 21)),
])
def test_integer_percentage_table(n, row):
    assert percentages(n).rounded() == row


@pytest.mark.parametrize("n", [3, 8, 15, 40])
def test_percentages_partition(n):
    table = percentages(n)
    assert abs(sum(table.percentages) - 100) < 1e-6
    assert len(table.percentages) == len(table.boundaries) - 1
    assert table.cumulative[0] == 0 and abs(table.cumulative[-1] - 0.25) < 1e-12
    for i, pct in enumerate(table.percentages):
        assert pct == pytest.approx(400 * (table.cumulative[i + 1] - table.cumulative[i]))


@pytest.mark.parametrize("n,R,r", [(4, 1.418, 0.966), (8, 2.292, 1.000), (200, 45.098, 1.001)])
def test_ratios(n, R, r):
    rec = ratios(n)
    assert abs(rec.R - R) < 5e-3 and abs(rec.r_small - r) < 5e-3


def test_ratios_definition():
    rec = ratios(9)
    assert rec.R == pytest.approx(4 * 14 * (0.25 - area(F(4, 5))))
    assert rec.r_small == pytest.approx(4 * 14 * area(F(1, 8)))
    table = percentages(9)
    assert rec.R == pytest.approx(table.percentages[-1] / 100 * 14)
    assert rec.r_small == pytest.approx(table.percentages[0] / 100 * 14)


def s_value(p, q):
    return (np.log1p(-p) - np.log(q)) / (np.log1p(-q) - np.log(p))


@pytest.mark.parametrize("r", [F(1, 8), F(1, 3), F(1, 2), F(2, 3), F(4, 5)])
def test_trace_residuals(r):
    c = trace_level_curve(r, 512)
    assert c.points.shape == (512, 2)
    assert c.residuals().max() < 1e-10
    tau = c.points.sum(axis=1)
    assert np.all(np.diff(tau) > 0)
    assert np.all(c.points[:, 0] <= c.points[:, 1])
    assert np.abs(s_value(c.points[:, 0], c.points[:, 1]) - float(r)).max() < 1e-8


def test_trace_half_at_quarter_diagonal():
    c = trace_level_curve(F(1, 2), 3, eps=0.25)
    p, q = c.points[1]
    assert q == pytest.approx(0.5 - p)
    assert abs(p * (1 - p) ** 2 - q**2 * (1 - q)) < 1e-12


def test_trace_diagonal():
    c = trace_level_curve(F(1), 100)
    assert np.abs(c.points[:, 0] - c.points[:, 1]).max() < 1e-12


def test_square_curves_structure():
    curves = square_curves(7, 64)
    d7 = critical_set(7).values
    lower_t = [c for c in curves if c.region == "T"]
    assert [c.r for c in lower_t] == list(d7)
    # every value except 1 gets a mirror; the diagonal is its own mirror
    assert len([c for c in curves if c.region == "T'"]) == len(d7) - 1
    assert len(curves) == 2 * (2 * len(d7) - 1) + 1
    assert curves[-1].region == "noisy"
    assert np.abs(curves[-1].points.sum(axis=1) - 1).max() < 1e-15


def test_square_curves_images():
    curves = square_curves(5, 64)
    by_key = {(c.label, c.region): c for c in curves}
    base = by_key[("1/2", "T")]
    mirror = by_key[("2", "T'")]
    upper = by_key[("1/2", "T+")]
    assert np.array_equal(mirror.points, base.points[:, ::-1])
    assert np.allclose(upper.points, np.column_stack([1 - base.points[:, 1], 1 - base.points[:, 0]]))
    # the curve p^a (1-p)^b = q^b (1-q)^a is invariant under (p, q) -> (1-q, 1-p)
    assert upper.residuals().max() < 1e-10
    p, q = mirror.points[:, 0], mirror.points[:, 1]
    assert np.abs(q * (1 - q) ** 2 - p**2 * (1 - p)).max() < 1e-10
    assert ("1", "T'") not in by_key


# exact antiderivatives for a = 1, where the integrand is the rational
# function b x^(b-1) / (2 (1 + x + ... + x^b)^2); evaluated with sympy
SYMBOLIC_A = {F(1, 4): 0.05407749360911601310752717, F(1, 5): 0.03879179911787128112623370}


@pytest.mark.parametrize("r", sorted(SYMBOLIC_A))
def test_area_matches_symbolic_integral(r):
    assert abs(area(r) - SYMBOLIC_A[r]) < 1e-14
