"""The BAC-function, critical fractions and exact criterion classification.

Every decision here reduces to the integer comparison

    p^a (1-p)^b  <=>  q^b (1-q)^a      iff      S(p, q)  <=>  a/b,

so no logarithm is ever evaluated to decide anything. Floating values of
``S`` are carried only for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import mpmath
from sympy import totient

from ._errors import DomainError
from .channel_core import ChannelParams, Region

__all__ = [
    "DEFAULT_HORIZON",
    "Criterion",
    "CriticalSet",
    "SValue",
    "bac_s",
    "compare_s_to_fraction",
    "critical_set",
    "stable_count",
    "classify",
    "equivalent_by_s",
    "separation_order",
    "extended_s",
    "channel_distance",
    "quasi_symmetric_boundary",
    "fraction_weight",
    "curve_totals",
]

DEFAULT_HORIZON = 64
DISPLAY_DPS = 30


def fraction_weight(r: Fraction) -> int:
    """Numerator plus denominator in lowest terms (0 -> 1, 1 -> 2)."""
    return r.numerator + r.denominator


@dataclass(frozen=True)
class CriticalSet:
    n: int
    values: tuple[Fraction, ...]

    @property
    def t(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class Criterion:
    """Stable ``i``: S in (r_i, r_{i+1}). Unstable ``i``: S == r_i."""

    kind: str
    index: int
    n: int

    @property
    def stable(self) -> bool:
        return self.kind == "stable"

    def bounds(self) -> tuple[Fraction, Fraction]:
        values = critical_set(self.n).values
        if self.stable:
            return values[self.index], values[self.index + 1]
        return values[self.index], values[self.index]


@dataclass(frozen=True)
class SValue:
    """S(p, q) as an exact bracket between critical fractions of order ``n``.

    ``lower == upper`` means the value is known exactly. ``display`` is a
    30-digit approximation and never used for decisions.
    """

    lower: Fraction
    upper: Fraction
    n: int
    display: mpmath.mpf

    @property
    def exact(self) -> Optional[Fraction]:
        return self.lower if self.lower == self.upper else None

    def __float__(self) -> float:
        return float(self.display)


def _require_triangle(ch: ChannelParams) -> None:
    if ch.region is not Region.TRIANGLE_T:
        raise DomainError(f"{ch} is not in the triangle 0 <= p <= q, p + q < 1")


def compare_s_to_fraction(ch: ChannelParams, r: Fraction) -> int:
    """Sign of ``S(ch) - r`` (-1, 0 or 1), decided with integers only."""
    _require_triangle(ch)
    r = Fraction(r)
    if not 0 <= r <= 1:
        raise DomainError(f"critical fraction must lie in [0, 1], got {r}")
    p, q = ch.p, ch.q
    if r == 0:
        # the relation degenerates at a = 0: S = 0 only on the Z-axis
        return 0 if p == 0 else 1
    a, b = r.numerator, r.denominator
    P, Dp = p.numerator, p.denominator
    Q, Dq = q.numerator, q.denominator
    lhs = P**a * (Dp - P) ** b * Dq ** (a + b)
    rhs = Q**b * (Dq - Q) ** a * Dp ** (a + b)
    return (lhs > rhs) - (lhs < rhs)


@lru_cache(maxsize=None)
def critical_set(n: int) -> CriticalSet:
    """All reduced fractions in [0, 1] whose weight is at most ``n``.

    ``a/b -> a/(a+b)`` is increasing and maps these onto the Farey fractions
    of order ``n`` in [0, 1/2], so walking the Farey sequence yields the set
    already sorted.
    """
    if n < 2:
        raise DomainError(f"critical sets are defined for n >= 2, got {n}")
    values = [Fraction(0)]
    a, b, c, d = 0, 1, 1, n
    while 2 * c <= d:
        values.append(Fraction(c, d - c))
        k = (n + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
    return CriticalSet(n, tuple(values))


def stable_count(n: int) -> int:
    """Number of stable criteria, ``1 + (1/2) * sum_{k=3}^{n} phi(k)``."""
    if n < 2:
        raise DomainError(f"stable_count is defined for n >= 2, got {n}")
    return 1 + sum(int(totient(k)) for k in range(3, n + 1)) // 2


def _locate(ch: ChannelParams, values: tuple[Fraction, ...]) -> tuple[int, bool]:
    """(i, hit): hit means S == values[i], else values[i] < S < values[i+1]."""
    lo, hi = 0, len(values) - 1
    c = compare_s_to_fraction(ch, values[lo])
    if c == 0:
        return lo, True
    c = compare_s_to_fraction(ch, values[hi])
    if c == 0:
        return hi, True
    # invariant: S(values[lo]) < S < values[hi]
    while hi - lo > 1:
        mid = (lo + hi) // 2
        c = compare_s_to_fraction(ch, values[mid])
        if c == 0:
            return mid, True
        if c > 0:
            lo = mid
        else:
            hi = mid
    return lo, False


def classify(ch: ChannelParams, n: int) -> Criterion:
    """Decision criterion of BAC^n(ch) for ``ch`` in the triangle."""
    _require_triangle(ch)
    i, hit = _locate(ch, critical_set(n).values)
    return Criterion("unstable" if hit else "stable", i, n)


def _s_display(p: Fraction, q: Fraction) -> mpmath.mpf:
    with mpmath.workdps(DISPLAY_DPS):
        if p == 0:
            return mpmath.mpf(0)
        if p == q:
            return mpmath.mpf(1)
        P, Q = mpmath.mpf(p.numerator) / p.denominator, mpmath.mpf(q.numerator) / q.denominator
        return (mpmath.log1p(-P) - mpmath.log(Q)) / (mpmath.log1p(-Q) - mpmath.log(P))


def bac_s(ch: ChannelParams, n: int = DEFAULT_HORIZON) -> SValue:
    """S(p, q) on the triangle, bracketed by the critical fractions of order ``n``."""
    _require_triangle(ch)
    values = critical_set(n).values
    i, hit = _locate(ch, values)
    upper = values[i] if hit else values[i + 1]
    return SValue(values[i], upper, n, _s_display(ch.p, ch.q))


def equivalent_by_s(ch1: ChannelParams, ch2: ChannelParams, n) -> bool:
    """n-equivalence through classification; ``n = math.inf`` checks up to
    ``DEFAULT_HORIZON`` (see :func:`separation_order`)."""
    if n == math.inf:
        return separation_order(ch1, ch2) is None
    return classify(ch1, n) == classify(ch2, n)


def separation_order(
    ch1: ChannelParams, ch2: ChannelParams, horizon: int = DEFAULT_HORIZON
) -> Optional[int]:
    """Smallest order at which the two channels fall in different criteria,
    or ``None`` when they agree for every order up to ``horizon``.

    Equal S values cannot be certified by finitely many comparisons, so
    ``None`` means "equal up to ``horizon``" and nothing more.
    """
    _require_triangle(ch1)
    _require_triangle(ch2)
    lo, hi = 2, horizon
    if classify(ch1, hi) == classify(ch2, hi):
        return None
    # inequivalence is monotone in n, so bisect on the order
    while lo < hi:
        mid = (lo + hi) // 2
        if classify(ch1, mid) == classify(ch2, mid):
            lo = mid + 1
        else:
            hi = mid
    return lo


def extended_s(ch: ChannelParams) -> mpmath.mpf:
    """S on T, ``1/S(q, p)`` on the mirror triangle, ``+inf`` on ``q = 0``."""
    if ch.region is Region.TRIANGLE_T:
        return _s_display(ch.p, ch.q)
    if ch.region is Region.TRIANGLE_T_PRIME:
        if ch.q == 0:
            return mpmath.inf
        with mpmath.workdps(DISPLAY_DPS):
            return 1 / _s_display(ch.q, ch.p)
    raise DomainError(f"{ch} is not a reasonable channel (p + q < 1)")


def channel_distance(ch1: ChannelParams, ch2: ChannelParams) -> mpmath.mpf:
    """``|ln S(ch1) - ln S(ch2)|`` for reasonable channels off the Z-axes."""
    for ch in (ch1, ch2):
        if ch.p * ch.q == 0:
            raise DomainError(f"{ch} is a Z-channel; S is 0 or infinite there")
    with mpmath.workdps(DISPLAY_DPS):
        return abs(mpmath.log(extended_s(ch1)) - mpmath.log(extended_s(ch2)))


def quasi_symmetric_boundary(n: int) -> Fraction:
    """Largest critical fraction of order ``n`` below 1."""
    if n < 3:
        raise DomainError(f"quasi-symmetric boundary needs n >= 3, got {n}")
    sign = -1 if n % 2 else 1
    return Fraction(2 * n - 3 - sign, 2 * n + 1 - sign)


def curve_totals(n: int) -> dict[str, int]:
    """Unstable curve counts on both reasonable triangles.

    Per triangle there are ``t_n + 1`` level curves; the two triangles
    share the BSC diagonal. The two Z-axes are reported separately.
    """
    per_triangle = stable_count(n) + 1
    with_axes = 2 * per_triangle - 1
    return {
        "per_triangle": per_triangle,
        "both_triangles_with_axes": with_axes,
        "both_triangles_without_axes": with_axes - 2,
    }
