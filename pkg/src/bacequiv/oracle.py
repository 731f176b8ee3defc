"""Brute-force cross-checks of the analytic classification.

Everything here goes through full transition matrices and ordered forms, or
through explicit witness words, and only uses the BAC-function to *choose*
sample points. Results are collected into reports rather than raised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .channel_core import ChannelParams, Region, build_matrix, eval_monomial, exponents
from .criteria import compare_s_to_fraction, critical_set, stable_count
from .ordered_form import ordered_form

__all__ = [
    "VerificationReport",
    "region_representative",
    "verify_theorem",
    "verify_witness_words",
    "verify_symmetries",
    "witness_words",
    "random_channel",
]

# anti-diagonals used for representatives, in order of use
_TAUS = (
    Fraction(1, 2), Fraction(1, 3), Fraction(3, 4), Fraction(1, 5),
    Fraction(2, 3), Fraction(9, 10), Fraction(1, 10), Fraction(3, 5),
)


@dataclass
class VerificationReport:
    n: int
    regions_expected: int
    regions_found: int
    curves_found: int
    curves_witnessed: int
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.regions_found == self.regions_expected

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "ok": self.ok,
            "regions_expected": self.regions_expected,
            "regions_found": self.regions_found,
            "curves_found": self.curves_found,
            "curves_witnessed": self.curves_witnessed,
            "mismatches": sorted(self.mismatches),
        }


def region_representative(
    lower: Fraction, upper: Fraction, tau: Fraction = Fraction(1, 2)
) -> ChannelParams:
    """Rational point on ``p + q = tau`` with ``lower < S < upper`` exactly.

    Bisects p over ``[0, tau/2]`` with rational midpoints; S is monotone
    along the anti-diagonal so the open target interval is always reached.
    """
    lo, hi = Fraction(0), tau / 2
    while True:
        mid = (lo + hi) / 2
        ch = ChannelParams(mid, tau - mid)
        if compare_s_to_fraction(ch, lower) <= 0:
            lo = mid
        elif compare_s_to_fraction(ch, upper) >= 0:
            hi = mid
        else:
            return ch


def _key(form: np.ndarray) -> bytes:
    return form.tobytes()


def verify_theorem(n: int, reps_per_region: int = 3) -> VerificationReport:
    """Check that the level curves of order ``n`` carve out exactly the
    criteria seen by ordered forms.

    Stable regions: ``reps_per_region`` rational points each, which must
    share an ordered form inside a region and differ across regions.
    Z-axis and BSC diagonal: exact on-curve points, which must agree along
    the curve and differ from every stable form. Remaining curves have no
    guaranteed rational points; for those the witness-word comparison is
    checked on both sides of the curve.
    """
    values = critical_set(n).values
    t = len(values) - 1
    mismatches: list[str] = []
    reps_per_region = max(1, min(reps_per_region, len(_TAUS)))

    stable_forms: dict[bytes, int] = {}
    for i in range(t):
        seen = set()
        for tau in _TAUS[:reps_per_region]:
            ch = region_representative(values[i], values[i + 1], tau)
            seen.add(_key(ordered_form(build_matrix(n, ch))))
        if len(seen) != 1:
            mismatches.append(f"region {i}: {len(seen)} distinct ordered forms")
        for k in seen:
            if k in stable_forms and stable_forms[k] != i:
                mismatches.append(f"regions {stable_forms[k]} and {i} share an ordered form")
            stable_forms.setdefault(k, i)

    curve_points = {
        0: [ChannelParams(0, Fraction(j, 7)) for j in (1, 3, 6)],
        t: [ChannelParams(Fraction(j, 11), Fraction(j, 11)) for j in (1, 3, 5)],
    }
    curve_forms: dict[bytes, int] = {}
    for idx, points in curve_points.items():
        seen = {_key(ordered_form(build_matrix(n, ch))) for ch in points}
        if len(seen) != 1:
            mismatches.append(f"curve {values[idx]}: {len(seen)} distinct ordered forms")
        for k in seen:
            if k in stable_forms:
                mismatches.append(f"curve {values[idx]} shares a form with region {stable_forms[k]}")
            if k in curve_forms and curve_forms[k] != idx:
                mismatches.append(f"curves {values[curve_forms[k]]} and {values[idx]} coincide")
            curve_forms.setdefault(k, idx)

    witnessed = 0
    for i in range(1, t):
        r = values[i]
        below = region_representative(values[i - 1], r)
        above = region_representative(r, values[i + 1])
        if _witness_sign(n, below, r) >= 0 or _witness_sign(n, above, r) <= 0:
            mismatches.append(f"curve {r}: witness words do not separate its sides")
        else:
            witnessed += 1

    return VerificationReport(
        n=n,
        regions_expected=stable_count(n),
        regions_found=len(stable_forms),
        curves_found=len(curve_forms),
        curves_witnessed=witnessed,
        mismatches=mismatches,
    )


def witness_words(n: int, r: Fraction) -> tuple[str, str, str]:
    """Words ``x = 1^(a+e) 0^b``, ``y = 0^n``, ``z = 0^e 1^(a+b)`` with
    ``e = n - a - b``, for ``r = a/b``."""
    r = Fraction(r)
    a, b = r.numerator, r.denominator
    eta = n - a - b
    if eta < 0:
        raise ValueError(f"weight of {r} exceeds n={n}")
    return "1" * (a + eta) + "0" * b, "0" * n, "0" * eta + "1" * (a + b)


def _witness_sign(n: int, ch: ChannelParams, r: Fraction) -> int:
    """Sign of ``Pr(x|y) - Pr(x|z)`` for the witness words of ``r``."""
    x, y, z = witness_words(n, r)
    pxy = eval_monomial(exponents(x, y), ch)
    pxz = eval_monomial(exponents(x, z), ch)
    return (pxy > pxz) - (pxy < pxz)


def verify_witness_words(n: int, ch: ChannelParams, r: Optional[Fraction] = None) -> bool:
    """``Pr(x|y) <= Pr(x|z)`` iff ``S <= r``, with equality iff equality.

    Checks a single ``r`` or, by default, every critical value of order ``n``.
    On the Z-axis with ``a + b < n`` both probabilities are zero, so only the
    non-strict half is checked there.
    """
    targets = [Fraction(r)] if r is not None else list(critical_set(n).values)
    for t in targets:
        w, c = _witness_sign(n, ch, t), compare_s_to_fraction(ch, t)
        eta = n - t.numerator - t.denominator
        if ch.p == 0 and eta > 0:
            # both probabilities carry p^eta and vanish; only <= survives
            if (w <= 0) != (c <= 0):
                return False
        elif w != c:
            return False
    return True


def random_channel(rng: random.Random, max_den: int = 60, region: Region = Region.TRIANGLE_T) -> ChannelParams:
    """Random rational channel with small denominators in ``region``."""
    while True:
        p = Fraction(rng.randint(0, max_den), rng.randint(1, max_den))
        q = Fraction(rng.randint(0, max_den), rng.randint(1, max_den))
        if p > 1 or q > 1 or (p, q) in ((0, 0), (1, 1)):
            continue
        ch = ChannelParams(p, q)
        if region is None or ch.region is region:
            return ch


def verify_symmetries(n: int, trials: int = 20, seed: int = 0) -> bool:
    """Row-reversal identities on random channels.

    Swap: row ``x`` of M(p,q) is row ``~x`` of M(q,p) reversed.
    Involution: row ``x`` of M(p,q) is row ``x`` of M(1-q,1-p) reversed.
    """
    rng = random.Random(seed)
    for _ in range(trials):
        ch = random_channel(rng, region=None)
        m = build_matrix(n, ch).to_fractions()
        sw = build_matrix(n, ch.swapped()).to_fractions()
        inv = build_matrix(n, ch.involution()).to_fractions()
        last = (1 << n) - 1
        for x in range(1 << n):
            if m[x] != sw[last - x][::-1] or m[x] != inv[x][::-1]:
                return False
    return True
