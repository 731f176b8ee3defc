from fractions import Fraction

import pytest
from hypothesis import strategies as st

from bacequiv import ChannelParams

ACCEPTANCE_LINES: list[str] = []


@st.composite
def fractions01(draw, max_den=40):
    den = draw(st.integers(1, max_den))
    return Fraction(draw(st.integers(0, den)), den)


@st.composite
def channels(draw, max_den=40, region=None):
    """Rational channels; ``region`` is "T", "reasonable" or None (any)."""
    p = draw(fractions01(max_den))
    q = draw(fractions01(max_den))
    if region == "T":
        p, q = min(p, q), max(p, q)
        if p + q >= 1:
            p, q = p / 3, q / 3
    elif region == "reasonable" and p + q >= 1:
        p, q = p / 3, q / 3
    if (p, q) in ((0, 0), (1, 1)):
        q = Fraction(1, 3)
    return ChannelParams(p, q)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
