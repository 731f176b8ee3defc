import random
from fractions import Fraction as F

import pytest

from bacequiv import ChannelParams, build_matrix, compare_s_to_fraction, critical_set, ordered_form
from bacequiv.oracle import (
    random_channel,
    region_representative,
    verify_symmetries,
    verify_theorem,
    verify_witness_words,
    witness_words,
)
from test_ordered_form import PUBLISHED_BSC, PUBLISHED_INTERIOR, PUBLISHED_Z


def test_n2_report_and_forms():
    rep = verify_theorem(2, 3)
    assert rep.ok and rep.regions_found == 1 and rep.curves_found == 2
    forms = {tuple(map(tuple, ordered_form(build_matrix(2, ch)).tolist())) for ch in (
        region_representative(F(0), F(1)), ChannelParams(0, F(1, 7)), ChannelParams(F(1, 11), F(1, 11)))}
    assert forms == {tuple(map(tuple, m)) for m in (PUBLISHED_INTERIOR, PUBLISHED_Z, PUBLISHED_BSC)}


@pytest.mark.parametrize("n,t", [(3, 2), (4, 3), (5, 5), (6, 6)])
def test_verify_theorem(n, t):
    rep = verify_theorem(n, 3)
    assert rep.mismatches == []
    assert rep.regions_found == t
    assert rep.curves_witnessed == t - 1
    d = rep.to_dict()
    assert d["ok"] and d["n"] == n


def test_representative_is_strictly_inside():
    values = critical_set(9).values
    for lo, hi in zip(values, values[1:]):
        for tau in (F(1, 2), F(1, 10), F(9, 10)):
            ch = region_representative(lo, hi, tau)
            assert ch.p + ch.q == tau
            assert compare_s_to_fraction(ch, lo) == 1 and compare_s_to_fraction(ch, hi) == -1


def test_witness_words_shape():
    assert witness_words(5, F(1, 2)) == ("11100", "00000", "00111")
    with pytest.raises(ValueError):
        witness_words(4, F(2, 3))


def test_witness_examples():
    ch = ChannelParams(F(1, 5), F(2, 5))
    x, y, z = witness_words(5, F(1, 2))
    m = build_matrix(5, ch)
    # Pr(x|y) = 16/125 * p^2, Pr(x|z) = 12/125 * p^2
    assert m.value(int(x, 2), int(y, 2)) == F(16, 125) * F(1, 25)
    assert m.value(int(x, 2), int(z, 2)) == F(12, 125) * F(1, 25)
    assert verify_witness_words(5, ch, F(1, 2))
    assert verify_witness_words(6, ChannelParams(F(2, 9), F(2, 9)), F(1))
    assert verify_witness_words(6, ChannelParams(0, F(3, 8)))


def test_witness_random_channels():
    rng = random.Random(3)
    for n in range(3, 9):
        for _ in range(50):
            assert verify_witness_words(n, random_channel(rng))


def test_verify_symmetries():
    assert verify_symmetries(2, 5)
    assert verify_symmetries(4, 10, seed=1)


def test_symmetry_special_points():
    bsc = build_matrix(3, ChannelParams(F(1, 5), F(1, 5))).to_fractions()
    last = 7
    for x in range(8):
        assert bsc[x] == bsc[last - x][::-1]
    noisy = ChannelParams(F(1, 4), F(3, 4))
    assert noisy.involution() == noisy


def test_swap_example_n2():
    m = build_matrix(2, ChannelParams(F(1, 10), F(1, 5))).to_fractions()
    sw = build_matrix(2, ChannelParams(F(1, 5), F(1, 10))).to_fractions()
    assert m[0] == sw[3][::-1]
