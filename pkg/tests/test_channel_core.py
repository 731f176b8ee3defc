from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from bacequiv import (
    ChannelParams,
    DomainError,
    Monomial,
    Reasonableness,
    Region,
    ResourceLimitError,
    build_matrix,
    eval_monomial,
    exponents,
    monomial_family,
    reasonableness,
)
from conftest import channels


@pytest.mark.parametrize("x,y,expected", [
    ("01001", "11101", (0, 1, 2, 2)),
    ("00000", "00000", (0, 5, 0, 0)),
    ("111", "000", (3, 0, 0, 0)),
    ([1, 0], [0, 1], (1, 0, 1, 0)),
])
def test_exponents(x, y, expected):
    assert exponents(x, y) == Monomial(*expected)


def test_exponents_integer_words_msb_first():
    # row 9 = 01001, column 29 = 11101
    assert exponents(9, 29, n=5) == Monomial(0, 1, 2, 2)


def test_exponents_length_mismatch():
    with pytest.raises(DomainError):
        exponents("010", "01")


def test_eval_monomial():
    ch = ChannelParams(F(1, 2), F(1, 4))
    assert eval_monomial(Monomial(0, 1, 2, 2), ch) == F(9, 512)
    z = ChannelParams(0, F(2, 7))
    assert eval_monomial(Monomial(0, 5, 0, 0), z) == 1
    assert eval_monomial(Monomial(1, 0, 0, 0), z) == 0


def test_matrix_n1():
    p, q = F(1, 7), F(2, 9)
    m = build_matrix(1, ChannelParams(p, q)).to_fractions()
    assert m == [[1 - p, q], [p, 1 - q]]


def test_matrix_n2_matches_written_out_form():
    p, q = F(1, 10), F(1, 5)
    m = build_matrix(2, ChannelParams(p, q)).to_fractions()
    expected = [
        [(1 - p) ** 2, (1 - p) * q, (1 - p) * q, q**2],
        [(1 - p) * p, (1 - p) * (1 - q), p * q, q * (1 - q)],
        [(1 - p) * p, p * q, (1 - p) * (1 - q), q * (1 - q)],
        [p**2, p * (1 - q), p * (1 - q), (1 - q) ** 2],
    ]
    assert m == expected


def test_matrix_cap(monkeypatch):
    ch = ChannelParams(F(1, 4), F(1, 3))
    with pytest.raises(ResourceLimitError):
        build_matrix(11, ch)
    with pytest.raises(ResourceLimitError):
        build_matrix(3, ch, max_n=2)
    monkeypatch.setenv("BACEQUIV_MAX_N", "2")
    with pytest.raises(ResourceLimitError):
        build_matrix(3, ch)


@pytest.mark.parametrize("n", range(1, 9))
def test_column_sums_are_one(n):
    for ch in (ChannelParams(F(1, 4), F(1, 4)), ChannelParams(F(3, 17), F(5, 11)),
               ChannelParams(F(9, 10), F(2, 3))):
        assert all(s == 1 for s in build_matrix(n, ch).column_sums())


@pytest.mark.parametrize("n,k,expected", [
    (2, 0, {(0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0)}),
    (1, 1, {(1, 0, 0, 0), (0, 0, 0, 1)}),
])
def test_monomial_family(n, k, expected):
    assert set(monomial_family(n, k)) == expected


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_monomial_family_size(nk):
    n, k = nk
    fam = monomial_family(n, k)
    assert len(fam) == len(set(fam)) == (k + 1) * (n - k + 1)
    assert all(m.n == n and m.weight == k for m in fam)


def test_monomial_family_range():
    with pytest.raises(DomainError):
        monomial_family(3, 4)


@pytest.mark.parametrize("p,q,tag", [
    ("1/4", "1/2", Reasonableness.REASONABLE),
    ("1/2", "1/2", Reasonableness.NOISY),
    ("3/4", "1/2", Reasonableness.UNREASONABLE),
])
def test_reasonableness(p, q, tag):
    assert reasonableness(ChannelParams(p, q)) is tag


@pytest.mark.parametrize("p,q,region", [
    ("1/10", "1/5", Region.TRIANGLE_T),
    ("1/4", "1/4", Region.TRIANGLE_T),
    ("1/5", "1/10", Region.TRIANGLE_T_PRIME),
    ("1/4", "3/4", Region.NOISY_LINE),
    ("0.9", "0.5", Region.UPPER_SQUARE),
])
def test_region_tag(p, q, region):
    assert ChannelParams(p, q).region is region


@pytest.mark.parametrize("p,q", [(0, 0), (1, 1), ("-1/2", "1/2"), ("1/2", "3/2"), ("x", "1")])
def test_invalid_channels(p, q):
    with pytest.raises(DomainError):
        ChannelParams(p, q)


def test_decimal_and_fraction_parse_equal():
    assert ChannelParams("0.125", "0.5") == ChannelParams("1/8", "1/2")


@settings(max_examples=30, deadline=None)
@given(channels(), st.integers(1, 6))
def test_row_weights_and_hamming(ch, n):
    m = build_matrix(n, ch)
    for x in range(m.size):
        weights = {m.entry(x, y).weight for y in range(m.size)}
        assert weights == {bin(x).count("1")}


@settings(max_examples=25, deadline=None)
@given(channels(), st.integers(1, 6))
def test_swap_and_involution_row_reversal(ch, n):
    m = build_matrix(n, ch).to_fractions()
    sw = build_matrix(n, ch.swapped()).to_fractions()
    inv = build_matrix(n, ch.involution()).to_fractions()
    last = (1 << n) - 1
    for x in range(1 << n):
        assert m[x] == sw[last - x][::-1]
        assert m[x] == inv[x][::-1]
