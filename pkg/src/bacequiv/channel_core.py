"""Exact binary asymmetric channels and their n-fold transition matrices.

Words of length ``n`` are identified with the integers ``0 .. 2**n - 1`` by
binary expansion, most significant bit first, so ``"01001"`` is row 9.
Every transition probability is a monomial ``p^a (1-p)^b q^c (1-q)^d`` in
the crossover probabilities; matrices keep the exponents symbolically and
evaluate each distinct monomial once, exactly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

import numpy as np

from ._errors import DomainError, ResourceLimitError

__all__ = [
    "Region",
    "Reasonableness",
    "ChannelParams",
    "Monomial",
    "TransitionMatrix",
    "exponents",
    "eval_monomial",
    "build_matrix",
    "monomial_family",
    "reasonableness",
    "max_block_length",
]

MAX_N_ENV = "BACEQUIV_MAX_N"
DEFAULT_MAX_N = 10

Word = Union[str, int, Sequence[int]]


def max_block_length() -> int:
    """Matrix cap: ``$BACEQUIV_MAX_N`` if set, else 10."""
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    return int(raw)


def as_fraction(value) -> Fraction:
    """Parse ``value`` exactly. Strings may be ``"a/b"`` or decimals."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # floats are already exact dyadic rationals
        return Fraction(value)
    try:
        return Fraction(str(value).strip()) if isinstance(value, str) else Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse {value!r} as a rational number") from exc


class Region(str, Enum):
    TRIANGLE_T = "T"
    TRIANGLE_T_PRIME = "T'"
    NOISY_LINE = "noisy"
    UPPER_SQUARE = "upper"


class Reasonableness(str, Enum):
    REASONABLE = "reasonable"
    NOISY = "noisy"
    UNREASONABLE = "unreasonable"


@dataclass(frozen=True)
class ChannelParams:
    """BAC(p, q): ``Pr(1|0) = p`` and ``Pr(0|1) = q``, both exact."""

    p: Fraction
    q: Fraction

    def __init__(self, p, q):
        p, q = as_fraction(p), as_fraction(q)
        if not (0 <= p <= 1 and 0 <= q <= 1):
            raise DomainError(f"p and q must lie in [0, 1], got ({p}, {q})")
        if (p, q) in ((0, 0), (1, 1)):
            raise DomainError(f"({p}, {q}) is excluded from the parameter space")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def region(self) -> Region:
        s = self.p + self.q
        if s < 1:
            return Region.TRIANGLE_T if self.p <= self.q else Region.TRIANGLE_T_PRIME
        if s == 1:
            return Region.NOISY_LINE
        return Region.UPPER_SQUARE

    def swapped(self) -> "ChannelParams":
        return ChannelParams(self.q, self.p)

    def involution(self) -> "ChannelParams":
        """The map (p, q) -> (1 - q, 1 - p) exchanging the two half-squares."""
        return ChannelParams(1 - self.q, 1 - self.p)

    def __str__(self) -> str:
        return f"BAC({self.p}, {self.q})"


class Monomial(NamedTuple):
    """Exponents of ``p^a (1-p)^b q^c (1-q)^d``."""

    a: int
    b: int
    c: int
    d: int

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + self.d

    @property
    def weight(self) -> int:
        return self.a + self.d


def _bits(word: Word, n: int | None = None) -> tuple[int, ...]:
    if isinstance(word, str):
        if not word or set(word) - {"0", "1"}:
            raise DomainError(f"not a binary word: {word!r}")
        return tuple(int(ch) for ch in word)
    if isinstance(word, (int, np.integer)):
        if n is None:
            raise DomainError("integer words need an explicit length")
        if not 0 <= word < 2**n:
            raise DomainError(f"word {word} does not fit in {n} bits")
        return tuple((int(word) >> (n - 1 - i)) & 1 for i in range(n))
    bits = tuple(int(b) for b in word)
    if not bits or set(bits) - {0, 1}:
        raise DomainError(f"not a binary word: {word!r}")
    return bits


def exponents(x: Word, y: Word, n: int | None = None) -> Monomial:
    """Exponents of ``Pr(x | y)`` for received word ``x`` and sent word ``y``.

    Counts positions where ``(x_i, y_i)`` is ``(1,0)``, ``(0,0)``, ``(0,1)``,
    ``(1,1)`` in that order.

    >>> exponents("01001", "11101")
    Monomial(a=0, b=1, c=2, d=2)
    """
    xb, yb = _bits(x, n), _bits(y, n)
    if len(xb) != len(yb):
        raise DomainError(f"word lengths differ: {len(xb)} != {len(yb)}")
    counts = [0, 0, 0, 0]
    slot = {(1, 0): 0, (0, 0): 1, (0, 1): 2, (1, 1): 3}
    for pair in zip(xb, yb):
        counts[slot[pair]] += 1
    return Monomial(*counts)


def eval_monomial(m: Monomial, ch: ChannelParams) -> Fraction:
    p, q = ch.p, ch.q
    # Fraction(0) ** 0 == 1, which is the convention we want
    return p**m.a * (1 - p) ** m.b * q**m.c * (1 - q) ** m.d


def monomial_family(n: int, k: int) -> list[Monomial]:
    """All monomials of degree ``n`` and weight ``a + d == k``, sorted."""
    if n < 1:
        raise DomainError(f"block length must be >= 1, got {n}")
    if not 0 <= k <= n:
        raise DomainError(f"weight {k} out of range [0, {n}]")
    return [
        Monomial(a, n - k - c, c, k - a)
        for a in range(k + 1)
        for c in range(n - k + 1)
    ]


def reasonableness(ch: ChannelParams) -> Reasonableness:
    s = ch.p + ch.q
    if s < 1:
        return Reasonableness.REASONABLE
    if s == 1:
        return Reasonableness.NOISY
    return Reasonableness.UNREASONABLE


def _popcount(arr: np.ndarray) -> np.ndarray:
    return np.bitwise_count(arr).astype(np.int64)


class TransitionMatrix:
    """Transition matrix of BAC^n(p, q), ``entry (x, y) = Pr(x | y)``.

    Exponents are held as four integer arrays indexed ``[x, y]``. Values are
    exact ``Fraction`` objects evaluated once per distinct monomial; the memo
    is filled at construction so instances are read-only afterwards.
    """

    def __init__(self, n: int, ch: ChannelParams):
        self.n = n
        self.ch = ch
        size = 1 << n
        mask = size - 1
        x = np.arange(size, dtype=np.int64)[:, None]
        y = np.arange(size, dtype=np.int64)[None, :]
        self.a = _popcount(x & ~y & mask)
        self.b = _popcount(~x & ~y & mask)
        self.c = _popcount(~x & y & mask)
        self.d = _popcount(x & y)

        # index each monomial by (a, c, d); b is implied by the degree
        code = (self.a * (n + 1) + self.c) * (n + 1) + self.d
        present = np.unique(code)
        monos = [
            Monomial(a, n - a - c - d, c, d)
            for a, c, d in (
                (int(k) // (n + 1) ** 2, int(k) // (n + 1) % (n + 1), int(k) % (n + 1))
                for k in present
            )
        ]
        self._values = {m: eval_monomial(m, ch) for m in monos}

        # dense rank of every distinct value; equal values share a rank
        distinct = sorted(set(self._values.values()))
        rank_of = {v: i for i, v in enumerate(distinct)}
        lookup = np.zeros((n + 1) ** 3, dtype=np.int64)
        for k, m in zip(present, monos):
            lookup[k] = rank_of[self._values[m]]
        self._keys = lookup[code]

    @property
    def size(self) -> int:
        return 1 << self.n

    def entry(self, x: int, y: int) -> Monomial:
        return Monomial(
            int(self.a[x, y]), int(self.b[x, y]), int(self.c[x, y]), int(self.d[x, y])
        )

    def value(self, x: int, y: int) -> Fraction:
        return self._values[self.entry(x, y)]

    def monomial_values(self) -> dict[Monomial, Fraction]:
        return dict(self._values)

    def row(self, x: int) -> list[Fraction]:
        return [self.value(x, y) for y in range(self.size)]

    def to_fractions(self) -> list[list[Fraction]]:
        return [self.row(x) for x in range(self.size)]

    def rank_keys(self) -> np.ndarray:
        """Integer array ordered exactly like the matrix values."""
        return self._keys.copy()

    def column_sums(self) -> list[Fraction]:
        # group identical monomials per column before summing
        sums = []
        for y in range(self.size):
            counts: dict[Monomial, int] = {}
            for x in range(self.size):
                m = self.entry(x, y)
                counts[m] = counts.get(m, 0) + 1
            sums.append(sum((k * self._values[m] for m, k in counts.items()), Fraction(0)))
        return sums

    def __repr__(self) -> str:
        return f"TransitionMatrix(n={self.n}, ch={self.ch})"


def build_matrix(n: int, ch: ChannelParams, max_n: int | None = None) -> TransitionMatrix:
    if n < 1:
        raise DomainError(f"block length must be >= 1, got {n}")
    cap = max_block_length() if max_n is None else max_n
    if n > cap:
        raise ResourceLimitError(
            f"n={n} exceeds the matrix cap {cap} (set {MAX_N_ENV} to raise it)"
        )
    return TransitionMatrix(n, ch)
