"""Ordered forms of transition matrices and n-equivalence of channels.

The ordered form replaces each entry by the number of entries in its row
that are strictly smaller. Two channels induce the same maximum likelihood
decoder on every n-block code exactly when their ordered forms agree.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np

from .channel_core import (
    ChannelParams,
    Monomial,
    Reasonableness,
    TransitionMatrix,
    build_matrix,
    eval_monomial,
    monomial_family,
    reasonableness,
)

__all__ = [
    "ordered_form",
    "equivalent",
    "equivalent_by_families",
    "is_stable_point",
    "family_sign_fingerprint",
]


def _row_ranks(keys: np.ndarray) -> np.ndarray:
    """Strict-less counts per row for an integer key array."""
    rows, cols = keys.shape
    span = int(keys.max() - keys.min()) + 1 if keys.size else 1
    shifted = (keys - keys.min()) + np.arange(rows, dtype=np.int64)[:, None] * span
    flat = np.sort(shifted, axis=None)
    ranks = np.searchsorted(flat, shifted, side="left")
    return ranks - np.arange(rows, dtype=np.int64)[:, None] * cols


def ordered_form(M) -> np.ndarray:
    """Ordered form of a ``TransitionMatrix`` or of any 2-D array of numbers.

    Comparisons are exact: transition matrices are ranked through their
    exact monomial values, other inputs (integers, ``Fraction`` objects)
    through Python comparison.
    """
    if isinstance(M, TransitionMatrix):
        return _row_ranks(M.rank_keys())
    rows = [list(r) for r in M]
    out = np.zeros((len(rows), len(rows[0]) if rows else 0), dtype=np.int64)
    for i, row in enumerate(rows):
        # dense-rank the row once; ties share a key
        ordered = sorted(set(row))
        key = {v: j for j, v in enumerate(ordered)}
        out[i] = _row_ranks(np.array([[key[v] for v in row]], dtype=np.int64))[0]
    return out


def equivalent(ch1: ChannelParams, ch2: ChannelParams, n: int) -> bool:
    """True iff BAC^n(ch1) and BAC^n(ch2) have identical ordered forms."""
    r1, r2 = reasonableness(ch1), reasonableness(ch2)
    if r1 != r2:
        return False
    if r1 is Reasonableness.NOISY:
        return True
    f1 = ordered_form(build_matrix(n, ch1))
    f2 = ordered_form(build_matrix(n, ch2))
    return bool(np.array_equal(f1, f2))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _is_interior(ch: ChannelParams) -> bool:
    return 0 < ch.p < 1 and 0 < ch.q < 1


def _signature_signs(ch: ChannelParams, n: int) -> tuple[int, ...]:
    """Signs of f - g over difference signatures (alpha, beta).

    For f, g in one weight class with a_f - a_g = alpha, b_f - b_g = beta,
    ``f/g = (p/(1-q))^alpha * ((1-p)/q)^beta``. Every pair with
    ``|alpha| + |beta| <= n`` occurs in some class; (-alpha, -beta) is the
    same comparison reversed, so only one of each is kept.
    """
    u = ch.p / (1 - ch.q)
    v = (1 - ch.p) / ch.q
    signs = []
    for alpha in range(0, n + 1):
        for beta in range(-(n - alpha), n - alpha + 1):
            if alpha == 0 and beta <= 0:
                continue
            signs.append(_sign(u**alpha * v**beta - 1))
    return tuple(signs)


def _pair_signs(ch: ChannelParams, n: int) -> tuple[int, ...]:
    signs = []
    cache: dict[Monomial, Fraction] = {}
    for k in range(n + 1):
        fam = monomial_family(n, k)
        vals = [cache.setdefault(m, eval_monomial(m, ch)) for m in fam]
        signs.extend(_sign(f - g) for f, g in combinations(vals, 2))
    return tuple(signs)


def family_sign_fingerprint(ch: ChannelParams, n: int, by_signature: bool | None = None):
    """Sign pattern of all same-weight monomial comparisons at ``ch``.

    Two channels with equal fingerprints (of the same kind) are
    n-equivalent. The signature form is only valid when ``0 < p, q < 1``.
    """
    if by_signature is None:
        by_signature = _is_interior(ch)
    if by_signature:
        return _signature_signs(ch, n)
    return _pair_signs(ch, n)


def equivalent_by_families(ch1: ChannelParams, ch2: ChannelParams, n: int) -> bool:
    """n-equivalence via weight classes of monomials; no matrix is built."""
    use_sig = _is_interior(ch1) and _is_interior(ch2)
    return family_sign_fingerprint(ch1, n, use_sig) == family_sign_fingerprint(ch2, n, use_sig)


def is_stable_point(ch: ChannelParams, n: int) -> bool:
    """True iff no two distinct same-weight monomials coincide at ``ch``."""
    return 0 not in family_sign_fingerprint(ch, n)
