"""Parikh vectors, Abelian/subword complexity profiles, and balance bounds.

All profiles are exact counts over the given finite prefix.  For the
infinite word they are lower bounds: a factor of the prefix is a factor of
the word, but a long enough prefix is needed before every factor of the
word shows up.  Profiles are reported for lengths n = 1..n_max; the empty
length would contribute the constant 1 and is omitted, matching the usual
convention.

Window counting is vectorized: per-letter prefix sums give every window's
Parikh vector as a difference of two slices, so distinct-vector counts per
length cost one pass over the prefix.
"""

from dataclasses import dataclass
from math import comb
from typing import Iterable, Union

import numpy as np

from .words import WordPrefix

__all__ = [
    "ComplexityProfile",
    "abelian_equivalent",
    "abelian_profile",
    "balance_bound",
    "balance_per_length",
    "max_abelian_complexity",
    "parikh",
    "parikh_classes",
    "profile",
    "subword_profile",
]

ParikhVector = tuple[int, ...]

Wordlike = Union[WordPrefix, bytes, bytearray, str, Iterable[int]]


def _coerce(word: Wordlike, alphabet_size=None) -> tuple[bytes, int]:
    """Normalize a word argument to (symbols, alphabet_size)."""
    if isinstance(word, WordPrefix):
        symbols, p = word.symbols, word.alphabet_size
    elif isinstance(word, (bytes, bytearray)):
        symbols = bytes(word)
        p = (max(symbols) + 1) if symbols else 1
    elif isinstance(word, str):
        symbols = bytes(int(c) for c in word)
        p = (max(symbols) + 1) if symbols else 1
    else:
        symbols = bytes(word)
        p = (max(symbols) + 1) if symbols else 1
    if alphabet_size is not None:
        if symbols and max(symbols) >= alphabet_size:
            raise ValueError("symbol out of range for requested alphabet")
        p = alphabet_size
    return symbols, p


def parikh(word: Wordlike, alphabet_size=None) -> ParikhVector:
    """Occurrence counts (|w|_0, ..., |w|_{p-1})."""
    symbols, p = _coerce(word, alphabet_size)
    return tuple(symbols.count(a) for a in range(p))


def abelian_equivalent(u: Wordlike, v: Wordlike, alphabet_size=None) -> bool:
    """True when u and v have identical letter counts."""
    su, pu = _coerce(u, alphabet_size)
    sv, pv = _coerce(v, alphabet_size)
    p = max(pu, pv)
    return parikh(su, p) == parikh(sv, p)


def _cum_counts(symbols: bytes, p: int) -> np.ndarray:
    """cum[a, i] = occurrences of letter a in symbols[:i]; shape (p, L+1)."""
    arr = np.frombuffer(symbols, dtype=np.uint8)
    cum = np.zeros((p, len(symbols) + 1), dtype=np.int64)
    for a in range(p):
        np.cumsum(arr == a, out=cum[a, 1:])
    return cum


def _require_range(n_max: int, length: int, n_min: int = 1):
    if not 1 <= n_min <= n_max <= length:
        raise ValueError(
            f"window lengths must satisfy 1 <= {n_min} <= {n_max} <= {length}")


def abelian_profile(w: Wordlike, n_max: int, n_min: int = 1) -> list[int]:
    """Number of distinct Parikh vectors among length-n windows, n = n_min..n_max.

    Sliding a window one step changes each letter count by at most one, so
    for a binary word the counts of a letter sweep a full integer interval
    and the distinct-vector count is max - min + 1.  Larger alphabets
    deduplicate the (encoded) count tuples per length.
    """
    symbols, p = _coerce(w)
    L = len(symbols)
    _require_range(n_max, L, n_min)
    if p == 1:
        return [1] * (n_max - n_min + 1)
    cum = _cum_counts(symbols, p)
    out = []
    for n in range(n_min, n_max + 1):
        if p == 2:
            d = cum[1, n:] - cum[1, :L - n + 1]
            out.append(int(d.max() - d.min()) + 1)
        else:
            out.append(len(_distinct_codes(cum, n, L, p - 1)))
    return out


def _distinct_codes(cum: np.ndarray, n: int, L: int, rows: int) -> np.ndarray:
    """Distinct encodings of the first ``rows`` counts over length-n windows."""
    base = n + 1
    if base ** rows >= 2**63:
        raise OverflowError("alphabet too large for packed window encoding")
    code = cum[0, n:] - cum[0, :L - n + 1]
    for a in range(1, rows):
        code = code * base + (cum[a, n:] - cum[a, :L - n + 1])
    return np.unique(code)


def parikh_classes(w: Wordlike, n: int) -> set[ParikhVector]:
    """The exact set of Parikh vectors of the length-n windows."""
    symbols, p = _coerce(w)
    L = len(symbols)
    _require_range(n, L)
    cum = _cum_counts(symbols, p)
    codes = _distinct_codes(cum, n, L, p)
    base = n + 1
    classes = set()
    for code in codes.tolist():
        vec = []
        for _ in range(p):
            vec.append(code % base)
            code //= base
        classes.add(tuple(reversed(vec)))
    return classes


def subword_profile(w: Wordlike, n_max: int, n_min: int = 1) -> list[int]:
    """Number of distinct length-n factors, n = n_min..n_max.

    Builds rank tables for power-of-two window lengths by doubling (each
    window is ranked by its two half-windows), then ranks an arbitrary
    length n by two overlapping power-of-two windows that cover it.  Exact:
    equal codes mean equal windows, no hashing involved.
    """
    symbols, p = _coerce(w)
    L = len(symbols)
    _require_range(n_max, L, n_min)
    arr = np.frombuffer(symbols, dtype=np.uint8).astype(np.int64)
    mult = L + 1  # ranks are < L+1, so pairs pack into int64 collision-free
    levels = [arr]
    j_top = (n_max).bit_length() - 1
    for j in range(1, j_top + 1):
        half = 1 << (j - 1)
        prev = levels[j - 1]
        k = L - (1 << j) + 1
        codes = prev[:k] * mult + prev[half:half + k]
        _, inv = np.unique(codes, return_inverse=True)
        levels.append(inv)
    out = []
    for n in range(n_min, n_max + 1):
        j = n.bit_length() - 1
        t = 1 << j
        k = L - n + 1
        lev = levels[j]
        codes = lev[:k] * mult + lev[n - t:n - t + k]
        out.append(int(np.unique(codes).size))
    return out


def balance_per_length(w: Wordlike, n_max: int, n_min: int = 1) -> list[int]:
    """For each n, the largest per-letter count spread over length-n windows."""
    symbols, p = _coerce(w)
    L = len(symbols)
    _require_range(n_max, L, n_min)
    cum = _cum_counts(symbols, p)
    out = []
    for n in range(n_min, n_max + 1):
        c = 0
        for a in range(p):
            d = cum[a, n:] - cum[a, :L - n + 1]
            c = max(c, int(d.max() - d.min()))
        out.append(c)
    return out


def balance_bound(w: Wordlike, n_max: int) -> int:
    """Minimal C such that the prefix is C-balanced at window lengths <= n_max."""
    return max(balance_per_length(w, n_max))


def max_abelian_complexity(n: int, k: int) -> int:
    """Compositions of n into k non-negative parts: the ceiling no Abelian
    complexity over a k-letter alphabet can exceed at length n."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return comb(n + k - 1, k - 1)


@dataclass(frozen=True)
class ComplexityProfile:
    """Exact complexity data of one prefix for lengths 1..n_max."""

    n_max: int
    prefix_len: int
    rho_ab: tuple[int, ...]
    rho: Union[tuple[int, ...], None]
    balance_running: tuple[int, ...]

    @property
    def balance(self) -> int:
        """Minimal observed balance constant over the checked range."""
        return self.balance_running[-1]


def profile(w: Wordlike, n_max: int, include_subword: bool = True) -> ComplexityProfile:
    """Assemble the Abelian profile, optional subword profile, and running
    balance of one prefix."""
    symbols, _ = _coerce(w)
    rho_ab = abelian_profile(w, n_max)
    rho = subword_profile(w, n_max) if include_subword else None
    running = np.maximum.accumulate(balance_per_length(w, n_max))
    return ComplexityProfile(
        n_max=n_max,
        prefix_len=len(symbols),
        rho_ab=tuple(rho_ab),
        rho=tuple(rho) if rho is not None else None,
        balance_running=tuple(int(x) for x in running),
    )
