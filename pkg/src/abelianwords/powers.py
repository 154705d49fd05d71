"""Finding and verifying Abelian k-powers.

Three routes are provided and every returned occurrence is re-verified
before it leaves this module:

* a brute-force scan over candidate periods (the oracle the other two are
  checked against),
* the arithmetic-progression construction: relabel letters with weights
  whose small combinations only vanish trivially mod N, take running sums
  mod N, and look for a monochromatic progression,
* the exact locator for characteristic words, which classifies the
  fractional part {i*alpha} and reads the Abelian period off a convergent
  denominator, so each position gets one of just two possible periods.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .complexity import ParikhVector, parikh
from .contfrac import (AffineThreshold, ContinuedFraction, affine_sign,
                       floor_scaled, frac_less_than)
from .words import WordPrefix, characteristic_prefix

__all__ = [
    "AbelianPowerOccurrence",
    "CongoWeights",
    "PeriodPair",
    "WeightsTooSmallError",
    "congo_weights",
    "min_abelian_period",
    "sturmian_period_pair",
    "sturmian_power_at",
    "vdw_power_search",
    "verify_abelian_power",
]

DEFAULT_DELTA = AffineThreshold(0, Fraction(1, 2))  # delta = alpha/2


class WeightsTooSmallError(ValueError):
    """The weight bound M was below the word's balance constant."""


@dataclass(frozen=True)
class AbelianPowerOccurrence:
    """Certificate of k consecutive Abelian-equivalent blocks.

    The blocks are w[start + j*period : start + (j+1)*period] for
    j = 0..exponent-1 (0-based positions) and all share ``block_parikh``.
    """

    start: int
    period: int
    exponent: int
    block_parikh: ParikhVector

    def to_dict(self) -> dict:
        return {"start": self.start, "period": self.period,
                "exponent": self.exponent,
                "block_parikh": list(self.block_parikh)}


@dataclass(frozen=True)
class CongoWeights:
    """Letter weights whose bounded combinations vanish mod N only trivially.

    Invariant: sum(c_i * alphas_i) = 0 (mod N) with all |c_i| <= M forces
    every c_i = 0.
    """

    M: int
    r: int
    alphas: tuple[int, ...]
    N: int


def verify_abelian_power(w: WordPrefix, start: int, ell: int, k: int) -> bool:
    """True iff the k length-ell blocks from ``start`` share one Parikh vector."""
    if ell < 1 or k < 1 or start < 0:
        raise ValueError("need start >= 0, ell >= 1, k >= 1")
    if start + k * ell > len(w):
        raise ValueError(
            f"occurrence [{start}, {start + k * ell}) exceeds prefix length {len(w)}")
    p = w.alphabet_size
    first = parikh(w.symbols[start:start + ell], p)
    for j in range(1, k):
        lo = start + j * ell
        if parikh(w.symbols[lo:lo + ell], p) != first:
            return False
    return True


def min_abelian_period(w: WordPrefix, start: int, k: int,
                       ell_max: Union[int, None] = None) -> Union[int, None]:
    """Smallest ell <= ell_max making an Abelian k-power at ``start``.

    Brute-force oracle: scans ell = 1, 2, ...; None when no candidate fits
    inside the prefix.
    """
    if start < 0 or k < 1:
        raise ValueError("need start >= 0 and k >= 1")
    cap = (len(w) - start) // k
    if ell_max is None:
        ell_max = cap
    for ell in range(1, min(ell_max, cap) + 1):
        if verify_abelian_power(w, start, ell, k):
            return ell
    return None


def congo_weights(M: int, r: int) -> CongoWeights:
    """Minimal admissible weights: each is one more than M times the sum of
    the previous ones, and so is the modulus."""
    if M < 1 or r < 1:
        raise ValueError("need M >= 1 and r >= 1")
    alphas = [1]
    for _ in range(r - 1):
        alphas.append(M * sum(alphas) + 1)
    return CongoWeights(M, r, tuple(alphas), M * sum(alphas) + 1)


def vdw_power_search(w: WordPrefix, k: int, weights: CongoWeights
                     ) -> Union[AbelianPowerOccurrence, None]:
    """Abelian k-power via a monochromatic progression of running sums.

    Letters are relabeled with the weights, nu(t) = (sum of the first t
    weights) mod N, and the scan looks for the smallest s, then the
    smallest t0, with nu(t0) = nu(t0+s) = ... = nu(t0+ks).  Equal block
    sums mod N force equal Parikh vectors provided M bounds the word's
    balance constant, which the caller guarantees; the occurrence is
    verified before it is returned either way.

    Returns None when no progression fits inside the prefix.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if weights.r != w.alphabet_size:
        raise ValueError(
            f"weights cover {weights.r} letters, word uses {w.alphabet_size}")
    L = len(w)
    if L < k:
        return None
    table = np.asarray(weights.alphas, dtype=np.int64)
    nu = np.zeros(L + 1, dtype=np.int64)
    np.cumsum(table[w.as_array()], out=nu[1:])
    nu %= weights.N
    for s in range(1, L // k + 1):
        width = L - k * s + 1
        ok = nu[:width] == nu[s:s + width]
        for j in range(2, k + 1):
            if not ok.any():
                break
            ok &= nu[j * s:j * s + width] == nu[:width]
        hits = np.flatnonzero(ok)
        if hits.size:
            t0 = int(hits[0])
            if not verify_abelian_power(w, t0, s, k):
                raise WeightsTooSmallError(
                    f"nu-progression at (t0={t0}, s={s}) has non-equivalent "
                    f"blocks: M={weights.M} is below the word's balance constant")
            return AbelianPowerOccurrence(
                t0, s, k, parikh(w.symbols[t0:t0 + s], w.alphabet_size))
    return None


@dataclass(frozen=True)
class PeriodPair:
    """The two Abelian periods available at every position of a
    characteristic word, read off consecutive convergent denominators."""

    ell1: int
    ell2: int
    n_even: int


def _check_delta(alpha: ContinuedFraction, delta: AffineThreshold):
    # 0 < delta < alpha, with delta = u + v*alpha
    if affine_sign(alpha, delta.v, delta.u) <= 0:
        raise ValueError("delta must be positive")
    if affine_sign(alpha, delta.v - 1, delta.u) >= 0:
        raise ValueError("delta must be < alpha")


def sturmian_period_pair(alpha: ContinuedFraction, k: int,
                         delta: AffineThreshold = DEFAULT_DELTA) -> PeriodPair:
    """Smallest even n with q_{n+1} * min(delta, alpha - delta) > k, and the
    period pair (q_n, q_{n+1}) it yields.

    Requires 0 < alpha < 1/2; complement the slope first otherwise.  The
    threshold ``delta`` denotes u + v*alpha and must satisfy
    0 < delta < alpha, so all decisions stay exact.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if affine_sign(alpha, 1, Fraction(-1, 2)) >= 0:
        raise ValueError("slope must be < 1/2; complement it first")
    _check_delta(alpha, delta)
    # min(delta, alpha - delta) as a rational-affine pair (mu, mv)
    if affine_sign(alpha, 2 * delta.v - 1, 2 * delta.u) < 0:
        mu, mv = delta.u, delta.v
    else:
        mu, mv = -delta.u, 1 - delta.v
    n = 0
    while True:
        q_next = alpha.convergent(n + 1).q
        if affine_sign(alpha, q_next * mv, q_next * mu - k) > 0:
            return PeriodPair(alpha.convergent(n).q, q_next, n)
        n += 2


def _frac_lt(alpha: ContinuedFraction, i: int, u, v) -> bool:
    """{i*alpha} < u + v*alpha, treating an exact identity as 'not less'."""
    u, v = Fraction(u), Fraction(v)
    if i == v and u + floor_scaled(alpha, i) == 0:
        return False
    return frac_less_than(alpha, i, AffineThreshold(u, v))


def sturmian_power_at(alpha: ContinuedFraction, i: int, k: int,
                      delta: AffineThreshold = DEFAULT_DELTA,
                      check_internal: bool = False) -> AbelianPowerOccurrence:
    """Verified Abelian k-power at 1-based position i of the characteristic
    word of slope alpha (0-based start i-1 of the certificate).

    Classifies {i*alpha} exactly: away from the critical points alpha and 1
    (Case 1) the period is q_n, inside the width-delta windows below them
    (Case 2) it is q_{n+1}, with n from :func:`sturmian_period_pair`.
    Slopes above 1/2 are handled on the complement, whose characteristic
    word is the letter-exchange of the original; positions and periods
    carry over unchanged.
    """
    if i < 1 or k < 1:
        raise ValueError("need i >= 1 and k >= 1")
    work = alpha if affine_sign(alpha, 1, Fraction(-1, 2)) < 0 else alpha.complement()
    pair = sturmian_period_pair(work, k, delta)
    du, dv = delta.u, delta.v
    # interval boundaries: alpha - delta, alpha, 1 - delta
    if _frac_lt(work, i, -du, 1 - dv):
        case1 = True
    elif _frac_lt(work, i, 0, 1):
        case1 = False
    elif _frac_lt(work, i, 1 - du, -dv):
        case1 = True
    else:
        case1 = False
    ell = pair.ell1 if case1 else pair.ell2
    length = i - 1 + k * ell
    if check_internal:
        cw = characteristic_prefix(work, length)
        marks = {cw.symbols[i + j * ell - 2] for j in range(1, k + 1)}
        if len(marks) > 1:
            raise AssertionError(
                "block-end letters along the progression disagree; "
                "the case classification is inconsistent")
    word = characteristic_prefix(alpha, length)
    if not verify_abelian_power(word, i - 1, ell, k):
        raise AssertionError(
            f"constructed occurrence failed verification at i={i}, k={k}, "
            f"ell={ell}; exact-arithmetic invariant broken")
    return AbelianPowerOccurrence(
        i - 1, ell, k, parikh(word.symbols[i - 1:i - 1 + ell], 2))
