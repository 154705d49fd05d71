"""Exact arithmetic for irrational slopes given by continued fractions.

A slope 0 < alpha < 1 is described by its partial quotients
[0; a1, a2, a3, ...] (the leading 0 is implicit, so a1 >= 1).  Eventually
periodic expansions -- which cover every quadratic irrational, including
all slopes used in the test corpus -- give an unbounded, replayable term
stream.  Plain finite term lists are accepted for experimentation but a
computation that needs more precision than they carry raises
:class:`InsufficientPrecisionError`.

Every comparison here is decided by integer interval refinement against
the convergents p_n/q_n, never by floating point: even-indexed convergents
under-approximate alpha and odd-indexed ones over-approximate it, so
refining the sandwich decides any comparison that is not an exact
algebraic identity.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import numpy as np

__all__ = [
    "AffineThreshold",
    "ContinuedFraction",
    "Convergent",
    "InsufficientPrecisionError",
    "affine_sign",
    "compare_with_rational",
    "convergents",
    "floor_range",
    "floor_scaled",
    "frac_less_than",
]


class InsufficientPrecisionError(ArithmeticError):
    """Raised when a finite term stream runs out before a question is decided."""


@dataclass(frozen=True)
class Convergent:
    """One convergent p_n/q_n of a continued fraction (n = 0 is 0/1)."""

    index: int
    p: int
    q: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


@dataclass(frozen=True)
class ContinuedFraction:
    """An expansion [0; a1, a2, ...] with all terms >= 1.

    ``preperiod`` holds the leading terms, ``period`` the repeating tail;
    an empty period means the expansion is just the finite ``preperiod``
    (a rational value, usable for experiments only).  Instances are
    immutable and safe to share; the internal convergent cache only ever
    grows and caching a prefix twice is harmless.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...] = ()
    # _pq[i] holds (p, q) of convergent index i-1; seeded with the
    # recurrence anchors p_{-1}/q_{-1} = 1/0 and p_0/q_0 = 0/1.
    _pq: list = field(default_factory=lambda: [(1, 0), (0, 1)],
                      init=False, repr=False, compare=False)

    def __post_init__(self):
        pre = tuple(int(a) for a in self.preperiod)
        per = tuple(int(a) for a in self.period)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)
        if not pre and not per:
            raise ValueError("continued fraction needs at least one term")
        for a in pre + per:
            if a < 1:
                raise ValueError(f"partial quotients must be >= 1, got {a}")

    @property
    def is_unbounded(self) -> bool:
        return bool(self.period)

    def term(self, j: int) -> int:
        """Partial quotient a_j (1-based)."""
        if j < 1:
            raise ValueError("terms are indexed from 1")
        if j <= len(self.preperiod):
            return self.preperiod[j - 1]
        if self.period:
            return self.period[(j - 1 - len(self.preperiod)) % len(self.period)]
        raise InsufficientPrecisionError(
            f"insufficient continued-fraction precision: term {j} requested, "
            f"only {len(self.preperiod)} available")

    def terms(self) -> Iterator[int]:
        """Replayable stream a1, a2, ...; a fresh iterator every call."""
        yield from self.preperiod
        while self.period:
            yield from self.period

    def convergent(self, n: int) -> Convergent:
        """Convergent p_n/q_n, extending the cache as needed."""
        if n < 0:
            raise ValueError("convergent index must be >= 0")
        pq = self._pq
        while len(pq) < n + 2:
            j = len(pq) - 1  # next convergent index
            a = self.term(j)
            p = a * pq[-1][0] + pq[-2][0]
            q = a * pq[-1][1] + pq[-2][1]
            pq.append((p, q))
        p, q = pq[n + 1]
        return Convergent(n, p, q)

    def complement(self) -> "ContinuedFraction":
        """Expansion of 1 - alpha.

        [0; 1, b, ...] maps to [0; b+1, ...] and [0; a, ...] with a >= 2
        maps to [0; 1, a-1, ...]; eventual periodicity is preserved by
        moving the affected leading terms into the preperiod.
        """
        pre, per = list(self.preperiod), self.period
        while len(pre) < 2 and per:  # ensure a1 (and a2 if needed) are concrete
            pre.append(per[0])
            per = per[1:] + per[:1]
        if pre[0] == 1:
            if len(pre) < 2:
                raise InsufficientPrecisionError(
                    "insufficient continued-fraction precision: need a2 to complement")
            new_pre = [pre[1] + 1] + pre[2:]
        else:
            new_pre = [1, pre[0] - 1] + pre[1:]
        return ContinuedFraction(tuple(new_pre), tuple(per))

    def to_dict(self) -> dict:
        return {"preperiod": list(self.preperiod), "period": list(self.period)}

    @classmethod
    def from_dict(cls, d: dict) -> "ContinuedFraction":
        return cls(tuple(d.get("preperiod", ())), tuple(d.get("period", ())))


@dataclass(frozen=True)
class AffineThreshold:
    """The real number u + v*alpha with rational u, v.

    Used as the right-hand side of strict comparisons against fractional
    parts {i*alpha}; all the thresholds appearing in the Sturmian power
    construction have this shape.
    """

    u: Fraction
    v: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))


def convergents(cf: ContinuedFraction, count: int) -> list[Convergent]:
    """First ``count`` convergents p_1/q_1, ..., p_count/q_count."""
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    for n in range(1, count + 1):
        try:
            out.append(cf.convergent(n))
        except InsufficientPrecisionError:
            raise InsufficientPrecisionError(
                f"continued fraction yields only {n - 1} convergents, "
                f"{count} requested") from None
    return out


def floor_scaled(cf: ContinuedFraction, n: int) -> int:
    """Exact floor(n * alpha) for n >= 0.

    Refines the sandwich p_{2m}/q_{2m} < alpha < p_{2m+1}/q_{2m+1} until
    both bounds land in the same unit interval, which must happen because
    n*alpha is irrational for n >= 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    m = 0
    while True:
        lo = cf.convergent(2 * m)
        hi = cf.convergent(2 * m + 1)
        f_lo = (n * lo.p) // lo.q
        f_hi = (n * hi.p) // hi.q
        if f_lo == f_hi:
            return f_lo
        m += 1


def floor_range(cf: ContinuedFraction, n_max: int) -> np.ndarray:
    """floor(n * alpha) for every n in 0..n_max, as one array.

    Uses a single convergent p/q with q > n_max: then n*p mod q is never 0
    (q > n and gcd(p, q) = 1) while |n*alpha - n*p/q| < n/(q*q') < 1/q, so
    (n*p)//q is already exact for every n in range.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if n_max == 0:
        return np.zeros(1, dtype=np.int64)
    m = 1
    while cf.convergent(m).q <= n_max + 1:
        m += 1
    c = cf.convergent(m)
    if n_max * c.p < 2**62:
        ns = np.arange(n_max + 1, dtype=np.int64)
        return (ns * c.p) // c.q
    # huge partial quotients can push q far beyond n_max; fall back to ints
    return np.array([(n * c.p) // c.q for n in range(n_max + 1)], dtype=object)


def compare_with_rational(cf: ContinuedFraction, r: Fraction) -> int:
    """Sign of alpha - r for rational r; never 0 since alpha is irrational."""
    num, den = r.numerator, r.denominator
    m = 0
    while True:
        lo = cf.convergent(2 * m)
        if lo.p * den >= num * lo.q:
            return 1  # alpha > p_{2m}/q_{2m} >= r
        hi = cf.convergent(2 * m + 1)
        if hi.p * den <= num * hi.q:
            return -1  # alpha < p_{2m+1}/q_{2m+1} <= r
        m += 1


def affine_sign(cf: ContinuedFraction, coeff, const) -> int:
    """Sign of coeff*alpha + const with rational coeff, const, exactly."""
    coeff = Fraction(coeff)
    const = Fraction(const)
    if coeff == 0:
        return (const > 0) - (const < 0)
    s = compare_with_rational(cf, -const / coeff)
    return s if coeff > 0 else -s


def frac_less_than(cf: ContinuedFraction, i: int, t: AffineThreshold) -> bool:
    """Exact test of {i*alpha} < u + v*alpha.

    Rewrites the question as (i - v)*alpha < u + floor(i*alpha).  When both
    sides collapse ({i*alpha} equals u + v*alpha algebraically) there is
    nothing to refine towards, so that identity case is rejected; the
    caller must exclude it.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    f = floor_scaled(cf, i)
    w = Fraction(i) - t.v
    s = t.u + f
    if w == 0:
        if s == 0:
            raise ValueError(
                "comparison is an exact identity ({i*alpha} = u + v*alpha); "
                "the identity case must be excluded by the caller")
        return s > 0
    if w > 0:
        return compare_with_rational(cf, s / w) < 0
    return compare_with_rational(cf, s / w) > 0
