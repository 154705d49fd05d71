"""Executable checkers for the structural claims about specific words.

Each checker examines a finite prefix and reports pass/fail with an
independently re-checkable witness on failure.  A verdict is always a
statement about the prefix that was inspected: aperiodicity and other
infinite-word hypotheses cannot be decided from a prefix, so a pass means
"consistent with the claim on this prefix", never more.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

from .complexity import abelian_profile, parikh
from .words import WordPrefix, WordRecipe, prefix_of

__all__ = [
    "CheckReport",
    "MuDecomposition",
    "mu_preimage_decompose",
    "periodicity_via_parikh",
    "rauzy_constant3_check",
    "special_factor_witnesses",
    "tm_profile_check",
]

DEFAULT_MARGIN = 64


@dataclass(frozen=True)
class CheckReport:
    claim: str
    range_checked: str
    passed: bool
    witness: Union[dict, None] = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def tm_profile_check(w: WordPrefix, n_max: int,
                     margin: int = DEFAULT_MARGIN) -> CheckReport:
    """Check the alternating profile rho_ab(n) = 2 (n odd) / 3 (n even)."""
    if len(w) < margin * n_max:
        raise ValueError(
            f"prefix of {len(w)} symbols is shorter than the required "
            f"margin {margin} * {n_max}")
    prof = abelian_profile(w, n_max)
    for n in range(1, n_max + 1):
        expected = 2 if n % 2 else 3
        if prof[n - 1] != expected:
            return CheckReport(
                "thue-morse-profile", f"1..{n_max}", False,
                {"n": n, "expected": expected, "actual": prof[n - 1]})
    return CheckReport("thue-morse-profile", f"1..{n_max}", True)


@dataclass(frozen=True)
class MuDecomposition:
    """One way to read a binary word as (letter +) image under 0->01, 1->10."""

    offset: int
    prepended: Union[int, None]
    core: bytes  # the decoded pre-image prefix
    dangling_dropped: bool


def mu_preimage_decompose(w: WordPrefix) -> list[MuDecomposition]:
    """All ways to parse w as mu(w'), 0 mu(w') or 1 mu(w').

    Both alignments are tried: at offset 0 the word itself must split into
    blocks 01/10, at offset 1 the first letter is taken as prepended.  A
    trailing unpaired letter is allowed (prefixes truncate mid-block) and
    flagged.  The empty list means no alignment works.
    """
    if w.alphabet_size > 2:
        raise ValueError("word must be binary")
    s = w.symbols
    out = []
    for offset in (0, 1):
        if offset > len(s):
            break
        core = bytearray()
        ok = True
        i = offset
        while i + 1 < len(s):
            a, b = s[i], s[i + 1]
            if a == b:
                ok = False
                break
            core.append(a)
            i += 2
        if ok:
            out.append(MuDecomposition(
                offset=offset,
                prepended=s[0] if offset == 1 else None,
                core=bytes(core),
                dangling_dropped=i < len(s)))
    return out


def periodicity_via_parikh(w: WordPrefix, p: int) -> CheckReport:
    """Period-p test: all length-p windows share one Parikh vector.

    Cross-asserted against the direct w[i] == w[i+p] comparison; for a
    finite word the two are equivalent because sliding a window one step
    swaps exactly the two letters that the direct test compares.
    """
    if p < 1:
        raise ValueError("period must be >= 1")
    if len(w) < p + 1:
        raise ValueError(f"need at least {p + 1} symbols to test period {p}")
    arr = w.as_array()
    mism = np.flatnonzero(arr[:-p] != arr[p:])
    parikh_verdict = abelian_profile(w, p)[p - 1] == 1
    direct_verdict = mism.size == 0
    if parikh_verdict != direct_verdict:
        raise AssertionError("Parikh and direct periodicity tests disagree")
    if direct_verdict:
        return CheckReport("periodicity", f"p={p}", True)
    i = int(mism[0])
    return CheckReport(
        "periodicity", f"p={p}", False,
        {"position": i,
         "window_a": w.symbols[i:i + p],
         "window_b": w.symbols[i + 1:i + 1 + p],
         "parikh_a": parikh(w.symbols[i:i + p], w.alphabet_size),
         "parikh_b": parikh(w.symbols[i + 1:i + 1 + p], w.alphabet_size)})


def special_factor_witnesses(w: WordPrefix, k: int):
    """First length-k factor of shape 0...1 and first of shape 1...0.

    Returns ((pos, factor), (pos, factor)) or None when either shape is
    missing, which for long prefixes signals a (eventually) periodic word.
    """
    if w.alphabet_size > 2:
        raise ValueError("word must be binary")
    if k < 2:
        raise ValueError("k must be >= 2")
    if len(w) < k:
        return None
    arr = w.as_array()
    heads, tails = arr[:len(w) - k + 1], arr[k - 1:]
    u_hits = np.flatnonzero((heads == 0) & (tails == 1))
    v_hits = np.flatnonzero((heads == 1) & (tails == 0))
    if not (u_hits.size and v_hits.size):
        return None
    i, j = int(u_hits[0]), int(v_hits[0])
    return ((i, w.symbols[i:i + k]), (j, w.symbols[j:j + k]))


def rauzy_constant3_check(recipe: WordRecipe, n_max: int,
                          prefix_len: Union[int, None] = None,
                          margin: int = DEFAULT_MARGIN) -> CheckReport:
    """Check rho_ab(n) = 3 for n = 1..n_max on a prefix of the recipe."""
    if prefix_len is None:
        prefix_len = margin * n_max
    w = prefix_of(recipe, prefix_len)
    prof = abelian_profile(w, n_max)
    for n in range(1, n_max + 1):
        if prof[n - 1] != 3:
            return CheckReport(
                "constant-abelian-3", f"1..{n_max}", False,
                {"n": n, "expected": 3, "actual": prof[n - 1]})
    return CheckReport("constant-abelian-3", f"1..{n_max}", True)
