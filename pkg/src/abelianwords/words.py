"""Finite prefixes of infinite words, built from declarative recipes.

Alphabets are always {0, ..., p-1}; symbols are stored as ``bytes`` so
prefixes are compact, immutable and hashable.  Every generator records the
recipe that produced it, and regenerating from the recipe gives the
identical prefix.  All public indexing is 0-based; the characteristic
word's classical 1-based positions are shifted internally, so public
position j holds the letter the classical definition assigns to j+1.
"""

import json
from dataclasses import dataclass
from typing import Union

import numpy as np

from .contfrac import ContinuedFraction, floor_range

__all__ = [
    "BudgetError",
    "Champernowne",
    "Characteristic",
    "DEFAULT_SYMBOL_BUDGET",
    "Explicit",
    "FixedPoint",
    "Hubert",
    "LiteralPrepend",
    "MaxComplexity",
    "Morphism",
    "Periodic",
    "WordPrefix",
    "WordRecipe",
    "apply_morphism",
    "champernowne_prefix",
    "characteristic_prefix",
    "fixed_point",
    "hubert_ternary",
    "hubert_transform",
    "max_complexity_prefix",
    "prefix_of",
    "recipe_from_dict",
    "recipe_from_json",
    "recipe_to_dict",
    "CONSTANT3",
    "DOUBLING",
    "FIBONACCI",
    "THUE_MORSE",
]

DEFAULT_SYMBOL_BUDGET = 1 << 26

_TO_DIGITS = bytes.maketrans(bytes(range(10)), b"0123456789")
_FROM_DIGITS = bytes.maketrans(b"0123456789", bytes(range(10)))


class BudgetError(RuntimeError):
    """Requested prefix length exceeds the configured symbol budget."""


def _parse_digits(s: str) -> bytes:
    if not all(c.isdigit() for c in s):
        raise ValueError(f"symbols must be digit strings, got {s!r}")
    return s.encode("ascii").translate(_FROM_DIGITS)


def _format_digits(symbols: bytes) -> str:
    if symbols and max(symbols) > 9:
        raise ValueError("digit serialization supports alphabets up to size 10")
    return symbols.translate(_TO_DIGITS).decode("ascii")


@dataclass(frozen=True)
class Morphism:
    """A non-erasing substitution letter -> word over {0..p-1}."""

    images: tuple[bytes, ...]

    def __post_init__(self):
        if not self.images:
            raise ValueError("morphism needs at least one image")
        for a, img in enumerate(self.images):
            if not img:
                raise ValueError(f"image of letter {a} is empty (erasing)")

    @property
    def alphabet_size(self) -> int:
        return len(self.images)

    @property
    def image_alphabet_size(self) -> int:
        return 1 + max(max(img) for img in self.images)

    def image(self, a: int) -> bytes:
        return self.images[a]

    def is_prolongable(self, seed: int) -> bool:
        """True when image(seed) starts with seed and has length >= 2."""
        img = self.images[seed]
        return len(img) >= 2 and img[0] == seed

    def apply_raw(self, symbols: bytes) -> bytes:
        images = self.images
        return b"".join([images[a] for a in symbols])

    @classmethod
    def from_strings(cls, mapping: dict) -> "Morphism":
        by_letter = {int(k): _parse_digits(v) for k, v in mapping.items()}
        p = max(by_letter) + 1
        if sorted(by_letter) != list(range(p)):
            raise ValueError("morphism must define an image for every letter 0..p-1")
        return cls(tuple(by_letter[a] for a in range(p)))

    def to_strings(self) -> dict:
        return {str(a): _format_digits(img) for a, img in enumerate(self.images)}


THUE_MORSE = Morphism.from_strings({"0": "01", "1": "10"})
FIBONACCI = Morphism.from_strings({"0": "01", "1": "0"})
DOUBLING = Morphism.from_strings({"0": "00", "1": "11"})
# sends any aperiodic binary word to a ternary word of constant Abelian
# complexity 3
CONSTANT3 = Morphism.from_strings({"0": "012", "1": "021"})


@dataclass(frozen=True)
class FixedPoint:
    morphism: Morphism
    seed: int
    post: Union[Morphism, None] = None


@dataclass(frozen=True)
class Characteristic:
    slope: ContinuedFraction


@dataclass(frozen=True)
class Periodic:
    pattern: bytes


@dataclass(frozen=True)
class Explicit:
    symbols: bytes
    alphabet_size: Union[int, None] = None


@dataclass(frozen=True)
class Champernowne:
    pass


@dataclass(frozen=True)
class MaxComplexity:
    pass


@dataclass(frozen=True)
class Hubert:
    slope: ContinuedFraction


@dataclass(frozen=True)
class LiteralPrepend:
    prefix: bytes
    inner: "WordRecipe"


WordRecipe = Union[FixedPoint, Characteristic, Periodic, Explicit,
                   Champernowne, MaxComplexity, Hubert, LiteralPrepend]


@dataclass(frozen=True)
class WordPrefix:
    """An immutable finite prefix of an infinite word over {0..p-1}."""

    alphabet_size: int
    symbols: bytes
    recipe: Union[WordRecipe, None] = None

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise ValueError("alphabet size must be >= 1")
        if self.symbols and max(self.symbols) >= self.alphabet_size:
            raise ValueError("symbol out of alphabet range")

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def digits(self) -> str:
        return _format_digits(self.symbols)

    def as_array(self) -> np.ndarray:
        return np.frombuffer(self.symbols, dtype=np.uint8)

    def shift(self, j: int) -> "WordPrefix":
        """Drop the first j symbols (prefix of the shifted word)."""
        return WordPrefix(self.alphabet_size, self.symbols[j:])

    def __repr__(self) -> str:
        head = self.digits() if len(self) <= 32 else self.digits()[:32] + "..."
        return f"WordPrefix(p={self.alphabet_size}, len={len(self)}, {head!r})"


def _check_budget(length: int, budget: int):
    if length < 0:
        raise ValueError("length must be >= 0")
    if length > budget:
        raise BudgetError(
            f"requested {length} symbols, budget is {budget}")


def fixed_point(m: Morphism, seed: int, length: int,
                budget: int = DEFAULT_SYMBOL_BUDGET) -> WordPrefix:
    """Length-``length`` prefix of the fixed point of ``m`` starting at ``seed``.

    Iterates the morphism on the seed letter until the image is long
    enough, then truncates.
    """
    if not m.is_prolongable(seed):
        raise ValueError(f"morphism is not prolongable on letter {seed}")
    _check_budget(length, budget)
    w = bytes([seed])
    while len(w) < length:
        w = m.apply_raw(w[:length])
    p = max(m.alphabet_size, m.image_alphabet_size)
    return WordPrefix(p, w[:length], FixedPoint(m, seed))


def apply_morphism(m: Morphism, w: WordPrefix) -> WordPrefix:
    """Concatenation of the images of w's letters."""
    if len(w) and max(w.symbols) >= m.alphabet_size:
        raise ValueError("word contains letters outside the morphism's domain")
    return WordPrefix(m.image_alphabet_size, m.apply_raw(w.symbols))


def characteristic_prefix(alpha: ContinuedFraction, length: int,
                          budget: int = DEFAULT_SYMBOL_BUDGET) -> WordPrefix:
    """Prefix of the characteristic word of slope alpha.

    Position j (0-based) holds floor((j+2)*alpha) - floor((j+1)*alpha),
    i.e. the letter the classical 1-based definition assigns to j+1.
    """
    _check_budget(length, budget)
    recipe = Characteristic(alpha)
    if length == 0:
        return WordPrefix(2, b"", recipe)
    floors = floor_range(alpha, length + 1)
    if floors.dtype == object:
        sym = bytes(int(floors[n + 1] - floors[n]) for n in range(1, length + 1))
    else:
        sym = bytes(np.diff(floors)[1:].astype(np.uint8))
    return WordPrefix(2, sym, recipe)


def champernowne_prefix(length: int,
                        budget: int = DEFAULT_SYMBOL_BUDGET) -> WordPrefix:
    """Prefix of the concatenated binary expansions 0, 1, 10, 11, 100, ..."""
    _check_budget(length, budget)
    parts = []
    total = 0
    i = 0
    while total < length:
        b = bin(i)[2:]
        parts.append(b)
        total += len(b)
        i += 1
    sym = "".join(parts)[:length].encode("ascii").translate(_FROM_DIGITS)
    return WordPrefix(2, sym, Champernowne())


def max_complexity_prefix(length: int,
                          budget: int = DEFAULT_SYMBOL_BUDGET) -> WordPrefix:
    """Prefix of 0 1 0 111 000 1^9 0^9 1^27 0^27 ...

    The binary word whose Abelian complexity meets the compositions bound
    n+1 at every length, while its subword complexity stays linear.
    """
    _check_budget(length, budget)
    out = bytearray(b"\x00")
    run = 1
    while len(out) < length:
        out += b"\x01" * run + b"\x00" * run
        run *= 3
    return WordPrefix(2, bytes(out[:length]), MaxComplexity())


def hubert_transform(inner: WordPrefix) -> WordPrefix:
    """Ternary recoding of a binary word: the j-th occurrence of letter 0
    becomes 0 for even j and 1 for odd j, and every occurrence of letter 1
    becomes 2.

    Applied to a Sturmian word this produces a balanced aperiodic ternary
    word.  The phase is fixed: the first 0-occurrence maps to 0.
    """
    if inner.alphabet_size > 2:
        raise ValueError("inner word must be binary")
    arr = inner.as_array()
    is_zero = arr == 0
    occ = np.cumsum(is_zero) - 1
    out = np.where(is_zero, occ & 1, 2).astype(np.uint8)
    return WordPrefix(3, out.tobytes())


def hubert_ternary(inner: ContinuedFraction, length: int,
                   budget: int = DEFAULT_SYMBOL_BUDGET) -> WordPrefix:
    """Balanced aperiodic ternary word built over the characteristic word
    of the given slope."""
    w = hubert_transform(characteristic_prefix(inner, length, budget))
    return WordPrefix(3, w.symbols, Hubert(inner))


def prefix_of(recipe: WordRecipe, length: int,
              budget: int = DEFAULT_SYMBOL_BUDGET) -> WordPrefix:
    """Generate the length-``length`` prefix described by ``recipe``."""
    _check_budget(length, budget)
    if isinstance(recipe, FixedPoint):
        if recipe.post is None:
            return fixed_point(recipe.morphism, recipe.seed, length, budget)
        shortest = min(len(img) for img in recipe.post.images)
        inner_len = -(-length // shortest)
        inner = fixed_point(recipe.morphism, recipe.seed, inner_len, budget)
        image = recipe.post.apply_raw(inner.symbols)[:length]
        p = max(recipe.post.image_alphabet_size, 1)
        return WordPrefix(p, image, recipe)
    if isinstance(recipe, Characteristic):
        return characteristic_prefix(recipe.slope, length, budget)
    if isinstance(recipe, Periodic):
        if not recipe.pattern:
            raise ValueError("periodic pattern must be non-empty")
        reps = -(-length // len(recipe.pattern))
        sym = (recipe.pattern * reps)[:length]
        return WordPrefix(max(recipe.pattern) + 1, sym, recipe)
    if isinstance(recipe, Explicit):
        if length > len(recipe.symbols):
            raise ValueError(
                f"explicit recipe holds {len(recipe.symbols)} symbols, "
                f"{length} requested")
        sym = recipe.symbols[:length]
        p = recipe.alphabet_size or (max(recipe.symbols) + 1 if recipe.symbols else 1)
        return WordPrefix(p, sym, recipe)
    if isinstance(recipe, Champernowne):
        return champernowne_prefix(length, budget)
    if isinstance(recipe, MaxComplexity):
        return max_complexity_prefix(length, budget)
    if isinstance(recipe, Hubert):
        return hubert_ternary(recipe.slope, length, budget)
    if isinstance(recipe, LiteralPrepend):
        head = recipe.prefix[:length]
        tail = prefix_of(recipe.inner, length - len(head), budget)
        p = max(tail.alphabet_size,
                (max(recipe.prefix) + 1) if recipe.prefix else 1)
        return WordPrefix(p, head + tail.symbols, recipe)
    raise TypeError(f"unknown recipe {recipe!r}")


# ---------------------------------------------------------------------------
# wire schema: tagged union, symbols as digit strings (p <= 10)

def recipe_to_dict(recipe: WordRecipe) -> dict:
    if isinstance(recipe, FixedPoint):
        d = {"kind": "fixed-point",
             "morphism": recipe.morphism.to_strings(),
             "seed": str(recipe.seed)}
        if recipe.post is not None:
            d["post"] = recipe.post.to_strings()
        return d
    if isinstance(recipe, Characteristic):
        return {"kind": "characteristic", "slope": recipe.slope.to_dict()}
    if isinstance(recipe, Periodic):
        return {"kind": "periodic", "pattern": _format_digits(recipe.pattern)}
    if isinstance(recipe, Explicit):
        d = {"kind": "explicit", "symbols": _format_digits(recipe.symbols)}
        if recipe.alphabet_size is not None:
            d["alphabet_size"] = recipe.alphabet_size
        return d
    if isinstance(recipe, Champernowne):
        return {"kind": "champernowne"}
    if isinstance(recipe, MaxComplexity):
        return {"kind": "max-complexity"}
    if isinstance(recipe, Hubert):
        return {"kind": "hubert", "slope": recipe.slope.to_dict()}
    if isinstance(recipe, LiteralPrepend):
        return {"kind": "literal-prepend",
                "prefix": _format_digits(recipe.prefix),
                "inner": recipe_to_dict(recipe.inner)}
    raise TypeError(f"unknown recipe {recipe!r}")


def recipe_from_dict(d: dict) -> WordRecipe:
    kind = d.get("kind")
    if kind == "fixed-point":
        post = Morphism.from_strings(d["post"]) if "post" in d else None
        return FixedPoint(Morphism.from_strings(d["morphism"]),
                          int(d["seed"]), post)
    if kind == "characteristic":
        return Characteristic(ContinuedFraction.from_dict(d["slope"]))
    if kind == "periodic":
        return Periodic(_parse_digits(d["pattern"]))
    if kind == "explicit":
        return Explicit(_parse_digits(d["symbols"]), d.get("alphabet_size"))
    if kind == "champernowne":
        return Champernowne()
    if kind == "max-complexity":
        return MaxComplexity()
    if kind == "hubert":
        return Hubert(ContinuedFraction.from_dict(d["slope"]))
    if kind == "literal-prepend":
        return LiteralPrepend(_parse_digits(d["prefix"]),
                              recipe_from_dict(d["inner"]))
    raise ValueError(f"unknown recipe kind {kind!r}")


def recipe_from_json(text: str) -> WordRecipe:
    return recipe_from_dict(json.loads(text))
