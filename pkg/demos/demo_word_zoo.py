#!/usr/bin/env python3
"""A tour of the word generators.

Every infinite word in the library is produced from a declarative recipe;
the same recipe always regenerates the identical prefix.  This script
prints a short prefix of each one and points out what it will be used for
in the other demos.
"""

from abelianwords import (CONSTANT3, FIBONACCI, THUE_MORSE, Characteristic,
                          ContinuedFraction, Hubert, LiteralPrepend, Periodic,
                          apply_morphism, champernowne_prefix,
                          characteristic_prefix, fixed_point, hubert_ternary,
                          max_complexity_prefix, prefix_of, recipe_to_dict)

GOLDEN = ContinuedFraction((2,), (1,))   # (3 - sqrt 5)/2 ~ 0.382
SQRT2 = ContinuedFraction((), (2,))      # sqrt 2 - 1     ~ 0.414

print("=== morphic fixed points ===")
tm = fixed_point(THUE_MORSE, 0, 32)
print("Thue-Morse   0->01, 1->10   :", tm.digits())
fib = fixed_point(FIBONACCI, 0, 32)
print("Fibonacci    0->01, 1->0    :", fib.digits())

print()
print("=== characteristic words from continued fractions ===")
print("The slope is held exactly as its partial quotients; floors of n*alpha")
print("are computed by integer arithmetic, so prefixes are exact at any length.")
cg = characteristic_prefix(GOLDEN, 32)
print("slope [0;2,1,1,...]  :", cg.digits())
print("  (equals the Fibonacci fixed point:", cg.symbols == fib.symbols, ")")
print("slope [0;2,2,2,...]  :", characteristic_prefix(SQRT2, 32).digits())

print()
print("=== words with extreme complexity profiles ===")
print("binary Champernowne  :", champernowne_prefix(32).digits())
print("  every binary block occurs, so its subword complexity is exponential")
mc = max_complexity_prefix(32)
print("run-growth word      :", mc.digits())
print("  its Abelian complexity meets the theoretical maximum n+1 at every n")

print()
print("=== ternary words with constant Abelian complexity 3 ===")
hub = hubert_ternary(GOLDEN, 32)
print("balanced recoding    :", hub.digits())
print("  0-occurrences of the Sturmian word alternate 0,1; its 1s become 2")
r3 = apply_morphism(CONSTANT3, fib)
print("morphic image        :", r3.digits()[:32])
print("  image of the Fibonacci word under 0->012, 1->021")

print()
print("=== recipes are plain data ===")
recipe = LiteralPrepend(bytes([2]), Characteristic(GOLDEN))
print("literal-prepend      :", prefix_of(recipe, 32).digits())
print("as JSON-ready dict   :", recipe_to_dict(recipe))
print("periodic             :", prefix_of(Periodic(bytes([0, 1])), 12).digits())
print("hubert               :", recipe_to_dict(Hubert(SQRT2)))
