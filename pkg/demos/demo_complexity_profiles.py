#!/usr/bin/env python3
"""Abelian vs subword complexity, side by side.

The Abelian complexity rho_ab(n) counts Parikh-vector classes of length-n
factors, the subword complexity rho(n) counts the factors themselves.
This script reproduces the contrasts that make the pair interesting:

* Thue-Morse alternates rho_ab = 2, 3, 2, 3, ... while rho(n) grows;
* Sturmian words sit at the aperiodic minimum of both (2 and n+1);
* mu(Champernowne) has exponential rho but the same rho_ab as Thue-Morse;
* the run-growth word meets the binomial ceiling rho_ab(n) = n+1 while
  staying at linear subword complexity;
* bounded Abelian complexity and balance are two faces of one property.
"""

from abelianwords import (CONSTANT3, FIBONACCI, THUE_MORSE, ContinuedFraction,
                          abelian_profile, apply_morphism, balance_bound,
                          champernowne_prefix, characteristic_prefix,
                          fixed_point, hubert_ternary, max_abelian_complexity,
                          max_complexity_prefix, parikh_classes, profile)

GOLDEN = ContinuedFraction((2,), (1,))

LENGTH = 1 << 15
N_SHOW = 10

tm = fixed_point(THUE_MORSE, 0, LENGTH)
fib = characteristic_prefix(GOLDEN, LENGTH)
muc = apply_morphism(THUE_MORSE, champernowne_prefix(LENGTH // 2))
mc = max_complexity_prefix(LENGTH)
hub = hubert_ternary(GOLDEN, LENGTH)
ternary = apply_morphism(CONSTANT3, fixed_point(FIBONACCI, 0, LENGTH // 3))

words = [("thue-morse", tm), ("fibonacci", fib), ("mu(champernowne)", muc),
         ("run-growth", mc), ("ternary balanced", hub),
         ("ternary morphic", ternary)]

print(f"profiles on {LENGTH}-symbol prefixes (first {N_SHOW} lengths)")
print(f"{'word':18s} {'rho_ab(1..10)':28s} {'rho(1..10)':42s} balance")
for name, w in words:
    prof = profile(w, N_SHOW)
    bal = balance_bound(w, 256)
    print(f"{name:18s} {str(list(prof.rho_ab)):28s} "
          f"{str(list(prof.rho)):42s} {bal}")

print()
print("the binomial ceiling: rho_ab(n) <= C(n+p-1, p-1), met by run-growth")
w_prof = abelian_profile(mc, 8)
for n in range(1, 9):
    print(f"  n={n}: rho_ab={w_prof[n - 1]}  ceiling={max_abelian_complexity(n, 2)}")

print()
print("Parikh classes of Thue-Morse windows (the 2/3 alternation in person):")
for n in (3, 4, 5, 6):
    print(f"  length {n}: {sorted(parikh_classes(tm, n))}")

print()
print("balance vs bounded Abelian complexity (two directions, exactly):")
for name, w in words:
    prof = abelian_profile(w, 256)
    c = balance_bound(w, 256)
    k = max(prof)
    print(f"  {name:18s} max rho_ab = {k:3d}  balance C = {c:3d}  "
          f"C <= K-1: {c <= k - 1}  rho_ab <= (C+1)^p: "
          f"{all(v <= (c + 1) ** w.alphabet_size for v in prof)}")
