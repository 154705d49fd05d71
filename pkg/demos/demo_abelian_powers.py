#!/usr/bin/env python3
"""Finding Abelian k-powers three ways.

An Abelian k-power is k consecutive blocks of one length whose letter
counts agree.  Beyond brute force, two constructions locate them:

* bounded Abelian complexity forces them to exist: weight the letters so
  that small combinations only vanish trivially mod N, then a
  monochromatic arithmetic progression of the running sums mod N marks k
  blocks with equal sums, hence equal Parikh vectors;
* in a characteristic word, the fractional parts {i alpha} walk an exact
  staircase, and for each position one of just two convergent
  denominators q_n, q_{n+1} serves as the Abelian period.

Every returned occurrence is re-verified block by block before use.
"""

from abelianwords import (THUE_MORSE, ContinuedFraction, balance_bound,
                          characteristic_prefix, congo_weights, fixed_point,
                          min_abelian_period, sturmian_period_pair,
                          sturmian_power_at, vdw_power_search,
                          verify_abelian_power)

GOLDEN = ContinuedFraction((2,), (1,))

print("=== brute force (the oracle) ===")
tm = fixed_point(THUE_MORSE, 0, 1 << 16)
for k in (2, 3, 4):
    ell = min_abelian_period(tm, 0, k)
    blocks = [tm.digits()[j * ell:(j + 1) * ell] for j in range(k)]
    print(f"Thue-Morse, k={k}: least period at position 0 is {ell}  "
          f"blocks {' | '.join(blocks)}")

print()
print("=== weighted running sums ===")
M = balance_bound(tm, 512)
weights = congo_weights(M, 2)
print(f"Thue-Morse is {M}-balanced; weights alphas={weights.alphas}, "
      f"N={weights.N}")
for k in (2, 3, 4, 5):
    occ = vdw_power_search(tm, k, weights)
    ok = verify_abelian_power(tm, occ.start, occ.period, occ.exponent)
    print(f"  k={k}: start={occ.start} period={occ.period} "
          f"block counts={occ.block_parikh} verified={ok}")

print()
print("=== exact locator for characteristic words ===")
for k in (2, 4, 8):
    pair = sturmian_period_pair(GOLDEN, k)
    print(f"k={k}: admissible even index n={pair.n_even}, "
          f"period pair (q_n, q_n+1) = ({pair.ell1}, {pair.ell2})")

print()
print("every position starts an Abelian 3-power with one of two periods:")
pair = sturmian_period_pair(GOLDEN, 3)
w = characteristic_prefix(GOLDEN, 200 + 3 * pair.ell2)
for i in range(1, 13):
    occ = sturmian_power_at(GOLDEN, i, 3)
    tag = "q_n" if occ.period == pair.ell1 else "q_n+1"
    ok = verify_abelian_power(w, occ.start, occ.period, 3)
    print(f"  position {i:2d}: period {occ.period:2d} ({tag:5s}) "
          f"block counts {occ.block_parikh} verified={ok}")

print()
print("tally over the first 2000 positions (k=3):")
counts = {pair.ell1: 0, pair.ell2: 0}
for i in range(1, 2001):
    counts[sturmian_power_at(GOLDEN, i, 3).period] += 1
print(f"  period {pair.ell1}: {counts[pair.ell1]} positions, "
      f"period {pair.ell2}: {counts[pair.ell2]} positions")
