"""Cycle structure after a shuffle, and how fast repeated shuffles mix.

Run: python3 demos/03_cycles_and_mixing.py
"""
from fractions import Fraction as F

from shufflesym import (
    ShuffleParams,
    cycle_type_distribution,
    exact_distances,
    exact_shuffle_distribution,
    expected_fixed_points,
    limit_cycle_pmf,
    separation_bound,
)
from shufflesym.cycles import tv_to_limit
from shufflesym.shuffles import convolution_power

gsr2 = ShuffleParams.gsr(2)
print("expected fixed points after one riffle of 52 cards:", float(expected_fixed_points(gsr2, 52)))

# The cycle index gives exact laws far beyond what enumeration can reach.
p = ShuffleParams(alpha=(F(1, 2),), gamma=F(1, 2))
law = cycle_type_distribution(p, 30)
lim = limit_cycle_pmf(1, 1, F(1, 2))
print("\nfixed points, half-mixed shuffle of 30 cards vs the large-deck limit:")
marg = law.marginal(1)
for c in range(6):
    print(f"  P(N_1 = {c}) exact {float(marg.get(c, 0)):.6f}   limit {float(lim.pmf[c]):.6f}")
print("  total variation:", f"{float(tv_to_limit(marg, lim)):.2e}")

# Separation distance after k riffles of a small deck, against the bound.
d = exact_shuffle_distribution(gsr2, 4)
print("\nriffles of 4 cards: separation, total variation, bound")
for k in range(1, 7):
    sep, tv = exact_distances(convolution_power(d, k))
    print(f"  k={k}: {float(sep):.4f}  {float(tv):.4f}  {float(separation_bound(gsr2, k, 4)):.4f}")
