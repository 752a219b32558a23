"""Recording tableaux of a shuffle and extended Schur functions.

Run: python3 demos/02_tableaux_and_schur.py
"""
from fractions import Fraction as F

from shufflesym import ShuffleParams, brkv_insert, brkv_inverse, exact_shuffle_distribution, extended_schur, rsk
from shufflesym.combinatorics import hook_length_count, partitions
from shufflesym.rsk import pretty

p = ShuffleParams(alpha=(F(1, 3),), beta=(F(1, 3),), gamma=F(1, 3))
n = 4
law = exact_shuffle_distribution(p, n).pushforward(lambda pi: rsk(pi)[1])

print(f"shuffle {p}, {n} cards: probability of each recording tableau")
for lam in partitions(n):
    target = extended_schur(p, lam)
    seen = {q: prob for q, prob in law.items() if tuple(map(len, q)) == lam}
    print(f"  shape {lam}: S~ = {target}, all {hook_length_count(lam)} tableaux agree:",
          all(v == target for v in seen.values()) and len(seen) == hook_length_count(lam))

# Signed insertion: negatives may bump an equal entry, positives may not.
word = (1, -1, 2, -2, 1, 1, -2)
P, Q = brkv_insert(word)
print("\ninsertion tableau\n" + pretty(P))
print("recording tableau\n" + pretty(Q))
print("reverse bumping recovers the word:", brkv_inverse(P, Q) == word)
