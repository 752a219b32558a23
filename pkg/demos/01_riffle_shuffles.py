"""Signed words, riffle shuffles and their exact laws.

Run: python3 demos/01_riffle_shuffles.py
"""
from fractions import Fraction as F
from itertools import permutations

from shufflesym import ShuffleParams, exact_shuffle_distribution, word_to_permutation
from shufflesym.shuffles import convolution_power, deal_inverse_shuffle

# A shuffle is driven by a random word.  Negative symbols take their values
# right to left, positive ones left to right, and the zero block is mixed.
word = (-2, 0, 1, 0, 0, 2, -1, -2, -1, 1)
print("word:", " ".join(map(str, word)))
for order in permutations(range(3)):
    print("   zero block", order, "->", " ".join(map(str, word_to_permutation(word, zero_order=order))))

# The same shuffle, seen from the other side: label cards, deal into piles,
# mix the zero pile and pick everything up.
labels = (0, -2, 1, 0, 1, 2, 2, -1, -2, 2, 0)
print("\ndealing the labelled deck gives", deal_inverse_shuffle(labels, zero_pile=(4, 1, 11)))

# Exact laws on small decks.
gsr2 = ShuffleParams.gsr(2)
print("\nGSR 2-shuffle of three cards:")
print(exact_shuffle_distribution(gsr2, 3).to_csv())

# Shuffling twice: two 2-riffles make a 4-riffle, and a half-mixed shuffle
# squared is a quarter-mixed one.
for n in range(1, 5):
    twice = convolution_power(exact_shuffle_distribution(gsr2, n), 2)
    print(f"n={n}: GSR-2 twice == GSR-4:", twice == exact_shuffle_distribution(ShuffleParams.gsr(4), n))
half = ShuffleParams(alpha=(F(1, 2),), gamma=F(1, 2))
quarter = ShuffleParams(alpha=(F(1, 4),), gamma=F(3, 4))
print("half-mixed twice == quarter-mixed (n=5):",
      convolution_power(exact_shuffle_distribution(half, 5), 2) == exact_shuffle_distribution(quarter, 5))
