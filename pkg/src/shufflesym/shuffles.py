"""Sampling and exact laws of (alpha, beta, gamma) shuffles.

A shuffle draws an i.i.d. signed word and turns it into a permutation:
blocks are laid out in symbol order ``... < -1 < 0 < 1 < ...``, negative
symbols take their block of values in decreasing order left to right,
positive ones in increasing order, and the zero block is uniformly mixed.
The resulting one-line form is the deck read top to bottom.
"""
from __future__ import annotations

import csv
import io
import math
import os
from collections import defaultdict
from fractions import Fraction
from itertools import permutations, product
from typing import Callable, Iterable, Iterator, Mapping, Sequence

import numpy as np

from .combinatorics import Permutation, compose, identity, inverse
from .errors import EnumerationTooLarge, SizeMismatch
from .symmetric import ShuffleParams

SignedWord = tuple[int, ...]

DEFAULT_MAX_DECK = 6
DEFAULT_BUDGET = 2_000_000


def enumeration_budget() -> int:
    """Work budget for exact enumeration; ``SHUFFLE_SYM_BUDGET`` overrides it."""
    return int(os.environ.get("SHUFFLE_SYM_BUDGET", DEFAULT_BUDGET))


class ExactDistribution(Mapping[Permutation, Fraction]):
    """An exact probability law on permutations of a fixed deck size.

    Zero-probability entries are dropped, so two laws compare equal exactly
    when they agree on every permutation.
    """

    def __init__(self, entries: Mapping[Permutation, Fraction] | Iterable, deck_size: int):
        self.deck_size = deck_size
        items = entries.items() if isinstance(entries, Mapping) else entries
        self._p: dict[Permutation, Fraction] = {}
        for perm, prob in items:
            perm = tuple(perm)
            if len(perm) != deck_size:
                raise SizeMismatch(f"{perm} is not a permutation of {deck_size} cards")
            prob = Fraction(prob)
            if prob:
                self._p[perm] = self._p.get(perm, Fraction(0)) + prob

    def __getitem__(self, perm) -> Fraction:
        return self._p.get(tuple(perm), Fraction(0))

    def __iter__(self):
        return iter(self._p)

    def __len__(self):
        return len(self._p)

    def __eq__(self, other):
        if not isinstance(other, ExactDistribution):
            return NotImplemented
        return self.deck_size == other.deck_size and self._p == other._p

    def __repr__(self):
        body = ", ".join(f"{''.join(map(str, k)) if self.deck_size < 10 else k}: {v}"
                         for k, v in sorted(self._p.items()))
        return f"ExactDistribution(n={self.deck_size}, {{{body}}})"

    def total(self) -> Fraction:
        return sum(self._p.values(), Fraction(0))

    def pushforward(self, f: Callable):
        """Law of ``f(pi)`` as a plain dict."""
        out: dict = defaultdict(Fraction)
        for perm, prob in self._p.items():
            out[f(perm)] += prob
        return dict(out)

    def inverted(self) -> "ExactDistribution":
        return ExactDistribution({inverse(k): v for k, v in self._p.items()}, self.deck_size)

    def expectation(self, f: Callable) -> Fraction:
        return sum((prob * f(perm) for perm, prob in self._p.items()), Fraction(0))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["permutation", "probability"])
        for perm, prob in sorted(self._p.items()):
            writer.writerow([" ".join(map(str, perm)), str(prob)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "ExactDistribution":
        rows = list(csv.DictReader(io.StringIO(text)))
        entries = [(tuple(int(v) for v in r["permutation"].split()), Fraction(r["probability"]))
                   for r in rows]
        n = len(entries[0][0]) if entries else 0
        return cls(entries, n)


def point_mass(perm: Permutation) -> ExactDistribution:
    return ExactDistribution({tuple(perm): Fraction(1)}, len(perm))


def uniform_distribution(n: int) -> ExactDistribution:
    w = Fraction(1, math.factorial(n))
    return ExactDistribution(((p, w) for p in permutations(range(1, n + 1))), n)


def _rng_pair(seed) -> tuple[np.random.Generator, np.random.Generator]:
    """Independent word and zero-block streams from one user seed."""
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    words, zeros = root.spawn(2)
    return np.random.default_rng(words), np.random.default_rng(zeros)


def _symbol_table(p: ShuffleParams) -> tuple[np.ndarray, np.ndarray]:
    syms = p.symbols
    values = np.array([s for s, _ in syms], dtype=np.int64)
    probs = np.array([float(w) for _, w in syms])
    return values, probs / probs.sum()


def sample_words(p: ShuffleParams, n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    values, probs = _symbol_table(p)
    return rng.choice(values, size=(count, n), p=probs)


def sample_word(p: ShuffleParams, n: int, seed) -> SignedWord:
    """One i.i.d. signed word of length ``n``."""
    rng = np.random.default_rng(seed)
    return tuple(int(s) for s in sample_words(p, n, 1, rng)[0])


def _placement(word: Sequence[int], zero_order: Sequence[int]) -> Permutation:
    """Values under ``word`` given the arrangement of the zero block.

    ``zero_order[k]`` is the rank, within the zero block, of the k-th zero
    from the left.
    """
    n = len(word)
    out = [0] * n
    next_value = 1
    positions: dict[int, list[int]] = defaultdict(list)
    for pos, s in enumerate(word):
        positions[s].append(pos)
    for s in sorted(positions):
        where = positions[s]
        if s < 0:
            where = where[::-1]
        if s == 0:
            for pos, rank in zip(where, zero_order):
                out[pos] = next_value + rank
        else:
            for offset, pos in enumerate(where):
                out[pos] = next_value + offset
        next_value += len(where)
    return tuple(out)


def word_to_permutation(word: Sequence[int], seed=None, *, zero_order: Sequence[int] | None = None) -> Permutation:
    """Turn a signed word into a permutation.

    The zero block's arrangement is drawn from ``seed`` unless ``zero_order``
    (ranks ``0..r-1`` for the zeros, left to right) is given explicitly.
    """
    r = sum(1 for s in word if s == 0)
    if zero_order is None:
        zero_order = np.random.default_rng(seed).permutation(r).tolist()
    elif sorted(zero_order) != list(range(r)):
        raise ValueError("zero_order must arrange 0..r-1")
    return _placement(word, zero_order)


def sample_shuffles(p: ShuffleParams, n: int, count: int, seed) -> np.ndarray:
    """``count`` independent shuffles of an ``n`` card deck as a (count, n) array."""
    word_rng, zero_rng = _rng_pair(seed)
    words = sample_words(p, n, count, word_rng)
    pos = np.broadcast_to(np.arange(n), words.shape)
    # tie-break within a block: +position (positive), -position (negative), random (zero)
    tiebreak = np.where(words > 0, pos, -pos).astype(float)
    tiebreak = np.where(words == 0, zero_rng.random(words.shape), tiebreak)
    order = np.lexsort((tiebreak, words), axis=-1)
    perms = np.empty_like(order)
    np.put_along_axis(perms, order, np.arange(1, n + 1)[None, :].repeat(count, 0), axis=-1)
    return perms


def sample_shuffle(p: ShuffleParams, n: int, seed) -> Permutation:
    return tuple(int(v) for v in sample_shuffles(p, n, 1, seed)[0])


def _check_budget(p: ShuffleParams, n: int, max_n: int | None, budget: int | None):
    max_n = DEFAULT_MAX_DECK if max_n is None else max_n
    budget = enumeration_budget() if budget is None else budget
    support = len(p.symbols)
    r_max = n if p.gamma > 0 else 0
    work = support**n * math.factorial(r_max)
    if n > max_n or work > budget:
        raise EnumerationTooLarge(
            f"deck of {n} with {support} symbols needs {work} steps "
            f"(cap n <= {max_n}, budget {budget})")


def exact_shuffle_distribution(p: ShuffleParams, n: int, *, max_n: int | None = None,
                               budget: int | None = None) -> ExactDistribution:
    """Exact law of the shuffle on ``n`` cards by summing over every word."""
    _check_budget(p, n, max_n, budget)
    syms = p.symbols
    out: dict[Permutation, Fraction] = defaultdict(Fraction)
    for letters in product(syms, repeat=n):
        word = tuple(s for s, _ in letters)
        prob = math.prod((w for _, w in letters), start=Fraction(1))
        r = word.count(0)
        share = prob / math.factorial(r)
        for arrangement in permutations(range(r)):
            out[_placement(word, arrangement)] += share
    return ExactDistribution(out, n)


def convolve(d1: ExactDistribution, d2: ExactDistribution) -> ExactDistribution:
    """Law of the deck after shuffling by ``d1`` and then by ``d2``.

    With one-line forms read as decks, that deck is ``compose(s, t)`` for
    ``s ~ d1``, ``t ~ d2``.
    """
    if d1.deck_size != d2.deck_size:
        raise SizeMismatch(f"deck sizes {d1.deck_size} and {d2.deck_size} differ")
    out: dict[Permutation, Fraction] = defaultdict(Fraction)
    for s, ps in d1.items():
        for t, pt in d2.items():
            out[compose(s, t)] += ps * pt
    return ExactDistribution(out, d1.deck_size)


def convolution_power(d: ExactDistribution, k: int) -> ExactDistribution:
    out = point_mass(identity(d.deck_size))
    for _ in range(k):
        out = convolve(out, d)
    return out


def deal_inverse_shuffle(labels: Sequence[int], zero_pile: Sequence[int] | None = None) -> Permutation:
    """Run the labelling/dealing description of the inverse shuffle on cards ``1..n``.

    ``labels[c-1]`` is the label of the card that starts at position ``c``.
    Cards are dealt from the top; nonpositive labels are dealt face down
    (each new card lands on top), positive ones face up and the face-up
    piles are then turned over.  ``zero_pile`` gives the mixed order of the
    0 pile top to bottom.  Piles are picked up with smaller labels on top.
    """
    piles: dict[int, list[int]] = defaultdict(list)
    for card, label in enumerate(labels, start=1):
        pile = piles[label]
        if label <= 0:
            pile.insert(0, card)
        else:
            pile.append(card)  # face up; turning the pile over restores deal order
    if 0 in piles:
        if zero_pile is None:
            raise ValueError("a zero pile needs an explicit mixed order")
        if sorted(zero_pile) != sorted(piles[0]):
            raise ValueError("zero_pile must reorder the cards labelled 0")
        piles[0] = list(zero_pile)
    deck: list[int] = []
    for label in sorted(piles):
        deck.extend(piles[label])
    return tuple(deck)


def inverse_shuffle_sample(p: ShuffleParams, n: int, seed) -> Permutation:
    """One draw of the inverse shuffle via labelling, dealing and pick-up."""
    label_rng, mix_rng = _rng_pair(seed)
    labels = [int(s) for s in sample_words(p, n, 1, label_rng)[0]]
    zeros = [c for c, lab in enumerate(labels, start=1) if lab == 0]
    # dealt face down the zero pile reads top-down as the reverse; mixing makes that moot
    mixed = [zeros[i] for i in mix_rng.permutation(len(zeros))]
    return deal_inverse_shuffle(labels, mixed if zeros else None)


def inverse_shuffle_distribution(p: ShuffleParams, n: int, **caps) -> ExactDistribution:
    """Exact law of :func:`inverse_shuffle_sample`, enumerating labels and zero-pile orders."""
    _check_budget(p, n, caps.get("max_n"), caps.get("budget"))
    out: dict[Permutation, Fraction] = defaultdict(Fraction)
    for letters in product(p.symbols, repeat=n):
        labels = [s for s, _ in letters]
        prob = math.prod((w for _, w in letters), start=Fraction(1))
        zeros = [c for c, lab in enumerate(labels, start=1) if lab == 0]
        share = prob / math.factorial(len(zeros))
        for mixed in permutations(zeros):
            out[deal_inverse_shuffle(labels, mixed if zeros else None)] += share
    return ExactDistribution(out, n)


def pile_shuffle_distribution(p: ShuffleParams, n: int) -> ExactDistribution:
    """Exact law of the cut / flip / mix / riffle description of the shuffle.

    The deck is cut into piles with multinomial sizes, negative piles are
    turned over, the 0 pile is mixed, then cards are dropped one at a time
    from a pile chosen with probability proportional to its current size.
    Used as an independent check on the word description.
    """
    syms = p.symbols
    out: dict[Permutation, Fraction] = defaultdict(Fraction)

    def riffle(piles: list[list[int]], acc: list[int], prob: Fraction):
        remaining = sum(len(pl) for pl in piles)
        if remaining == 0:
            out[tuple(acc)] += prob
            return
        for i, pile in enumerate(piles):
            if pile:
                rest = piles[:i] + [pile[1:]] + piles[i + 1:]
                riffle(rest, acc + [pile[0]], prob * Fraction(len(pile), remaining))

    def sizes(k: int, left: int) -> Iterator[tuple[int, ...]]:
        if k == len(syms) - 1:
            yield (left,)
            return
        for x in range(left + 1):
            for rest in sizes(k + 1, left - x):
                yield (x,) + rest

    for xs in sizes(0, n):
        prob = Fraction(math.factorial(n))
        for (s, w), x in zip(syms, xs):
            prob *= w**x / math.factorial(x)
        if prob == 0:
            continue
        piles, top = [], 1
        zero_block = None
        for (s, _), x in zip(syms, xs):
            cards = list(range(top, top + x))
            top += x
            if s < 0:
                cards.reverse()
            if s == 0:
                zero_block = len(piles)
            piles.append(cards)
        arrangements = permutations(piles[zero_block]) if zero_block is not None else [None]
        arrangements = list(arrangements)
        for arr in arrangements:
            if arr is not None:
                piles[zero_block] = list(arr)
            riffle([pl for pl in piles if pl], [], prob / len(arrangements))
    return ExactDistribution(out, n)


def _tuple_key(z: tuple[int, ...]):
    """Sort key realising the order on k-tuples of symbols used for iterated shuffles.

    Compare first coordinates; on a tie at a nonnegative value compare the
    tails the same way, on a tie at a negative value compare them reversed.
    """
    key = []
    flip = 1
    for c in z:
        key.append(flip * c)
        if c < 0:
            flip = -flip
    return tuple(key)


def iterated_shuffle_distribution(p: ShuffleParams, k: int, n: int, *, max_n: int | None = None,
                                  budget: int | None = None) -> ExactDistribution:
    """Exact law of ``k`` successive shuffles as one shuffle on piles labelled by k-tuples.

    Piles are ordered by :func:`_tuple_key`; a pile whose tuple has a zero
    coordinate is mixed, one with negative coordinate product is turned
    over, and the rest are kept in order.
    """
    syms = p.symbols
    tuples = [(tuple(s for s, _ in combo), math.prod((w for _, w in combo), start=Fraction(1)))
              for combo in product(syms, repeat=k)]
    tuples.sort(key=lambda tw: _tuple_key(tw[0]))
    sign = {}
    for rank, (z, _) in enumerate(tuples, start=1):
        sgn = math.prod(z)
        sign[rank] = 0 if sgn == 0 else (1 if sgn > 0 else -1)
    max_n = DEFAULT_MAX_DECK if max_n is None else max_n
    budget = enumeration_budget() if budget is None else budget
    work = len(tuples) ** n * (math.factorial(n) if 0 in sign.values() else 1)
    if n > max_n or work > budget:
        raise EnumerationTooLarge(f"{len(tuples)} piles on {n} cards needs {work} steps")
    out: dict[Permutation, Fraction] = defaultdict(Fraction)
    for letters in product(range(len(tuples)), repeat=n):
        prob = math.prod((tuples[i][1] for i in letters), start=Fraction(1))
        if prob == 0:
            continue
        out_word = _iterated_placements(letters, sign)
        share = prob / len(out_word)
        for perm in out_word:
            out[perm] += share
    return ExactDistribution(out, n)


def _iterated_placements(letters: Sequence[int], sign: Mapping[int, int]) -> list[Permutation]:
    """All equally likely decks for a word over pile ranks (0-based ranks)."""
    n = len(letters)
    positions: dict[int, list[int]] = defaultdict(list)
    for pos, r in enumerate(letters):
        positions[r].append(pos)
    blocks = []
    next_value = 1
    for r in sorted(positions):
        where = positions[r]
        values = list(range(next_value, next_value + len(where)))
        next_value += len(where)
        s = sign[r + 1]
        if s == 0:
            blocks.append((where, [list(v) for v in permutations(values)]))
        else:
            blocks.append((where, [values[::-1] if s < 0 else values]))
    results = []
    for choice in product(*(options for _, options in blocks)):
        out = [0] * n
        for (where, _), values in zip(blocks, choice):
            for pos, v in zip(where, values):
                out[pos] = v
        results.append(tuple(out))
    return results
