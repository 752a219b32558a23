"""Partitions, permutations and the small statistics built on them.

Conventions used across the package:

* A partition is a weakly decreasing tuple of positive ints; ``()`` is the
  empty partition.
* A permutation is its one-line form, a tuple holding ``1..n`` once each.
  Composition is ``compose(s, t)[i] = s[t[i]]``, i.e. ``t`` acts first on
  positions.  With decks read top to bottom, a deck shuffled by ``s`` and
  then by ``t`` reads ``compose(s, t)``.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itperms
from typing import Iterator, Sequence

from .errors import DegenerateEvaluation

Partition = tuple[int, ...]
Permutation = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a partition tuple."""
    lam = tuple(int(p) for p in parts)
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"partition must be weakly decreasing: {lam}")
    return lam


def as_permutation(images: Sequence[int]) -> Permutation:
    """Validate one-line ``images`` and return a permutation tuple."""
    pi = tuple(int(v) for v in images)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError(f"not a permutation of 1..{len(pi)}: {pi}")
    return pi


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_up_to(size: int, max_length: int | None = None) -> Iterator[Partition]:
    """All partitions with ``|lam| <= size`` and optionally bounded length."""
    for n in range(size + 1):
        for lam in partitions(n):
            if max_length is None or len(lam) <= max_length:
                yield lam


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map part size ``i`` to ``m_i(lam)``."""
    return dict(Counter(lam))


def hook_length_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    n = sum(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // hooks


def hook_length_count_det(lam: Partition) -> int:
    """``|lam|! * det(1/(lam_i - i + j)!)``; an independent check on the hook formula."""
    from .symmetric import det

    k = len(lam)
    mat = [[_inv_factorial(lam[i] - i + j) for j in range(k)] for i in range(k)]
    value = det(mat) * math.factorial(sum(lam))
    assert value.denominator == 1
    return int(value)


def _inv_factorial(m: int) -> Fraction:
    return Fraction(1, math.factorial(m)) if m >= 0 else Fraction(0)


def z_lambda(lam: Partition) -> int:
    """Centralizer order ``prod_i i^{m_i} m_i!``."""
    out = 1
    for part, mult in Counter(lam).items():
        out *= part**mult * math.factorial(mult)
    return out


@lru_cache(maxsize=None)
def moebius(d: int) -> int:
    if d < 1:
        raise ValueError("moebius is defined for positive integers")
    result = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            result = -result
        p += 1
    if d > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def all_permutations(n: int) -> Iterator[Permutation]:
    return _itperms(range(1, n + 1))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(s: Permutation, t: Permutation) -> Permutation:
    """``(s o t)(i) = s(t(i))``."""
    if len(s) != len(t):
        raise ValueError("cannot compose permutations of different sizes")
    return tuple(s[v - 1] for v in t)


def inverse(pi: Permutation) -> Permutation:
    out = [0] * len(pi)
    for i, v in enumerate(pi, start=1):
        out[v - 1] = i
    return tuple(out)


def cycle_type(pi: Permutation) -> Partition:
    seen = [False] * len(pi)
    lengths = []
    for start in range(len(pi)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = pi[j] - 1
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def fixed_points(pi: Permutation) -> int:
    return sum(1 for i, v in enumerate(pi, start=1) if i == v)


@dataclass(frozen=True)
class DescentStats:
    descent_set: frozenset[int]
    d: int
    maj: int


def descent_stats(pi: Permutation) -> DescentStats:
    des = frozenset(i for i in range(1, len(pi)) if pi[i - 1] > pi[i])
    return DescentStats(des, len(des), sum(des))


def reverse_deck(pi: Permutation) -> Permutation:
    """Relabel values by the longest element: ``i -> n + 1 - pi(i)``.

    This is ``w0 o pi``; it is conjugate to reading the deck bottom to top
    (``pi o w0``) so cycle statistics do not depend on the choice.
    """
    n = len(pi)
    return tuple(n + 1 - v for v in pi)


@lru_cache(maxsize=None)
def gaussian_polynomial(n: int, m: int) -> tuple[int, ...]:
    """Integer coefficients of the Gaussian binomial ``[n, m]_q`` in ``q``."""
    if m < 0 or m > n:
        return ()
    if m == 0 or m == n:
        return (1,)
    # [n, m] = [n-1, m-1] + q^m [n-1, m]
    a = gaussian_polynomial(n - 1, m - 1)
    b = gaussian_polynomial(n - 1, m)
    out = [0] * max(len(a), m + len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[m + i] += c
    return tuple(out)


def q_binomial(n: int, m: int, q) -> Fraction:
    """Gaussian binomial coefficient at a rational ``q``.

    Evaluated from its integer coefficient polynomial, so ``q = 1`` gives the
    ordinary binomial and ``q = -1`` needs no special casing.  Returns 0 when
    ``m > n`` or ``m < 0`` (the usual convention, relied on by
    :func:`shufflesym.rsk.maj_measure`).
    """
    q = Fraction(q)
    if q == 0:
        raise DegenerateEvaluation("q-binomial requested at q = 0")
    value = Fraction(0)
    for c in reversed(gaussian_polynomial(n, m)):
        value = value * q + c
    return value
