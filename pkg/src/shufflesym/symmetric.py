"""Extended symmetric functions at shuffle parameters, and classical ones at points.

The extended complete functions are the Taylor coefficients of
``exp(gamma z) * prod (1 + beta_i z) / (1 - alpha_i z)``; extended Schur
functions are their Jacobi-Trudi determinants.  Everything here is exact
(:class:`fractions.Fraction`).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .combinatorics import Partition
from .errors import InvalidParams


def _trim(values: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(v) for v in values]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class ShuffleParams:
    """Weights of a shuffle: ``alpha[i-1]`` for symbol ``i``, ``beta[i-1]`` for ``-i``,
    ``gamma`` for ``0``.  Must be nonnegative and sum to exactly one.
    """

    alpha: tuple[Fraction, ...] = ()
    beta: tuple[Fraction, ...] = ()
    gamma: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "alpha", _trim(self.alpha))
        object.__setattr__(self, "beta", _trim(self.beta))
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        weights = (*self.alpha, *self.beta, self.gamma)
        if any(w < 0 for w in weights):
            raise InvalidParams(f"negative weight in {self}")
        total = sum(weights, Fraction(0))
        if total != 1:
            raise InvalidParams(f"weights sum to {total}, not 1")

    @classmethod
    def gsr(cls, k: int) -> "ShuffleParams":
        """The Gilbert-Shannon-Reeds ``k``-shuffle."""
        return cls(alpha=(Fraction(1, k),) * k)

    @property
    def symbols(self) -> list[tuple[int, Fraction]]:
        """``(symbol, weight)`` pairs with positive weight, in increasing symbol order."""
        out = [(-i, b) for i, b in reversed(list(enumerate(self.beta, start=1)))]
        out.append((0, self.gamma))
        out.extend((i, a) for i, a in enumerate(self.alpha, start=1))
        return [(s, w) for s, w in out if w > 0]

    def weight(self, symbol: int) -> Fraction:
        if symbol == 0:
            return self.gamma
        seq = self.alpha if symbol > 0 else self.beta
        idx = abs(symbol) - 1
        return seq[idx] if idx < len(seq) else Fraction(0)

    def swapped(self) -> "ShuffleParams":
        """Exchange the roles of ``alpha`` and ``beta``."""
        return ShuffleParams(alpha=self.beta, beta=self.alpha, gamma=self.gamma)

    def collision_rate(self) -> Fraction:
        """``sum alpha_i^2 + sum beta_i^2``."""
        return sum((a * a for a in (*self.alpha, *self.beta)), Fraction(0))

    def to_dict(self) -> dict:
        return {
            "alpha": [str(a) for a in self.alpha],
            "beta": [str(b) for b in self.beta],
            "gamma": str(self.gamma),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ShuffleParams":
        return cls(
            alpha=tuple(Fraction(a) for a in data.get("alpha", ())),
            beta=tuple(Fraction(b) for b in data.get("beta", ())),
            gamma=Fraction(data.get("gamma", 0)),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "ShuffleParams":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        fmt = lambda xs: ",".join(str(x) for x in xs) or "-"
        return f"({fmt(self.alpha)}; {fmt(self.beta)}; {self.gamma})"


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant over the rationals by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@lru_cache(maxsize=256)
def extended_h_sequence(p: ShuffleParams, kmax: int) -> tuple[Fraction, ...]:
    """``(h~_0, ..., h~_kmax)`` by multiplying the factor series of the generating function."""
    coeffs = [Fraction(p.gamma) ** k / math.factorial(k) for k in range(kmax + 1)]
    for b in p.beta:
        # multiply by (1 + b z)
        for k in range(kmax, 0, -1):
            coeffs[k] += b * coeffs[k - 1]
    for a in p.alpha:
        # divide by (1 - a z): running geometric sum
        for k in range(1, kmax + 1):
            coeffs[k] += a * coeffs[k - 1]
    return tuple(coeffs)


def jacobi_trudi(h: Sequence[Fraction], lam: Partition) -> Fraction:
    """``det(h_{lam_i - i + j})`` with ``h_k = 0`` for ``k < 0``."""
    k = len(lam)
    top = lam[0] + k if lam else 0
    if len(h) < top:
        raise ValueError("h sequence too short for this partition")

    def entry(m: int) -> Fraction:
        return h[m] if m >= 0 else Fraction(0)

    return det([[entry(lam[i] - i + j) for j in range(k)] for i in range(k)])


def extended_schur(p: ShuffleParams, lam: Partition) -> Fraction:
    if not lam:
        return Fraction(1)
    h = extended_h_sequence(p, lam[0] + len(lam))
    return jacobi_trudi(h, lam)


def extended_power_sum(p: ShuffleParams, n: int) -> Fraction:
    if n < 1:
        raise ValueError("power sums start at n = 1")
    if n == 1:
        return sum((*p.alpha, *p.beta), p.gamma)
    sign = 1 if n % 2 == 1 else -1
    return sum((a**n for a in p.alpha), Fraction(0)) + sign * sum(
        (b**n for b in p.beta), Fraction(0)
    )


def extended_power_product(p: ShuffleParams, lam: Partition) -> Fraction:
    out = Fraction(1)
    for part in lam:
        out *= extended_power_sum(p, part)
    return out


def complete_h_at(x: Sequence, kmax: int) -> list[Fraction]:
    """``[h_0(x), ..., h_kmax(x)]`` for a finite point set."""
    coeffs = [Fraction(1)] + [Fraction(0)] * kmax
    for xi in x:
        xi = Fraction(xi)
        for k in range(1, kmax + 1):
            coeffs[k] += xi * coeffs[k - 1]
    return coeffs


def schur_at(lam: Partition, x: Sequence) -> Fraction:
    """Classical Schur polynomial ``s_lam(x)`` via Jacobi-Trudi."""
    if len(lam) > len(x):
        return Fraction(0)
    if not lam:
        return Fraction(1)
    return jacobi_trudi(complete_h_at(x, lam[0] + len(lam)), lam)


def power_sum_at(lam: Partition, x: Sequence) -> Fraction:
    out = Fraction(1)
    for part in lam:
        out *= sum((Fraction(xi) ** part for xi in x), Fraction(0))
    return out


def principal_specialization(lam: Partition, base, k: int) -> Fraction:
    """``s_lam(1, 1/base, ..., 1/base^(k-1))``."""
    base = Fraction(base)
    if base == 0:
        raise ValueError("base must be nonzero")
    return schur_at(lam, [1 / base**i for i in range(k)])
