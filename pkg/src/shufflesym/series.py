"""Truncated power series, Toeplitz determinants and the Gessel/Cauchy identities.

Each point ``x_r`` carries one power of a grading variable ``t``.  With
that grading every Laurent coefficient of the Toeplitz symbol is a
polynomial in ``t``, and the Gessel-type identity becomes an exact
statement modulo ``t^(D+1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .combinatorics import partitions_up_to, z_lambda
from .errors import SymbolDivergence
from .symmetric import (
    ShuffleParams,
    complete_h_at,
    det,
    extended_h_sequence,
    extended_power_product,
    extended_schur,
    power_sum_at,
    schur_at,
)


class TruncatedSeries:
    """Exact series ``c_0 + c_1 t + ... + c_D t^D`` computed modulo ``t^(D+1)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, degree: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if degree is None:
            degree = len(coeffs) - 1
        coeffs = coeffs[: degree + 1]
        coeffs += [Fraction(0)] * (degree + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c, degree: int) -> "TruncatedSeries":
        return cls([c], degree)

    @classmethod
    def monomial(cls, c, power: int, degree: int) -> "TruncatedSeries":
        if power > degree:
            return cls([], degree)
        return cls([0] * power + [c], degree)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.degree != self.degree:
                raise ValueError("series truncated at different degrees")
            return other
        return TruncatedSeries.constant(other, self.degree)

    def __add__(self, other):
        other = self._coerce(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries([a * c for a in self.coeffs])
        other = self._coerce(other)
        d = self.degree
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(d + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return self.coeffs == self._coerce(other).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def max_abs(self) -> Fraction:
        return max((abs(c) for c in self.coeffs), default=Fraction(0))

    def __repr__(self):
        terms = [f"{c}*t^{i}" for i, c in enumerate(self.coeffs) if c]
        return "TruncatedSeries(" + (" + ".join(terms) or "0") + f"; D={self.degree})"


@dataclass
class LaurentWindow:
    """Symbol coefficients ``c_j`` for ``-(n-1) <= j <= n-1``."""

    n: int
    entries: dict[int, TruncatedSeries] = field(default_factory=dict)

    def __post_init__(self):
        missing = [j for j in range(-(self.n - 1), self.n) if j not in self.entries]
        if missing:
            raise ValueError(f"window incomplete, missing c_j for j in {missing}")
        degrees = {c.degree for c in self.entries.values()}
        if len(degrees) > 1:
            raise ValueError("all window entries must share a truncation degree")

    def __getitem__(self, j: int) -> TruncatedSeries:
        return self.entries[j]

    def matrix(self) -> list[list[TruncatedSeries]]:
        """Toeplitz matrix with ``(i, j)`` entry ``c_(j-i)``; first row is ``c_0 .. c_(n-1)``."""
        return [[self.entries[j - i] for j in range(self.n)] for i in range(self.n)]


def series_det(matrix: list[list[TruncatedSeries]], degree: int) -> TruncatedSeries:
    """Division-free determinant by Laplace expansion memoised over column sets."""
    n = len(matrix)
    if n == 0:
        return TruncatedSeries.constant(1, degree)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> TruncatedSeries:
        if row == n:
            return TruncatedSeries.constant(1, degree)
        total = TruncatedSeries([], degree)
        for sign_pos, c in enumerate(sorted(cols)):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            term = entry * minor(row + 1, cols - {c})
            total = total - term if sign_pos % 2 else total + term
        return total

    return minor(0, frozenset(range(n)))


def toeplitz_det(window: LaurentWindow) -> TruncatedSeries:
    degree = next(iter(window.entries.values())).degree
    return series_det(window.matrix(), degree)


def gessel_symbol(p: ShuffleParams, x: Sequence, n: int, D: int) -> LaurentWindow:
    """Window of ``exp(gamma z) prod (1 + beta_r z) / ((1 - t x_r / z)(1 - alpha_r z))``.

    ``c_j = sum_k h~_k(p) h_(k-j)(x) t^(k-j)``, with ``k - j`` running over ``0..D``.
    """
    h_tilde = extended_h_sequence(p, (n - 1) + D)
    h_x = complete_h_at(x, D)
    entries = {}
    for j in range(-(n - 1), n):
        coeffs = [Fraction(0)] * (D + 1)
        for m in range(D + 1):
            k = j + m
            if k >= 0:
                coeffs[m] = h_tilde[k] * h_x[m]
        entries[j] = TruncatedSeries(coeffs)
    return LaurentWindow(n, entries)


def gessel_lhs(p: ShuffleParams, x: Sequence, n: int, D: int) -> TruncatedSeries:
    """``sum over l(lam) <= n, |lam| <= D`` of ``S~_lam(p) s_lam(x) t^|lam|``."""
    coeffs = [Fraction(0)] * (D + 1)
    for lam in partitions_up_to(D, max_length=n):
        s = schur_at(lam, x)
        if s:
            coeffs[sum(lam)] += extended_schur(p, lam) * s
    return TruncatedSeries(coeffs)


def gessel_rhs(p: ShuffleParams, x: Sequence, n: int, D: int) -> TruncatedSeries:
    return toeplitz_det(gessel_symbol(p, x, n, D))


def cauchy_sides(p: ShuffleParams, x: Sequence, D: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Schur-side and power-sum-side expansions, graded by ``|lam|`` up to ``D``."""
    left = [Fraction(0)] * (D + 1)
    right = [Fraction(0)] * (D + 1)
    for lam in partitions_up_to(D):
        d = sum(lam)
        left[d] += extended_schur(p, lam) * schur_at(lam, x)
        right[d] += extended_power_product(p, lam) * power_sum_at(lam, x) / z_lambda(lam)
    return TruncatedSeries(left), TruncatedSeries(right)


def cauchy_residual(p: ShuffleParams, x: Sequence, D: int) -> TruncatedSeries:
    left, right = cauchy_sides(p, x, D)
    return left - right


@dataclass(frozen=True)
class GapProbability:
    """Numeric Toeplitz gap probability with its truncation certificate."""

    value: float
    error_bound: float
    terms: int
    statistic: str


def br_symbol_coefficients(gamma_plus, p: ShuffleParams, n: int, terms: int) -> dict[int, Fraction]:
    """``c_j = sum_{m < terms} gamma_plus^m / m! * h~_(j+m)(p)`` for ``|j| < n``."""
    gamma_plus = Fraction(gamma_plus)
    h = extended_h_sequence(p, (n - 1) + terms)
    weights = [gamma_plus**m / math.factorial(m) for m in range(terms)]
    out = {}
    for j in range(-(n - 1), n):
        out[j] = sum((w * h[j + m] for m, w in enumerate(weights) if j + m >= 0), Fraction(0))
    return out


def br_gap_probability(gamma_plus, p_minus: ShuffleParams, n: int, eps: float = 1e-12,
                       statistic: str = "largest_part") -> GapProbability:
    """Probability that the point-process partition has largest part (or length) ``<= n``.

    Evaluates ``exp(-gamma_plus) * D_n(exp(gamma_plus / z) G(z))`` where
    ``G`` is the extended generating function.  The determinant over
    ``exp(gamma_plus/z) G(z)`` sums over partitions of length at most
    ``n``; the largest part is the length of the conjugate, which swaps the
    roles of ``alpha`` and ``beta``.  The symbol series is cut after
    ``terms`` summands, chosen so the determinant moves by at most ``eps``.
    """
    if statistic not in ("largest_part", "length"):
        raise ValueError("statistic must be 'largest_part' or 'length'")
    gamma_plus = Fraction(gamma_plus)
    if gamma_plus < 0:
        raise ValueError("gamma_plus must be nonnegative")
    if n <= 0:
        return GapProbability(math.exp(-float(gamma_plus)), 0.0, 0, statistic)
    p = p_minus.swapped() if statistic == "largest_part" else p_minus
    if p.alpha and max(p.alpha) >= 1:
        raise SymbolDivergence("a weight of 1 in the denominator makes G(1) infinite")

    # h~_k <= G(1), so every coefficient error is at most G(1) * Poisson tail
    g_one = math.exp(float(p.gamma)) * math.prod(1 + float(b) for b in p.beta) \
        / math.prod(1 - float(a) for a in p.alpha)
    entry_bound = math.exp(float(gamma_plus)) * g_one
    gp = float(gamma_plus)

    def det_error(terms: int) -> float:
        ratio = gp / (terms + 1)
        if ratio >= 1:
            return math.inf
        # sum_{m >= terms} gp^m / m!  <=  gp^terms / terms! / (1 - gp / (terms + 1))
        tail = math.exp(terms * math.log(gp) - math.lgamma(terms + 1)) / (1 - ratio) if gp else 0.0
        delta = g_one * tail
        # |det(A + E) - det(A)| <= n! ((B + delta)^n - B^n) for entries bounded by B
        growth = math.expm1(n * math.log1p(delta / entry_bound))
        return math.factorial(n) * entry_bound**n * growth * math.exp(-gp)

    terms = 1
    while det_error(terms) >= eps:
        terms += 1
        if terms > 10_000:
            raise SymbolDivergence("tail bound failed to converge")
    coeffs = br_symbol_coefficients(gamma_plus, p, n, terms)
    value = det([[coeffs[j - i] for j in range(n)] for i in range(n)])
    return GapProbability(float(value) * math.exp(-gp), det_error(terms), terms, statistic)
