"""Cycle structure after a shuffle: cycle index, fixed points, mixing bounds, limit laws.

The cycle index factors over cycle lengths.  For each ``i`` put

    F_i(y) = exp( sum_j  a_ij y^j / (i j) ),   a_ij = sum_{d | i} mu(d) p~_(jd)^(i/d)

so that the chance of cycle type ``lam`` on ``n`` cards is
``prod_i [y^(m_i(lam))] F_i(y)``.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath

from .combinatorics import (
    Partition,
    cycle_type,
    divisors,
    moebius,
    partitions,
)
from .errors import BoundaryParameter, CapExceeded, NegativeMultiplicity
from .shuffles import ExactDistribution
from .symmetric import ShuffleParams, extended_power_sum

DEFAULT_CAP = 30
LIMIT_DPS = 60


@dataclass
class CycleTypeDistribution:
    """Exact law of the cycle type on a deck of ``deck_size`` cards."""

    deck_size: int
    entries: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {lam: Fraction(v) for lam, v in self.entries.items() if v}

    def __getitem__(self, lam) -> Fraction:
        return self.entries.get(tuple(lam), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, CycleTypeDistribution):
            return self.deck_size == other.deck_size and self.entries == other.entries
        if isinstance(other, dict):
            return self.entries == {k: v for k, v in other.items() if v}
        return NotImplemented

    def total(self) -> Fraction:
        return sum(self.entries.values(), Fraction(0))

    def marginal(self, i: int) -> dict[int, Fraction]:
        """Law of the number of ``i``-cycles."""
        out: dict[int, Fraction] = {}
        for lam, prob in self.entries.items():
            c = lam.count(i)
            out[c] = out.get(c, Fraction(0)) + prob
        return out

    def mean_cycles(self, i: int) -> Fraction:
        return sum((lam.count(i) * prob for lam, prob in self.entries.items()), Fraction(0))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["partition", "probability"])
        for lam, prob in sorted(self.entries.items(), reverse=True):
            writer.writerow(["+".join(map(str, lam)), str(prob)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "CycleTypeDistribution":
        entries = {}
        for row in csv.DictReader(io.StringIO(text)):
            lam = tuple(int(v) for v in row["partition"].split("+") if v)
            entries[lam] = Fraction(row["probability"])
        n = sum(next(iter(entries))) if entries else 0
        return cls(n, entries)


def _exp_series(g: Sequence[Fraction], order: int) -> list[Fraction]:
    """Coefficients of ``exp(G)`` up to ``y^order`` where ``g[j]`` is the ``y^j`` term of ``G`` (``g[0] = 0``)."""
    f = [Fraction(1)] + [Fraction(0)] * order
    for k in range(1, order + 1):
        f[k] = sum((j * g[j] * f[k - j] for j in range(1, k + 1) if j < len(g)), Fraction(0)) / k
    return f


def _law_from_factors(factors: dict[int, list[Fraction]], n: int) -> CycleTypeDistribution:
    entries = {}
    for lam in partitions(n):
        prob = Fraction(1)
        for i in set(lam):
            prob *= factors[i][lam.count(i)]
        entries[lam] = prob
    return CycleTypeDistribution(n, entries)


def cycle_index_factor(p: ShuffleParams, i: int, order: int) -> list[Fraction]:
    """Coefficients ``[y^0 .. y^order]`` of the length-``i`` factor of the cycle index."""
    ptilde = {}

    def pt(m: int) -> Fraction:
        if m not in ptilde:
            ptilde[m] = extended_power_sum(p, m)
        return ptilde[m]

    g = [Fraction(0)] * (order + 1)
    for j in range(1, order + 1):
        a_ij = sum((moebius(d) * pt(j * d) ** (i // d) for d in divisors(i)), Fraction(0))
        g[j] = a_ij / (i * j)
    return _exp_series(g, order)


def cycle_type_distribution(p: ShuffleParams, n: int, cap: int = DEFAULT_CAP) -> CycleTypeDistribution:
    """Cycle-type law after one shuffle, read off the cycle index."""
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the cycle-index cap {cap}")
    factors = {i: cycle_index_factor(p, i, n // i) for i in range(1, n + 1)}
    return _law_from_factors(factors, n)


def cycle_law_of(d: ExactDistribution) -> CycleTypeDistribution:
    """Pushforward of an exact permutation law to cycle types."""
    return CycleTypeDistribution(d.deck_size, d.pushforward(cycle_type))


def necklace_count(i: int, q: int) -> Fraction:
    """``(1/i) sum_{d | i} mu(d) q^(i/d)``."""
    return Fraction(sum(moebius(d) * q ** (i // d) for d in divisors(i)), i)


def mixed_riffle_cycle_index(q: int, gamma, n: int, cap: int = DEFAULT_CAP) -> CycleTypeDistribution:
    """Cycle-type law for ``alpha_1 = ... = alpha_q = (1 - gamma)/q``, ``beta = 0``.

    Uses the closed product ``(1 - x_i (u(1-gamma)/q)^i)^(-g_i) exp(u^i x_i (1-(1-gamma)^i)/i)``
    rather than the general factor expansion.
    """
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the cycle-index cap {cap}")
    gamma = Fraction(gamma)
    factors = {}
    for i in range(1, n + 1):
        order = n // i
        g = necklace_count(i, q)
        if g.denominator != 1 or g < 0:
            raise NegativeMultiplicity(f"necklace count {g} for i={i}, q={q}")
        g = int(g)
        c = ((1 - gamma) / q) ** i
        b = (1 - (1 - gamma) ** i) / i
        neg_binom = [math.comb(g + r - 1, r) * c**r if g else Fraction(int(r == 0))
                     for r in range(order + 1)]
        poisson = [b**r / math.factorial(r) for r in range(order + 1)]
        factors[i] = [sum((neg_binom[a] * poisson[r - a] for a in range(r + 1)), Fraction(0))
                      for r in range(order + 1)]
    return _law_from_factors(factors, n)


def expected_fixed_points(p: ShuffleParams, n: int) -> Fraction:
    """``gamma + sum_{j=1..n} [sum alpha_i^j + (-1)^(j+1) sum beta_i^j]``."""
    total = Fraction(p.gamma)
    for j in range(1, n + 1):
        sign = 1 if j % 2 == 1 else -1
        total += sum((a**j for a in p.alpha), Fraction(0))
        total += sign * sum((b**j for b in p.beta), Fraction(0))
    return total


def separation_bound(p: ShuffleParams, k: int, n: int) -> Fraction:
    """Strong-uniform-time bound ``C(n, 2) (sum alpha^2 + sum beta^2)^k``."""
    return math.comb(n, 2) * p.collision_rate() ** k


def exact_distances(d: ExactDistribution) -> tuple[Fraction, Fraction]:
    """Separation distance and total variation distance to uniform."""
    n = d.deck_size
    n_fact = math.factorial(n)
    uniform = Fraction(1, n_fact)
    if len(d) < n_fact:
        separation = Fraction(1)
    else:
        separation = max(1 - n_fact * prob for prob in d.values())
    tv = sum((abs(prob - uniform) for prob in d.values()), Fraction(0))
    tv += (n_fact - len(d)) * uniform
    return max(separation, Fraction(0)), tv / 2


@dataclass(frozen=True)
class LimitCyclePmf:
    """Law of ``N_i``: Poisson plus a sum of i.i.d. geometrics on ``{0, 1, ...}``.

    Probabilities are ``mpmath.mpf`` at ``LIMIT_DPS`` digits so that tiny
    distances to exact laws stay resolvable; they mix freely with floats.
    """

    i: int
    q: int
    gamma: Fraction
    u: Fraction
    pmf: tuple
    tail: object
    poisson_mean: object
    geometric_count: int
    geometric_param: object


def limit_cycle_pmf(i: int, q: int, gamma, u=1, cap: int = 30) -> LimitCyclePmf:
    """Limit law of the number of ``i``-cycles for the mixed riffle family.

    ``u = 1`` is the large-deck limit; ``0 < u < 1`` is the law under a deck
    size drawn with ``P(n) = (1-u) u^n``.  Geometrics are ``P(G = c) = (1-x) x^c``.
    """
    gamma, u = Fraction(gamma), Fraction(u)
    if q < 1 or not (0 <= gamma <= 1) or not (0 < u <= 1):
        raise ValueError("need q >= 1, 0 <= gamma <= 1, 0 < u <= 1")
    g = necklace_count(i, q)
    if g < 0 or g.denominator != 1:
        raise NegativeMultiplicity(f"necklace count {g} for i={i}, q={q}")
    g = int(g)
    x_exact = (u * (1 - gamma) / q) ** i
    if g > 0 and x_exact >= 1:
        raise BoundaryParameter(f"geometric parameter {x_exact} for i={i}: law undefined")
    with mpmath.workdps(LIMIT_DPS):
        mean = _mpf(u**i * (1 - (1 - gamma) ** i) / i)
        x = _mpf(x_exact)
        poisson = [mpmath.exp(-mean) * mean**c / mpmath.factorial(c) for c in range(cap + 1)]
        neg_binom = [math.comb(g + c - 1, c) * (1 - x) ** g * x**c if g else mpmath.mpf(c == 0)
                     for c in range(cap + 1)]
        pmf = tuple(mpmath.fsum(poisson[a] * neg_binom[c - a] for a in range(c + 1))
                    for c in range(cap + 1))
        tail = max(mpmath.mpf(0), 1 - mpmath.fsum(pmf))
    return LimitCyclePmf(i, q, gamma, u, pmf, tail, mean, g, x)


def _mpf(value: Fraction):
    return mpmath.mpf(value.numerator) / value.denominator


def tv_to_limit(exact: dict[int, Fraction], limit: LimitCyclePmf) -> float:
    """Total variation between an exact count law and a limit pmf (tail mass counted)."""
    support = max(max(exact, default=0), len(limit.pmf) - 1)
    with mpmath.workdps(LIMIT_DPS):
        diff = mpmath.mpf(0)
        for c in range(support + 1):
            lim = limit.pmf[c] if c < len(limit.pmf) else 0
            diff += abs(_mpf(Fraction(exact.get(c, 0))) - lim)
        return (diff + limit.tail) / 2
