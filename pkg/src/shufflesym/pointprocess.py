"""The Baik-Rains point process with no plus-side alpha/beta weights.

Points fall on the unit square (rate ``gamma_plus * gamma``) and on
horizontal lines at integer levels: level ``i > 0`` at rate
``gamma_plus * alpha_i``, level ``-i`` at rate ``gamma_plus * beta_i``.
Points on the same positive level may sit in one increasing sequence;
points on the same negative level may not.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .combinatorics import Partition, Permutation, hook_length_count
from .errors import DuplicateX, TooManyPoints
from .rsk import rsk_shape
from .symmetric import ShuffleParams, extended_schur

BRUTE_FORCE_LIMIT = 10


@dataclass
class PointConfig:
    continuum_points: list[tuple[float, float]] = field(default_factory=list)
    line_points: list[tuple[float, int]] = field(default_factory=list)

    def __len__(self):
        return len(self.continuum_points) + len(self.line_points)

    def points(self) -> list[tuple[float, float]]:
        """All points as ``(x, y)``; line points have integer ``y``."""
        return list(self.continuum_points) + [(x, level) for x, level in self.line_points]

    @classmethod
    def from_points(cls, pts) -> "PointConfig":
        """Split ``(x, y)`` pairs: a nonzero integer ``y`` is a line level."""
        cont, lines = [], []
        for x, y in pts:
            if y != 0 and float(y).is_integer():
                lines.append((x, int(y)))
            else:
                cont.append((x, y))
        return cls(cont, lines)

    def to_json(self) -> str:
        return json.dumps({"continuum": [list(p) for p in self.continuum_points],
                           "lines": [list(p) for p in self.line_points]})

    @classmethod
    def from_json(cls, text: str) -> "PointConfig":
        data = json.loads(text)
        return cls([tuple(p) for p in data.get("continuum", [])],
                   [(p[0], int(p[1])) for p in data.get("lines", [])])


def sample_br(gamma_plus, p_minus: ShuffleParams, seed) -> PointConfig:
    """One realisation of the point process; ``seed`` may also be a ``numpy`` Generator."""
    rng = np.random.default_rng(seed)
    gp = float(gamma_plus)
    levels = [0] + list(range(1, len(p_minus.alpha) + 1)) + [-i for i in range(1, len(p_minus.beta) + 1)]
    rates = [gp * float(p_minus.weight(level)) for level in levels]
    counts = rng.poisson(rates)
    total = int(counts.sum())
    xs = rng.random(total)
    # a repeated x has probability zero; redraw if the generator produces one
    while len(np.unique(xs)) < total:
        xs = rng.random(total)
    cont, lines = [], []
    k = 0
    for level, c in zip(levels, counts):
        for _ in range(int(c)):
            if level == 0:
                y = float(rng.random())
                while y in (0.0, 1.0):
                    y = float(rng.random())
                cont.append((float(xs[k]), y))
            else:
                lines.append((float(xs[k]), level))
            k += 1
    return PointConfig(cont, lines)


def _rank_key(point):
    x, y, on_line = point
    if on_line and y < 0:
        return (y, -x)
    return (y, x)


def _tagged(c: PointConfig) -> list[tuple[float, float, bool]]:
    pts = [(x, y, False) for x, y in c.continuum_points] + [(x, lvl, True) for x, lvl in c.line_points]
    xs = [p[0] for p in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateX("points must have distinct x coordinates")
    if any(not on_line and not 0 <= y <= 1 for _, y, on_line in pts):
        raise ValueError("continuum points must have y in [0, 1]")
    return pts


def points_to_permutation(c: PointConfig) -> Permutation:
    """``pi(i)`` = y-rank of the point with the ``i``-th smallest x.

    Ties on a negative level rank the larger x lower; ties on a positive
    level rank the larger x higher.
    """
    pts = _tagged(c)
    by_y = sorted(pts, key=_rank_key)
    rank = {p: r for r, p in enumerate(by_y, start=1)}
    return tuple(rank[p] for p in sorted(pts))


def br_partition(c: PointConfig) -> Partition:
    if len(c) == 0:
        return ()
    return rsk_shape(points_to_permutation(c))


def _precedes(a, b) -> bool:
    """``a`` may come immediately before ``b`` in an increasing sequence."""
    xa, ya, _ = a
    xb, yb, _ = b
    if not (xa <= xb and ya <= yb):
        return False
    return ya != yb or ya >= 0


def br_partition_bruteforce(c: PointConfig) -> Partition:
    """Partition from maximal unions of ``l`` increasing sequences, by exhaustive search."""
    pts = sorted(_tagged(c))
    m = len(pts)
    if m > BRUTE_FORCE_LIMIT:
        raise TooManyPoints(f"{m} points exceeds the brute-force limit {BRUTE_FORCE_LIMIT}")
    if m == 0:
        return ()
    # chains: subsets whose x-sorted consecutive pairs are increasing steps
    is_chain = [False] * (1 << m)
    for mask in range(1 << m):
        idx = [i for i in range(m) if mask >> i & 1]
        is_chain[mask] = all(_precedes(pts[a], pts[b]) for a, b in zip(idx, idx[1:]))
    # fewest chains covering each subset
    cover = [0] * (1 << m)
    for mask in range(1, 1 << m):
        low = mask & -mask
        rest = mask ^ low
        best = m
        sub = rest
        while True:
            chain = sub | low
            if is_chain[chain]:
                best = min(best, 1 + cover[mask ^ chain])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        cover[mask] = best
    largest = [0] * (m + 1)
    for mask in range(1 << m):
        size = bin(mask).count("1")
        for l in range(cover[mask], m + 1):
            largest[l] = max(largest[l], size)
    parts = []
    for l in range(1, m + 1):
        part = largest[l] - largest[l - 1]
        if part == 0:
            break
        parts.append(part)
    return tuple(parts)


@dataclass(frozen=True)
class ShapeProbability:
    """``exp(-rate) * coefficient``, kept exact until :attr:`value` is asked for."""

    coefficient: Fraction
    rate: Fraction

    @property
    def value(self) -> float:
        return float(self.coefficient) * math.exp(-float(self.rate))


def br_shape_probability(lam: Partition, gamma_plus, p_minus: ShuffleParams) -> ShapeProbability:
    """Chance that the point-process partition equals ``lam``."""
    gamma_plus = Fraction(gamma_plus)
    size = sum(lam)
    coeff = gamma_plus**size * hook_length_count(lam) * extended_schur(p_minus, lam) / math.factorial(size)
    return ShapeProbability(coeff, gamma_plus)
