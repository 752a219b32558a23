"""End-to-end acceptance checks, one test per criterion.

Each test prints a ``criterion N: PASS|FAIL`` line; the lines are repeated in
the pytest terminal summary.  Run alone with ``pytest tests/test_acceptance.py -s``.
"""
import math
import time
from collections import Counter
from contextlib import contextmanager
from fractions import Fraction
from itertools import permutations, product

import numpy as np
import pytest

from shufflesym.combinatorics import cycle_type, fixed_points, partitions, partitions_up_to, reverse_deck
from shufflesym.cycles import (
    cycle_law_of,
    cycle_type_distribution,
    exact_distances,
    expected_fixed_points,
    limit_cycle_pmf,
    separation_bound,
    tv_to_limit,
)
from shufflesym.pointprocess import (
    br_partition,
    br_partition_bruteforce,
    br_shape_probability,
    sample_br,
)
from shufflesym.rsk import brkv_insert, brkv_inverse, is_brkv_pair, signed_tableaux, standard_tableaux
from shufflesym.series import br_gap_probability
from shufflesym.shuffles import convolution_power, exact_shuffle_distribution, sample_shuffles
from shufflesym.symmetric import ShuffleParams
from shufflesym import verify
from shufflesym.verify import BATTERY, POINT_SETS

F = Fraction
GSR2 = ShuffleParams.gsr(2)
RESULTS: list[str] = []


@contextmanager
def criterion(number: int, title: str):
    start = time.perf_counter()
    details: list[str] = []
    try:
        yield details
    except BaseException:
        line = f"criterion {number:2d}: FAIL  {title}"
        print(line)
        RESULTS.append(line)
        raise
    took = time.perf_counter() - start
    extra = ("  [" + "; ".join(details) + "]") if details else ""
    line = f"criterion {number:2d}: PASS  {title} ({took:.1f}s){extra}"
    print(line)
    RESULTS.append(line)


def _all_ok(reports):
    bad = [r for r in reports if not r["ok"]]
    assert not bad, bad[:3]


def test_criterion_01_recording_tableau_law():
    with criterion(1, "recording tableau probability is S~_shape, n <= 4, battery") as info:
        start = time.perf_counter()
        _all_ok([verify.probinter(p, n) for p in BATTERY.values() for n in range(1, 5)])
        took = time.perf_counter() - start
        assert took < 120
        info.append(f"{took:.1f}s < 120s")


def test_criterion_02_shape_law():
    with criterion(2, "RSK shape law is f_lam S~_lam, n <= 5, battery"):
        _all_ok([verify.shape_law(p, n) for p in BATTERY.values() for n in range(1, 6)])


def test_criterion_03_gessel_identity():
    with criterion(3, "Toeplitz identity coefficientwise, n <= 4, D = 6, |x| <= 3, battery") as info:
        start = time.perf_counter()
        _all_ok([verify.gessel(p, x, n, 6) for p in BATTERY.values() for x in POINT_SETS for n in range(1, 5)])
        took = time.perf_counter() - start
        assert took < 300
        info.append(f"{took:.1f}s < 300s")


def test_criterion_04_cauchy_identity():
    with criterion(4, "Cauchy residual exactly 0, D = 6, battery"):
        _all_ok([verify.cauchy(p, x, 6) for p in BATTERY.values() for x in POINT_SETS])


def test_criterion_05_cycle_index():
    with criterion(5, "cycle index = enumeration and reversal duality, n <= 5, battery"):
        for p in BATTERY.values():
            for n in range(1, 6):
                assert cycle_type_distribution(p, n) == cycle_law_of(exact_shuffle_distribution(p, n))
        _all_ok([verify.duality(p, n) for p in BATTERY.values() for n in range(1, 6)])


def test_criterion_06_fixed_points():
    with criterion(6, "expected fixed points exact n <= 5; n = 52 GSR-2 Monte Carlo within 3 sigma") as info:
        for p in BATTERY.values():
            for n in range(1, 6):
                assert expected_fixed_points(p, n) == exact_shuffle_distribution(p, n).expectation(fixed_points)
        target = expected_fixed_points(GSR2, 52)
        assert target == sum(F(1, 2 ** (j - 1)) for j in range(1, 53))
        perms = sample_shuffles(GSR2, 52, 100_000, 20240601)
        fixed = (perms == np.arange(1, 53)).sum(axis=1)
        sigma = fixed.std(ddof=1) / math.sqrt(len(fixed))
        z = abs(fixed.mean() - float(target)) / sigma
        info.append(f"mean {fixed.mean():.4f} vs {float(target):.4f}, z = {z:.2f}")
        assert z <= 3


def test_criterion_07_convolution():
    with criterion(7, "(1/2;-;1/2)^2 = (1/4;-;3/4) n <= 5, GSR-2^2 = GSR-4 n <= 4"):
        half = ShuffleParams(alpha=(F(1, 2),), gamma=F(1, 2))
        quarter = ShuffleParams(alpha=(F(1, 4),), gamma=F(3, 4))
        _all_ok([verify.convolution(half, n, 2, quarter) for n in range(1, 6)])
        _all_ok([verify.convolution(GSR2, n, 2, ShuffleParams.gsr(4)) for n in range(1, 5)])


def test_criterion_08_mixing_bound():
    with criterion(8, "separation of k-fold shuffle <= C(n,2) rate^k, n <= 4, k <= 6, battery"):
        for p in BATTERY.values():
            for n in range(1, 5):
                d = exact_shuffle_distribution(p, n)
                for k in range(1, 7):
                    sep, tv = exact_distances(convolution_power(d, k))
                    assert tv <= sep <= separation_bound(p, k, n)


def test_criterion_09_limit_law():
    with criterion(9, "N_1, N_2 limit laws: TV < 0.05 at n = 30 and decreasing; u = 1/2 mixture within 1e-3") as info:
        gamma = F(1, 2)
        p = ShuffleParams(alpha=(1 - gamma,), gamma=gamma)
        laws = {n: cycle_type_distribution(p, n) for n in range(0, 31)}
        for i in (1, 2):
            lim = limit_cycle_pmf(i, 1, gamma)
            tvs = [tv_to_limit(laws[n].marginal(i), lim) for n in (10, 20, 30)]
            info.append(f"TV N_{i} = " + ", ".join(f"{float(t):.2e}" for t in tvs))
            assert tvs[2] < 0.05
            assert tvs[0] > tvs[1] > tvs[2]
        # deck size n with probability (1-u) u^n, cut at n = 25; the dropped mass is u^26
        u, cut = F(1, 2), 25
        tail = float(u ** (cut + 1))
        for i in (1, 2):
            lim = limit_cycle_pmf(i, 1, gamma, u=u)
            mixture = Counter()
            for n in range(cut + 1):
                for c, prob in laws[n].marginal(i).items():
                    mixture[c] += (1 - u) * u**n * prob
            worst = max(abs(float(mixture[c]) - float(lim.pmf[c])) for c in range(len(lim.pmf)))
            info.append(f"mixture N_{i} max gap {worst:.1e} (tail {tail:.1e})")
            assert worst < 1e-3


def test_criterion_10_point_process():
    with criterion(10, "point process: shape law by MC, Greene equality, gap probability by MC") as info:
        samples = 100_000
        gp = 2
        rng = np.random.default_rng(99)
        shapes = [br_partition(sample_br(gp, GSR2, rng)) for _ in range(samples)]
        counts = Counter(shapes)
        worst = 0.0
        for lam in partitions_up_to(4):
            prob = br_shape_probability(lam, gp, GSR2).value
            if prob == 0:
                # more rows than alpha weights: impossible, so never observed
                assert counts[lam] == 0, lam
                continue
            sigma = math.sqrt(prob * (1 - prob) / samples)
            worst = max(worst, abs(counts[lam] / samples - prob) / sigma)
        info.append(f"shape law worst z = {worst:.2f}")
        assert worst <= 3

        mismatches = checked = 0
        greene_rng = np.random.default_rng(7)
        params = list(BATTERY.values())
        while checked < 500:
            c = sample_br(3, params[checked % len(params)], greene_rng)
            if len(c) > 8:
                continue
            checked += 1
            mismatches += br_partition(c) != br_partition_bruteforce(c)
        info.append(f"Greene mismatches {mismatches}/500")
        assert mismatches == 0

        largest = np.array([s[0] if s else 0 for s in shapes])
        worst = 0.0
        for n in range(1, 7):
            exact = br_gap_probability(gp, GSR2, n).value
            emp = float(np.mean(largest <= n))
            sigma = math.sqrt(max(exact * (1 - exact), 1e-12) / samples)
            worst = max(worst, abs(emp - exact) / sigma)
        info.append(f"gap probability worst z = {worst:.2f}")
        assert worst <= 3


def test_criterion_11_maj_pushforward():
    with criterion(11, "maj weight pushforward = principal specialisations, n <= 5, k,l <= 3"):
        bases = [F(1), F(1, 2), F(2)]
        reports = [verify.maj(n, p, q, k, l) for n in range(1, 6) for p in bases for q in bases
                   for k in range(1, 4) for l in range(1, 4)]
        _all_ok(reports)
        assert sum("binomial_Z_n" in r for r in reports) == 5 * 9


def test_criterion_12_brkv_bijection():
    with criterion(12, "signed insertion is a bijection onto valid pairs, exhaustive") as info:
        total = 0
        for alphabet, max_len in (((-1, 1), 5), ((-2, -1, 1, 2), 4)):
            for n in range(1, max_len + 1):
                images = set()
                for word in product(alphabet, repeat=n):
                    pq = brkv_insert(word)
                    assert is_brkv_pair(*pq)
                    assert brkv_inverse(*pq) == word
                    images.add(pq)
                    total += 1
                valid = {(p, q) for lam in partitions(n) for p in signed_tableaux(lam, alphabet)
                         for q in standard_tableaux(lam)}
                assert images == valid
                for p, q in valid:
                    assert brkv_insert(brkv_inverse(p, q)) == (p, q)
        info.append(f"{total} words")
