"""Case runners behind ``shufflesym verify``.

Each runner checks one identity for one parameter case and returns a
JSON-ready report.  Exact checks report their largest residual as an exact
rational string, so a passing case shows ``"0"``.
"""
from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Sequence

import numpy as np

from .combinatorics import (
    cycle_type,
    hook_length_count,
    partitions,
    partitions_up_to,
    reverse_deck,
)
from .cycles import cycle_type_distribution, exact_distances, separation_bound
from .pointprocess import br_partition, br_shape_probability, sample_br
from .rsk import maj_measure, rsk, rsk_shape, standard_tableaux
from .series import cauchy_residual, gessel_lhs, gessel_rhs
from .shuffles import (
    convolution_power,
    exact_shuffle_distribution,
    iterated_shuffle_distribution,
)
from .symmetric import ShuffleParams, extended_schur, principal_specialization

BATTERY = {
    "gsr2": ShuffleParams.gsr(2),
    "half-mixed": ShuffleParams(alpha=(Fraction(1, 2),), gamma=Fraction(1, 2)),
    "beta-only": ShuffleParams(beta=(Fraction(1, 2), Fraction(1, 2))),
    "thirds": ShuffleParams(alpha=(Fraction(1, 3),), beta=(Fraction(1, 3),), gamma=Fraction(1, 3)),
}

POINT_SETS = [(), (Fraction(1, 2),), (Fraction(1, 3), Fraction(1, 5)),
              (Fraction(1, 2), Fraction(-1, 3), Fraction(2))]


def _report(name: str, ok: bool, residual, **case) -> dict:
    return {"check": name, "ok": bool(ok), "max_residual": str(residual), **case}


def _params_case(p: ShuffleParams) -> dict:
    return {"params": p.to_dict()}


def gessel(p: ShuffleParams, x: Sequence, n: int, D: int) -> dict:
    diff = gessel_lhs(p, x, n, D) - gessel_rhs(p, x, n, D)
    return _report("gessel", diff.is_zero(), diff.max_abs(), **_params_case(p),
                   x=[str(v) for v in x], n=n, D=D)


def cauchy(p: ShuffleParams, x: Sequence, D: int) -> dict:
    res = cauchy_residual(p, x, D)
    return _report("cauchy", res.is_zero(), res.max_abs(), **_params_case(p),
                   x=[str(v) for v in x], D=D)


def probinter(p: ShuffleParams, n: int) -> dict:
    """Recording tableau ``Q`` has probability ``S~_shape(Q)`` for every standard ``Q``."""
    law = exact_shuffle_distribution(p, n).pushforward(lambda pi: rsk(pi)[1])
    worst = Fraction(0)
    for lam in partitions(n):
        target = extended_schur(p, lam)
        for q in standard_tableaux(lam):
            worst = max(worst, abs(law.get(q, Fraction(0)) - target))
    return _report("probinter", worst == 0, worst, **_params_case(p), n=n)


def shape_law(p: ShuffleParams, n: int) -> dict:
    law = exact_shuffle_distribution(p, n).pushforward(rsk_shape)
    worst = max(abs(law.get(lam, Fraction(0)) - hook_length_count(lam) * extended_schur(p, lam))
                for lam in partitions(n))
    return _report("c1", worst == 0, worst, **_params_case(p), n=n)


def duality(p: ShuffleParams, n: int) -> dict:
    """Shuffle then reverse has the cycle law of the alpha/beta-swapped shuffle."""
    reversed_law = exact_shuffle_distribution(p, n).pushforward(lambda pi: cycle_type(reverse_deck(pi)))
    swapped = cycle_type_distribution(p.swapped(), n)
    keys = set(reversed_law) | set(swapped.entries)
    worst = max((abs(reversed_law.get(k, Fraction(0)) - swapped[k]) for k in keys), default=Fraction(0))
    return _report("duality", worst == 0, worst, **_params_case(p), n=n)


def convolution(p: ShuffleParams, n: int, k: int = 2, target: ShuffleParams | None = None) -> dict:
    """``k``-fold convolution against the tuple-pile law, or against ``target`` if given."""
    conv = convolution_power(exact_shuffle_distribution(p, n), k)
    other = (exact_shuffle_distribution(target, n) if target is not None
             else iterated_shuffle_distribution(p, k, n))
    keys = set(conv) | set(other)
    worst = max((abs(conv[q] - other[q]) for q in keys), default=Fraction(0))
    case = {"target": target.to_dict()} if target is not None else {}
    return _report("convolution", worst == 0, worst, **_params_case(p), n=n, k=k, **case)


def maj(n: int, p, q, k: int, l: int) -> dict:
    """Normalised RSK pushforward of the maj weight equals the product of principal specialisations."""
    from itertools import permutations

    push: Counter = Counter()
    for pi in permutations(range(1, n + 1)):
        push[rsk_shape(pi)] += maj_measure(pi, p, q, k, l)
    total = sum(push.values(), Fraction(0))
    schur = {lam: principal_specialization(lam, p, k) * principal_specialization(lam, q, l)
             for lam in partitions(n)}
    schur_total = sum(schur.values(), Fraction(0))
    worst = max(abs(push[lam] / total - schur[lam] / schur_total) for lam in schur)
    case = dict(n=n, p=str(Fraction(p)), q=str(Fraction(q)), k=k, l=l, Z_n=str(total))
    if Fraction(p) == 1 and Fraction(q) == 1:
        case["binomial_Z_n"] = str(math.comb(k * l + n - 1, n))
        ok = worst == 0 and total == math.comb(k * l + n - 1, n)
    else:
        ok = worst == 0
    return _report("maj", ok, worst, **case)


def mybound(p: ShuffleParams, n: int, kmax: int) -> dict:
    d = exact_shuffle_distribution(p, n)
    rows, ok = [], True
    for k in range(1, kmax + 1):
        sep, tv = exact_distances(convolution_power(d, k))
        bound = separation_bound(p, k, n)
        ok &= sep <= bound and tv <= sep
        rows.append({"k": k, "separation": str(sep), "total_variation": str(tv), "bound": str(bound)})
    return _report("mybound", ok, 0, **_params_case(p), n=n, steps=rows)


def extend(gamma_plus, p: ShuffleParams, samples: int, seed: int, max_size: int = 4) -> dict:
    """Monte Carlo partition frequencies against the exact law, per shape, in sigma units."""
    rng = np.random.default_rng(seed)
    counts = Counter(br_partition(sample_br(gamma_plus, p, rng)) for _ in range(samples))
    rows, worst_z = [], 0.0
    for lam in partitions_up_to(max_size):
        prob = br_shape_probability(lam, gamma_plus, p).value
        sigma = math.sqrt(prob * (1 - prob) / samples)
        freq = counts[lam] / samples
        z = abs(freq - prob) / sigma if sigma else (0.0 if freq == prob else math.inf)
        worst_z = max(worst_z, z)
        rows.append({"shape": list(lam), "exact": prob, "empirical": freq, "z": z})
    return _report("extend", worst_z <= 3, f"{worst_z:.3f} sigma", **_params_case(p),
                   gamma_plus=str(Fraction(gamma_plus)), samples=samples, seed=seed, shapes=rows)
