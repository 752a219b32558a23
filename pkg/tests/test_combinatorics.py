from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from shufflesym.combinatorics import (
    as_partition,
    as_permutation,
    compose,
    conjugate,
    cycle_type,
    descent_stats,
    divisors,
    fixed_points,
    gaussian_polynomial,
    hook_length_count,
    hook_length_count_det,
    identity,
    inverse,
    moebius,
    partitions,
    partitions_up_to,
    q_binomial,
    reverse_deck,
    z_lambda,
)
from shufflesym.errors import DegenerateEvaluation
from shufflesym.rsk import standard_tableaux

perm_strategy = st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


@st.composite
def partition_strategy(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    parts = []
    left = n
    while left:
        p = draw(st.integers(1, left))
        parts.append(p)
        left -= p
    return tuple(sorted(parts, reverse=True))


def test_partition_counts_match_known_sequence():
    # p(n) for n = 0..10
    assert [sum(1 for _ in partitions(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partitions_up_to_respects_length():
    assert all(len(lam) <= 2 for lam in partitions_up_to(6, max_length=2))
    assert () in set(partitions_up_to(3))


def test_validators():
    assert as_partition([3, 1, 1]) == (3, 1, 1)
    with pytest.raises(ValueError):
        as_partition([1, 2])
    with pytest.raises(ValueError):
        as_permutation([1, 1, 3])


@pytest.mark.parametrize("lam, expected", [((4,), 1), ((1, 1, 1), 1), ((2, 1), 2), ((3, 2), 5), ((3, 3), 5)])
def test_hook_length_examples(lam, expected):
    assert hook_length_count(lam) == expected


@given(partition_strategy(max_n=7))
def test_hook_length_against_enumeration_and_determinant(lam):
    # oracles: brute-force tableau enumeration and the factorial determinant
    assert hook_length_count(lam) == sum(1 for _ in standard_tableaux(lam))
    assert hook_length_count(lam) == hook_length_count_det(lam)


def test_sum_of_squares_of_tableau_counts_is_factorial():
    for n in range(1, 8):
        assert sum(hook_length_count(lam) ** 2 for lam in partitions(n)) == factorial(n)


@pytest.mark.parametrize("lam, expected", [((1, 1, 1), 6), ((2, 1), 2), ((3, 3), 18)])
def test_z_lambda_examples(lam, expected):
    assert z_lambda(lam) == expected


def test_z_lambda_counts_conjugacy_classes():
    for n in range(1, 7):
        sizes = Counter(cycle_type(pi) for pi in permutations(range(1, n + 1)))
        for lam, size in sizes.items():
            assert size * z_lambda(lam) == factorial(n)


@pytest.mark.parametrize("d, mu", [(1, 1), (2, -1), (4, 0), (6, 1), (30, -1), (12, 0)])
def test_moebius_examples(d, mu):
    assert moebius(d) == mu


def test_moebius_sums_vanish_over_divisors():
    for n in range(2, 60):
        assert sum(moebius(d) for d in divisors(n)) == 0


@pytest.mark.parametrize("pi, lam", [((1, 2, 3, 4), (1, 1, 1, 1)), ((2, 1), (2,)), ((2, 3, 1, 5, 4), (3, 2))])
def test_cycle_type_examples(pi, lam):
    assert cycle_type(pi) == lam


@pytest.mark.parametrize("pi, expected", [
    ((1, 2, 3), (frozenset(), 0, 0)),
    ((2, 1), (frozenset({1}), 1, 1)),
    ((3, 1, 2), (frozenset({1}), 1, 1)),
    ((3, 2, 1), (frozenset({1, 2}), 2, 3)),
])
def test_descent_examples(pi, expected):
    s = descent_stats(pi)
    assert (s.descent_set, s.d, s.maj) == expected


def test_maj_is_equidistributed_with_inversions():
    # MacMahon: maj and inv share the q-factorial distribution
    for n in range(1, 6):
        perms = list(permutations(range(1, n + 1)))
        maj = Counter(descent_stats(p).maj for p in perms)
        inv = Counter(sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j]) for p in perms)
        assert maj == inv


@pytest.mark.parametrize("n, m, q, expected", [(5, 0, 3, 1), (2, 1, 2, 3), (4, 2, 1, 6), (3, 5, 2, 0)])
def test_q_binomial_examples(n, m, q, expected):
    assert q_binomial(n, m, q) == expected


def test_q_binomial_degenerate_base():
    with pytest.raises(DegenerateEvaluation):
        q_binomial(3, 1, 0)


@given(st.integers(0, 9), st.integers(0, 9), st.fractions(min_value=Fraction(1, 5), max_value=3, max_denominator=7))
def test_q_binomial_against_product_formula(n, m, q):
    if q == 1 or m > n:
        return
    num = den = Fraction(1)
    for i in range(m):
        num *= 1 - q ** (n - i)
        den *= 1 - q ** (i + 1)
    assert q_binomial(n, m, q) == num / den


def test_gaussian_polynomial_counts_subsets_by_sum():
    # coefficient of q^k counts m-subsets of {0..n-1} with sum k - m(m-1)/2
    from itertools import combinations
    for n in range(7):
        for m in range(n + 1):
            counts = Counter(sum(c) - m * (m - 1) // 2 for c in combinations(range(n), m))
            poly = gaussian_polynomial(n, m)
            assert {k: v for k, v in enumerate(poly) if v} == dict(counts)
            assert sum(poly) == comb(n, m)


@pytest.mark.parametrize("pi, expected", [((1, 2, 3), (3, 2, 1)), ((3, 2, 1), (1, 2, 3)), ((2, 1, 3), (2, 3, 1))])
def test_reverse_deck_examples(pi, expected):
    assert reverse_deck(pi) == expected


@given(perm_strategy, perm_strategy)
def test_group_laws(s, t):
    n = len(s)
    assert compose(s, inverse(s)) == identity(n)
    assert compose(inverse(s), s) == identity(n)
    if len(t) == n:
        assert inverse(compose(s, t)) == compose(inverse(t), inverse(s))
        # cycle type is a class function
        assert cycle_type(compose(compose(t, s), inverse(t))) == cycle_type(s)


@given(perm_strategy)
def test_fixed_points_match_cycle_type(pi):
    assert fixed_points(pi) == cycle_type(pi).count(1)
    assert sum(cycle_type(pi)) == len(pi)


@given(partition_strategy())
@settings(max_examples=60)
def test_conjugate_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)
