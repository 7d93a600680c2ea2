from collections import Counter
from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glnsw.partitions import (
    CycleType,
    EMPTY,
    LassalleIntegralityError,
    Partition,
    alpha,
    chiral_count_brute,
    chiral_count_closed_form,
    enumerate_partitions,
    hooks,
    lassalle_coefficient,
    log_threshold_statistic,
    mn_character,
    partition_count,
    specht_dimension,
    v_specht,
    valuation_distribution,
    valuation_statistic,
)
from glnsw.valuations import v_int

P = Partition


def partitions_of(max_n):
    return st.integers(0, max_n).flatmap(lambda n: st.sampled_from(list(enumerate_partitions(n))))


def test_partition_validation():
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, 0))
    assert EMPTY.size == 0


def test_enumerate_small():
    assert list(enumerate_partitions(0)) == [EMPTY]
    assert list(enumerate_partitions(4)) == [P((4,)), P((3, 1)), P((2, 2)), P((2, 1, 1)), P((1, 1, 1, 1))]
    assert sum(1 for _ in enumerate_partitions(5)) == 7


def test_partition_count():
    assert partition_count(0) == 1
    assert partition_count(5) == 7
    assert partition_count(60) == 966467
    for n in range(31):
        assert partition_count(n) == sum(1 for _ in enumerate_partitions(n))


def test_hooks_examples():
    assert sorted(hooks(P((5,)))) == [1, 2, 3, 4, 5]
    assert sorted(hooks(P((2, 1)))) == [1, 1, 3]
    assert sorted(hooks(P((2, 2)))) == [1, 2, 2, 3]


@given(partitions_of(15))
def test_hook_invariants(lam):
    h = hooks(lam)
    assert len(h) == lam.size
    if lam:
        assert max(h) == lam[0] + len(lam) - 1


def _syt_count(lam):
    # peel off the largest entry from every corner
    lam = tuple(lam)
    if sum(lam) == 0:
        return 1
    total = 0
    for i, p in enumerate(lam):
        if p and (i + 1 == len(lam) or lam[i + 1] < p):
            nxt = list(lam)
            nxt[i] -= 1
            total += _syt_count(tuple(x for x in nxt if x))
    return total


def test_specht_examples():
    assert specht_dimension(P((6,))) == 1
    assert specht_dimension(P((2, 1))) == 2
    assert specht_dimension(P((3, 2))) == 5


@given(partitions_of(12))
def test_specht_matches_tableaux_count(lam):
    assert specht_dimension(lam) == _syt_count(lam)


@given(partitions_of(20))
def test_conjugation_symmetry(lam):
    assert specht_dimension(lam) == specht_dimension(lam.conjugate())
    assert lam.conjugate().conjugate() == lam


@pytest.mark.parametrize("n", range(13))
def test_sum_of_squares(n):
    assert sum(specht_dimension(lam) ** 2 for lam in enumerate_partitions(n)) == factorial(n)


def test_alpha():
    assert alpha(P((4,))) == 0
    assert alpha(P((1, 1, 1))) == 3
    assert alpha(P((2, 2))) == 2


def test_mn_examples():
    assert mn_character(P((4,)), CycleType(P((3,)), 4)) == 1
    assert mn_character(P((1, 1, 1, 1)), CycleType(P((2,)), 4)) == -1
    assert mn_character(P((2, 1)), CycleType(P((2,)), 3)) == 0
    with pytest.raises(ValueError):
        mn_character(P((2, 1)), CycleType(P((2,)), 4))


def _class_size(mu):
    n = sum(mu)
    size = factorial(n)
    for part, mult in Counter(mu).items():
        size //= part**mult * factorial(mult)
    return size


@pytest.mark.parametrize("n", range(1, 8))
def test_character_table_orthogonality(n):
    lams = list(enumerate_partitions(n))
    table = {(lam, mu): mn_character(lam, CycleType(mu, n)) for lam in lams for mu in lams}
    for a in lams:
        for b in lams:
            s = sum(_class_size(mu) * table[a, mu] * table[b, mu] for mu in lams)
            assert s == (factorial(n) if a == b else 0)


def _perm_cycle_type(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        out.append(length)
    return P(sorted(out, reverse=True))


@pytest.mark.parametrize("n", range(2, 7))
def test_permutation_module_character(n):
    # the permutation character on {1..n} is chi_(n) + chi_(n-1,1): it counts fixed points
    for perm in permutations(range(n)):
        ct = _perm_cycle_type(perm)
        fixed = sum(1 for i, p in enumerate(perm) if i == p)
        value = mn_character(P((n,)), CycleType(ct, n)) + mn_character(P((n - 1, 1)), CycleType(ct, n))
        assert value == fixed


@given(partitions_of(14))
def test_transposition_content_formula(lam):
    n = lam.size
    if n < 2:
        return
    contents = sum(j - i for i, row in enumerate(lam) for j in range(row))
    expected = Fraction(2 * contents, n * (n - 1)) * specht_dimension(lam)
    assert mn_character(lam, CycleType(P((2,)), n)) == expected


def test_lassalle_examples():
    assert lassalle_coefficient(P((5,)), P((1,))) == 5
    assert lassalle_coefficient(P((1, 1)), P((2,))) == -2
    assert lassalle_coefficient(P((2, 1)), P((2,))) == 0
    assert issubclass(LassalleIntegralityError, ArithmeticError)


def test_chiral_examples():
    assert chiral_count_closed_form(2) == 1
    assert chiral_count_closed_form(3) == 2
    # b(4) = 3: (3,1), (2,2) and (1,1,1,1) are chiral
    assert chiral_count_closed_form(4) == 3
    assert chiral_count_brute(2) == 1
    assert chiral_count_brute(3) == 2
    assert chiral_count_brute(6) == chiral_count_closed_form(6)


@pytest.mark.parametrize("n", range(2, 19))
def test_chiral_closed_form_vs_brute(n):
    assert chiral_count_closed_form(n) == chiral_count_brute(n)


def test_chiral_input_errors():
    with pytest.raises(ValueError):
        chiral_count_closed_form(1)
    with pytest.raises(ValueError):
        chiral_count_brute(41)


def test_valuation_statistic_examples():
    assert valuation_statistic(1, 2, 1) == (1, 1)
    assert valuation_statistic(4, 2, 1) == (4, 5)


@given(partitions_of(16), st.sampled_from([2, 3, 5]))
def test_v_specht_big_integer(lam, ell):
    assert v_specht(lam, ell) == v_int(ell, specht_dimension(lam))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 25), st.sampled_from([2, 3, 5]))
def test_quotient_counting_matches_enumeration(n, ell):
    assert valuation_distribution(n, ell, "quotient") == valuation_distribution(n, ell, "enumerate")


def test_log_threshold_trend():
    props = [Fraction(*log_threshold_statistic(n, 2, 1)) for n in (20, 40, 60, 80)]
    assert props == sorted(props, reverse=True)
    assert len(set(props)) == 4
