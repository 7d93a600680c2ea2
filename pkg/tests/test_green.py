from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glnsw.fqpoly import BudgetExceeded, FqPoly, irreducibles, linear
from glnsw.green import (
    GreenLabel,
    character_divisibility_bound,
    class_number,
    degree_split,
    degree_valuation,
    divisibility_proportion,
    dual_label,
    enumerate_labels,
    enumerate_self_dual,
    exact_degree,
    gl_order,
    gln_stats_row,
    is_self_dual,
    label_histogram,
    self_dual_count,
    self_dual_histogram,
    shah_spallone_bound_check,
    v2_degree,
)
from glnsw.partitions import Partition
from glnsw.valuations import v_int

P = Partition
SMALL = [(3, 1), (3, 2), (5, 2), (7, 2), (9, 2), (3, 3), (5, 3), (3, 4)]


def label(q, mapping):
    return GreenLabel.from_mapping(q, mapping)


def test_label_validation():
    with pytest.raises(ValueError):
        GreenLabel(3, 2, ((linear(3, 1), P((1,))),))
    with pytest.raises(ValueError):
        label(3, {FqPoly(3, (0, 1)): P((1,))})


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_degree_one_labels(q):
    assert sum(1 for _ in enumerate_labels(q, 1)) == q - 1


@pytest.mark.parametrize("q,n", SMALL)
def test_label_count_is_class_number(q, n):
    labels = list(enumerate_labels(q, n))
    assert len(labels) == class_number(q, n) == len(set(labels))


def test_gl2_counts():
    assert sum(1 for _ in enumerate_labels(3, 2)) == 8
    assert sum(1 for _ in enumerate_labels(5, 2)) == 24


@pytest.mark.parametrize("q,n", [(3, 2), (5, 2), (7, 2), (3, 3), (5, 3), (3, 4)])
def test_sum_of_squares(q, n):
    assert sum(exact_degree(mu) ** 2 for mu in enumerate_labels(q, n)) == gl_order(q, n)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11])
def test_gl2_degree_multiset(q):
    degrees = Counter(exact_degree(mu) for mu in enumerate_labels(q, 2))
    expected = Counter({1: q - 1, q: q - 1, q + 1: (q - 1) * (q - 2) // 2})
    expected[q - 1] += (q * q - q) // 2
    assert degrees == expected


def test_degree_examples():
    q = 3
    x1 = linear(q, 1)
    for n in (1, 2, 3):
        d = degree_valuation(label(q, {x1: P((n,))}))
        assert (d.exact_degree, d.v2) == (1, 0)
    st_ = degree_valuation(label(q, {x1: P((1, 1))}))
    assert (st_.exact_degree, st_.v2) == (q, 0)
    quad = FqPoly(3, (1, 0, 1))
    cusp = degree_valuation(label(q, {quad: P((1,))}))
    assert (cusp.exact_degree, cusp.v2) == (2, 1)


@pytest.mark.parametrize("q,n", [(3, 2), (3, 3), (5, 2), (3, 4), (5, 3)])
def test_degree_split_product(q, n):
    for mu in enumerate_labels(q, n):
        a, b = degree_split(mu)
        assert a * b == exact_degree(mu)


def test_degree_split_examples():
    q = 5
    x1 = linear(q, 1)
    assert degree_split(label(q, {x1: P((2,))})) == (1, 1)
    assert degree_split(label(q, {x1: P((1, 1))})) == (1, q)
    quad = next(f for f in irreducibles(q, 2))
    assert degree_split(label(q, {quad: P((1,))})) == (q - 1, 1)


@pytest.mark.parametrize("q,n", [(3, 2), (5, 2), (3, 3), (5, 3), (3, 4), (3, 5)])
def test_valuation_route_matches_exact(q, n):
    for mu in enumerate_labels(q, n):
        assert v2_degree(mu) == v_int(2, exact_degree(mu))


def test_dual_examples():
    F5 = 5
    mu = label(F5, {linear(F5, 2): P((1,))})
    assert dual_label(mu) == label(F5, {linear(F5, 3): P((1,))})
    assert is_self_dual(label(F5, {linear(F5, 1): P((2, 1))}))
    assert is_self_dual(label(F5, {linear(F5, 2): P((1,)), linear(F5, 3): P((1,))}))
    assert not is_self_dual(label(F5, {linear(F5, 2): P((1,)), linear(F5, 4): P((1,))}))


@pytest.mark.parametrize("q,n", [(3, 3), (5, 2), (5, 3)])
def test_dual_is_an_involution(q, n):
    for mu in enumerate_labels(q, n):
        assert dual_label(dual_label(mu)) == mu
        assert exact_degree(dual_label(mu)) == exact_degree(mu)


@pytest.mark.parametrize("q,n", SMALL + [(7, 3), (3, 5)])
def test_self_dual_enumeration_matches_filter(q, n):
    fibered = list(enumerate_self_dual(q, n))
    filtered = [mu for mu in enumerate_labels(q, n) if is_self_dual(mu)]
    assert len(fibered) == len(set(fibered))
    assert set(fibered) == set(filtered)
    assert self_dual_count(q, n) == len(filtered)


def test_self_dual_examples():
    assert sum(1 for _ in enumerate_self_dual(5, 2)) == 8
    assert sum(1 for _ in enumerate_self_dual(3, 2)) == 6
    for q in (3, 5, 7, 9):
        assert sum(1 for _ in enumerate_self_dual(q, 1)) == 2
        assert sum(1 for _ in enumerate_self_dual(q, 2)) == q + 3


@pytest.mark.parametrize("q,n", SMALL + [(3, 5), (5, 4)])
def test_histograms_match_enumeration(q, n):
    labels = list(enumerate_labels(q, n))
    assert label_histogram(q, n) == Counter(v2_degree(mu) for mu in labels)
    assert self_dual_histogram(q, n) == Counter(v2_degree(mu) for mu in labels if is_self_dual(mu))


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([3, 5, 7, 9, 11, 13, 25, 27]), st.integers(1, 12))
def test_histogram_total_is_class_number(q, n):
    assert sum(label_histogram(q, n).values()) == class_number(q, n)


def test_divisibility_proportion():
    for q, n in [(3, 4), (5, 3)]:
        assert divisibility_proportion(q, n, 0) == 0
    p6 = divisibility_proportion(3, 6, 1)
    assert 0 <= p6 <= 1
    props = [divisibility_proportion(3, n, 1) for n in (4, 6, 8)]
    assert props[0] >= props[1] >= props[2]


def test_divisibility_bound():
    total = self_dual_count(3, 6)
    assert character_divisibility_bound(3, 6, 1, 0) == (total, total)
    guaranteed, t = character_divisibility_bound(3, 6, 1, 1)
    assert t == total
    # test is v2(d) >= 1 + v2(3^6 - 1) = 4
    assert guaranteed == sum(c for v, c in self_dual_histogram(3, 6).items() if v >= 4)


def test_stats_row():
    row = gln_stats_row(3, 2)
    assert row["X_n"] == 8 and row["Y_n"] == 6


def test_shah_spallone_two_adic():
    for q, n in [(3, 4), (5, 3), (3, 5)]:
        assert all(shah_spallone_bound_check(mu, 2) for mu in enumerate_labels(q, n))


def test_shah_spallone_when_ell_divides_q_minus_one():
    for q, n, ell in [(7, 3, 3), (7, 4, 3), (11, 3, 5)]:
        assert all(shah_spallone_bound_check(mu, ell) for mu in enumerate_labels(q, n))


def test_shah_spallone_counterexample_ell_three():
    # 3 does not divide q - 1: the inequality fails here (see the ledger)
    q = 3
    mu = label(q, {linear(q, 2): P((1,)), linear(q, 1): P((2,))})
    assert exact_degree(mu) == 13
    assert not shah_spallone_bound_check(mu, 3)


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        list(enumerate_labels(3, 6, budget=100))
