from math import factorial, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glnsw.partitions import Partition, enumerate_partitions, hooks
from glnsw.valuations import (
    v2_H_denominator,
    v2_prod_top_terms,
    v2_psi,
    v2_qpow_minus_one,
    v_factorial,
    v_falling,
    v_int,
)

odd_q = st.integers(1, 60).map(lambda k: 2 * k + 1)
primes = st.sampled_from([2, 3, 5, 7, 11])


def test_v_int_examples():
    assert v_int(2, 1) == 0
    assert v_int(2, 8) == 3
    assert v_int(3, -18) == 2
    with pytest.raises(ValueError):
        v_int(2, 0)


def test_v_factorial_examples():
    assert v_factorial(2, 0) == 0
    assert v_factorial(2, 10) == 8
    assert v_factorial(3, 9) == 4


def test_v_falling_examples():
    assert v_falling(2, 7, 0) == 0
    assert v_falling(2, 10, 3) == 4
    assert v_falling(2, 8, 1) == 3


def test_qpow_examples():
    assert v2_qpow_minus_one(3, 1) == 1
    assert v2_qpow_minus_one(3, 2) == 3
    assert v2_qpow_minus_one(7, 4) == 5
    # 3^6 - 1 = 728 = 8 * 91
    assert v2_qpow_minus_one(3, 6) == 3
    with pytest.raises(ValueError):
        v2_qpow_minus_one(4, 1)


def test_psi_examples():
    assert v2_psi(5, 0) == 0
    assert v2_psi(3, 2) == 4
    # 4 * 24 * 124
    assert v2_psi(5, 3) == 7


def test_h_denominator_examples():
    assert v2_H_denominator(Partition(), 3, 1) == 0
    assert v2_H_denominator(Partition((1,)), 3, 1) == 1
    assert v2_H_denominator(Partition((2,)), 3, 1) == 4


@given(primes, st.integers(0, 2000))
def test_legendre(ell, n):
    assert v_factorial(ell, n) == v_int(ell, factorial(n))


@given(primes, st.integers(0, 300), st.integers(0, 300))
def test_falling_matches_product(ell, n, k):
    k = min(k, n)
    value = prod(range(n - k + 1, n + 1))
    assert v_falling(ell, n, k) == v_int(ell, value)


@given(primes, st.integers(0, 200), st.integers(0, 200), st.integers(0, 200))
def test_falling_additive(ell, n, a, b):
    # (n)_{a+b} = (n)_a * (n-a)_b
    a = min(a, n)
    b = min(b, n - a)
    assert v_falling(ell, n, a + b) == v_falling(ell, n, a) + v_falling(ell, n - a, b)


@given(odd_q, st.integers(1, 64))
def test_lte_against_big_integers(q, m):
    assert v2_qpow_minus_one(q, m) == v_int(2, q**m - 1)


@given(odd_q, st.integers(0, 12))
def test_psi_against_big_integers(q, n):
    assert v2_psi(q, n) == v_int(2, prod(q**i - 1 for i in range(1, n + 1)))


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_h_denominator_against_big_integers(q):
    for n in range(1, 7):
        for lam in enumerate_partitions(n):
            for d in (1, 2):
                value = prod(q ** (d * h) - 1 for h in hooks(lam))
                assert v2_H_denominator(lam, q, d) == v_int(2, value)


def test_prod_top_terms():
    assert v2_prod_top_terms(3, 6, 1) == 3
    assert v2_prod_top_terms(3, 6, 0) == 0
    assert v2_prod_top_terms(5, 4, 2) == v_int(2, (5**4 - 1) * (5**3 - 1))
