from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glnsw.fqpoly import (
    BudgetExceeded,
    FqPoly,
    field,
    irreducible_count,
    irreducibles,
    is_irreducible,
    linear,
    orbits,
    prime_power,
    reciprocal,
    reciprocal_pair_count,
    require_odd_prime_power,
    self_reciprocal_count,
)

SMALL_Q = [3, 5, 7, 9, 25, 27]


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    with pytest.raises(ValueError):
        require_odd_prime_power(8)
    with pytest.raises(ValueError):
        require_odd_prime_power(15)


@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms(q):
    F = field(q)
    elems = list(F.elements())
    assert len(elems) == q
    g = F.generator
    assert len({F.pow(g, k) for k in range(q - 1)}) == q - 1
    for a in elems[1:]:
        assert F.mul(a, F.inv(a)) == 1
    a, b, c = elems[1], elems[-1], elems[q // 2]
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(1, F.minus_one) == 0


def test_irreducible_examples():
    assert sorted(irreducibles(3, 1)) == sorted([linear(3, 1), linear(3, 2)])
    assert sum(1 for _ in irreducibles(3, 2)) == 3
    assert sum(1 for _ in irreducibles(5, 2)) == 10
    assert irreducible_count(7, 1) == 6
    assert irreducible_count(3, 2) == 3
    assert irreducible_count(3, 3) == 8


def _brute_irreducible(f: FqPoly) -> bool:
    # no monic factor of degree <= deg/2, by trial multiplication
    F = field(f.q)
    d = f.degree
    target = f.coeffs
    for a in range(1, d // 2 + 1):
        b = d - a
        for ca in product(range(f.q), repeat=a):
            for cb in product(range(f.q), repeat=b):
                g, h = list(ca) + [1], list(cb) + [1]
                out = [0] * (d + 1)
                for i, x in enumerate(g):
                    for j, y in enumerate(h):
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
                if tuple(out) == target:
                    return False
    return True


@pytest.mark.parametrize("q,d", [(3, 2), (3, 3), (5, 2), (9, 2), (3, 4)])
def test_irreducibility_against_trial_factoring(q, d):
    for coeffs in product(range(q), repeat=d):
        if coeffs[0] == 0:
            continue
        f = FqPoly(q, tuple(coeffs) + (1,))
        assert is_irreducible(f) == _brute_irreducible(f)


@pytest.mark.parametrize("q", [3, 5, 7, 9])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_counts_and_orbits(q, d):
    polys = list(irreducibles(q, d))
    assert len(polys) == irreducible_count(q, d)
    assert polys == sorted(polys)
    obs = list(orbits(q, d))
    fixed = [o for o in obs if o.size == 1]
    assert len(fixed) == self_reciprocal_count(q, d)
    assert len(obs) - len(fixed) == reciprocal_pair_count(q, d)
    assert sum(o.size for o in obs) == len(polys)
    if d == 2:
        assert len(fixed) == (q - 1) // 2


def test_reciprocal_examples():
    assert reciprocal(linear(5, 1)) == linear(5, 1)
    F = field(5)
    for a in range(1, 5):
        assert reciprocal(linear(5, a)) == linear(5, F.inv(a))
    for b in range(5):
        f = FqPoly(5, (1, F.neg(b), 1))
        assert reciprocal(f) == f


def test_orbit_examples():
    obs = list(orbits(5, 1))
    assert sorted(o.size for o in obs) == [1, 1, 2]
    obs = list(orbits(3, 2))
    assert [o.rep for o in obs if o.size == 1] == [FqPoly(3, (1, 0, 1))]
    assert sum(1 for o in obs if o.size == 2) == 1


@given(st.sampled_from([3, 5, 7, 9, 11, 13]), st.integers(1, 3), st.data())
def test_reciprocal_is_an_involution_on_irreducibles(q, d, data):
    f = data.draw(st.sampled_from(list(irreducibles(q, d))))
    g = reciprocal(f)
    assert is_irreducible(g)
    assert reciprocal(g) == f


def test_budget():
    with pytest.raises(BudgetExceeded):
        list(irreducibles(13, 5, budget=1000))
