"""Green's labels for Irr(GL_n(F_q)): enumeration, duality, degrees, 2-adic statistics.

A label assigns a partition to finitely many monic irreducibles f != x over
F_q, with sum of deg(f)*|mu(f)| equal to n.  Degrees use

    d_mu = psi_n(q) * prod_f H(mu(f), q^deg f),
    H(lam, x) = x^alpha(lam) / prod_hooks (x^h - 1),

and 2-adic valuations of d_mu go through valuations.v2_* so that no large
integer is ever factored.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from typing import Iterator, Optional

from .fqpoly import (
    BudgetExceeded,
    FqPoly,
    irreducible_count,
    irreducibles,
    orbits,
    reciprocal,
    reciprocal_pair_count,
    require_odd_prime_power,
    self_reciprocal_count,
)
from .partitions import (
    Partition,
    alpha,
    enumerate_partitions,
    hooks,
    v_specht,
)
from .valuations import (
    v2_H_denominator,
    v2_prod_top_terms,
    v2_psi,
    v_factorial,
    v_falling,
    v_int,
)

EXACT_MAX_N = 6
DEFAULT_LABEL_BUDGET = 2_000_000


@dataclass(frozen=True)
class GreenLabel:
    """An element of X_n: parts are (f, mu(f)) pairs sorted by f."""

    q: int
    n: int
    parts: tuple[tuple[FqPoly, Partition], ...]

    def __post_init__(self):
        total = 0
        for f, lam in self.parts:
            if f.q != self.q or f.constant == 0:
                raise ValueError(f"bad key {f} for a label over F_{self.q}")
            if not lam:
                raise ValueError("labels carry only nonempty partitions")
            total += f.degree * sum(lam)
        if total != self.n:
            raise ValueError(f"weighted size {total} != n = {self.n}")

    @classmethod
    def from_mapping(cls, q: int, mapping: dict) -> "GreenLabel":
        parts = tuple(
            sorted(
                ((f, Partition(lam)) for f, lam in mapping.items() if lam),
                key=lambda fp: fp[0].sort_key(),
            )
        )
        return cls(q, sum(f.degree * sum(lam) for f, lam in parts), parts)

    def as_dict(self) -> dict:
        return dict(self.parts)

    def __getitem__(self, f: FqPoly) -> Partition:
        for g, lam in self.parts:
            if g == f:
                return lam
        return Partition()

    def __str__(self) -> str:
        return "{" + ", ".join(f"{f} -> {lam}" for f, lam in self.parts) + "}"


@dataclass(frozen=True)
class TypeFunction:
    """Sizes F(f) = |mu(f)| of a label, with a flag for the self-dual locus."""

    q: int
    n: int
    sizes: tuple[tuple[FqPoly, int], ...]
    self_dual: bool = False

    def __post_init__(self):
        if sum(f.degree * s for f, s in self.sizes) != self.n:
            raise ValueError("type function does not have weighted size n")
        if self.self_dual:
            d = dict(self.sizes)
            if any(d.get(reciprocal(f), 0) != s for f, s in self.sizes):
                raise ValueError("self-dual type function must satisfy F(f*) = F(f)")

    def fiber(self) -> Iterator[GreenLabel]:
        """All labels with these sizes (self-dual ones only when flagged)."""
        if self.self_dual:
            reps = [f for f, _ in self.sizes if not reciprocal(f) < f]
        else:
            reps = [f for f, _ in self.sizes]
        sizes = dict(self.sizes)

        def rec(i, acc):
            if i == len(reps):
                yield GreenLabel.from_mapping(self.q, acc)
                return
            f = reps[i]
            for lam in enumerate_partitions(sizes[f]):
                nxt = dict(acc)
                nxt[f] = lam
                if self.self_dual:
                    nxt[reciprocal(f)] = lam
                yield from rec(i + 1, nxt)

        yield from rec(0, {})


# --- counting ------------------------------------------------------------------


def class_number(q: int, n: int) -> int:
    """Number of conjugacy classes of GL_n(F_q): coefficient of x^n in prod (1-x^k)/(1-q x^k)."""
    series = [1] + [0] * n
    for k in range(1, n + 1):
        # multiply by (1 - x^k) / (1 - q x^k) = 1 + sum_{j>=1} (q^j - q^(j-1)) x^(jk)
        new = series[:]
        for i in range(n + 1):
            if series[i]:
                j = 1
                while i + j * k <= n:
                    new[i + j * k] += series[i] * (q**j - q ** (j - 1))
                    j += 1
        series = new
    return series[n]


def gl_order(q: int, n: int) -> int:
    return prod(q**n - q**i for i in range(n))


def _check_budget(count: int, budget: int, what: str) -> None:
    if count > budget:
        raise BudgetExceeded(f"{what} has {count} elements, budget is {budget}")


def _polys_up_to(q: int, n: int) -> list[FqPoly]:
    out = []
    for d in range(1, n + 1):
        out.extend(irreducibles(q, d))
    return out


def enumerate_labels(q: int, n: int, budget: int = DEFAULT_LABEL_BUDGET) -> Iterator[GreenLabel]:
    """Every element of X_n once: polynomials by degree then coefficients, partitions
    in decreasing lexicographic order."""
    require_odd_prime_power(q)
    if n < 1:
        raise ValueError("n must be positive")
    _check_budget(class_number(q, n), budget, f"X_{n} over F_{q}")
    polys = _polys_up_to(q, n)

    def rec(i, remaining, acc):
        if remaining == 0:
            yield GreenLabel(q, n, tuple(acc))
            return
        for j in range(i, len(polys)):
            f = polys[j]
            if f.degree > remaining:
                break
            for s in range(1, remaining // f.degree + 1):
                for lam in enumerate_partitions(s):
                    acc.append((f, lam))
                    yield from rec(j + 1, remaining - f.degree * s, acc)
                    acc.pop()

    yield from rec(0, n, [])


def dual_label(mu: GreenLabel) -> GreenLabel:
    """mu'(f) = mu(f*)."""
    return GreenLabel.from_mapping(mu.q, {reciprocal(f): lam for f, lam in mu.parts})


def is_self_dual(mu: GreenLabel) -> bool:
    return dual_label(mu) == mu


def self_dual_count(q: int, n: int) -> int:
    return sum(self_dual_histogram(q, n).values())


def enumerate_type_functions(q: int, n: int, self_dual: bool = True) -> Iterator[TypeFunction]:
    """Type functions of weighted size n, orbit by orbit in polynomial order."""
    require_odd_prime_power(q)
    if self_dual:
        units = []
        for d in range(1, n + 1):
            for orb in orbits(q, d):
                units.append((orb.members, orb.size * d))
    else:
        units = [((f,), f.degree) for f in _polys_up_to(q, n)]

    def rec(i, remaining, acc):
        if remaining == 0:
            sizes = tuple(sorted(acc, key=lambda fs: fs[0].sort_key()))
            yield TypeFunction(q, n, sizes, self_dual)
            return
        for j in range(i, len(units)):
            members, weight = units[j]
            if weight > remaining:
                continue
            for s in range(1, remaining // weight + 1):
                for f in members:
                    acc.append((f, s))
                yield from rec(j + 1, remaining - weight * s, acc)
                del acc[len(acc) - len(members):]

    yield from rec(0, n, [])


def enumerate_self_dual(q: int, n: int, budget: int = DEFAULT_LABEL_BUDGET) -> Iterator[GreenLabel]:
    """Every element of Y_n once, through the fibration over self-dual type functions."""
    require_odd_prime_power(q)
    if n < 1:
        raise ValueError("n must be positive")
    _check_budget(self_dual_count(q, n), budget, f"Y_{n} over F_{q}")
    for F in enumerate_type_functions(q, n, self_dual=True):
        yield from F.fiber()


# --- degrees --------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeValuation:
    v2: int
    exact_degree: Optional[int] = dc_field(default=None)


def psi(n: int, x: int) -> int:
    return prod(x**i - 1 for i in range(1, n + 1))


def exact_degree(mu: GreenLabel) -> int:
    q, n = mu.q, mu.n
    value = Fraction(psi(n, q))
    for f, lam in mu.parts:
        x = q**f.degree
        value *= Fraction(x ** alpha(lam), prod(x**h - 1 for h in hooks(lam)))
    if value.denominator != 1 or value <= 0:
        raise ArithmeticError(f"degree of {mu} is not a positive integer: {value}")
    return value.numerator


def v2_degree(mu: GreenLabel) -> int:
    return v2_psi(mu.q, mu.n) - sum(v2_H_denominator(lam, mu.q, f.degree) for f, lam in mu.parts)


def degree_valuation(mu: GreenLabel) -> DegreeValuation:
    v2 = v2_degree(mu)
    if mu.n > EXACT_MAX_N:
        return DegreeValuation(v2)
    d = exact_degree(mu)
    if v_int(2, d) != v2:
        raise ArithmeticError(f"valuation route gives {v2}, exact degree {d} for {mu}")
    return DegreeValuation(v2, d)


def v_degree(mu: GreenLabel, ell: int) -> int:
    """v_ell(d_mu); the 2-adic case avoids big integers, other primes use the exact degree."""
    if ell == 2:
        return v2_degree(mu)
    return v_int(ell, exact_degree(mu))


def unipotent_degree(lam: Partition, x: int) -> int:
    """d_lam(x) = x^alpha(lam) psi_|lam|(x) / prod_hooks (x^h - 1)."""
    num = x ** alpha(lam) * psi(sum(lam), x)
    den = prod(x**h - 1 for h in hooks(lam))
    if num % den:
        raise ArithmeticError("unipotent degree is not an integer")
    return num // den


def degree_split(mu: GreenLabel) -> tuple[int, int]:
    """(a_mu, b_mu) with d_mu = a_mu * b_mu."""
    if mu.n > EXACT_MAX_N:
        raise ValueError(f"degree_split is limited to n <= {EXACT_MAX_N}")
    q = mu.q
    den = prod(psi(sum(lam), q**f.degree) for f, lam in mu.parts)
    num = psi(mu.n, q)
    if num % den:
        raise ArithmeticError("a_mu is not an integer")
    b = prod(unipotent_degree(lam, q**f.degree) for f, lam in mu.parts)
    return num // den, b


def shah_spallone_rhs(mu: GreenLabel, ell: int) -> int:
    """v_ell(n! / prod |mu(f)|!) + sum v_ell(f_mu(f))."""
    sizes = [sum(lam) for _, lam in mu.parts]
    multinomial = v_factorial(ell, mu.n) - sum(v_factorial(ell, s) for s in sizes)
    return multinomial + sum(v_specht(lam, ell) for _, lam in mu.parts)


def shah_spallone_bound_check(mu: GreenLabel, ell: int) -> bool:
    return v_degree(mu, ell) >= shah_spallone_rhs(mu, ell)


# --- generating-function statistics ----------------------------------------------
#
# v2(d_mu) = v2_psi(q, n) - S(mu), where S(mu) is a sum of per-polynomial terms
# depending only on (deg f, mu(f)).  Polynomials of the same degree (and, on the
# self-dual side, the same orbit shape) are interchangeable, so the histogram of S
# over X_n or Y_n is a coefficient of a product of binomial powers.


def _per_poly_series(q: int, d: int, n: int, mult: int) -> list[Counter]:
    # sum over nonempty lam of x^(mult*d*|lam|) t^(mult*g(lam))
    series = [Counter() for _ in range(n + 1)]
    for s in range(1, n // (mult * d) + 1):
        for lam in enumerate_partitions(s):
            series[mult * d * s][mult * v2_H_denominator(lam, q, d)] += 1
    return series


def _mul(a: list[Counter], b: list[Counter], n: int) -> list[Counter]:
    out = [Counter() for _ in range(n + 1)]
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j in range(n + 1 - i):
            cb = b[j]
            if not cb:
                continue
            target = out[i + j]
            for ta, xa in ca.items():
                for tb, xb in cb.items():
                    target[ta + tb] += xa * xb
    return out


def _binomial_power(P: list[Counter], count: int, n: int) -> list[Counter]:
    # (1 + P)^count truncated at x^n; P has no constant term
    result = [Counter({0: 1})] + [Counter() for _ in range(n)]
    power = [Counter({0: 1})] + [Counter() for _ in range(n)]
    low = next((i for i, c in enumerate(P) if c), None)
    if low is None or count == 0:
        return result
    for j in range(1, min(count, n // low) + 1):
        power = _mul(power, P, n)
        c = comb(count, j)
        for i in range(n + 1):
            for t, x in power[i].items():
                result[i][t] += c * x
    return result


@lru_cache(maxsize=None)
def _s_histogram(q: int, n: int, self_dual: bool) -> tuple[tuple[int, int], ...]:
    total = [Counter({0: 1})] + [Counter() for _ in range(n)]
    for d in range(1, n + 1):
        if self_dual:
            factors = [
                (self_reciprocal_count(q, d), 1),
                (reciprocal_pair_count(q, d), 2),
            ]
        else:
            factors = [(irreducible_count(q, d), 1)]
        for count, mult in factors:
            if count and mult * d <= n:
                P = _per_poly_series(q, d, n, mult)
                total = _mul(total, _binomial_power(P, count, n), n)
    return tuple(sorted(total[n].items()))


def label_histogram(q: int, n: int) -> Counter:
    """{v2(d_mu): count} over X_n."""
    require_odd_prime_power(q)
    base = v2_psi(q, n)
    return Counter({base - s: c for s, c in _s_histogram(q, n, False)})


def self_dual_histogram(q: int, n: int) -> Counter:
    """{v2(d_mu): count} over Y_n."""
    require_odd_prime_power(q)
    base = v2_psi(q, n)
    return Counter({base - s: c for s, c in _s_histogram(q, n, True)})


def divisibility_proportion(q: int, n: int, k: int) -> Fraction:
    """Share of mu in Y_n with v2(d_mu) < v2((n)_k)."""
    threshold = v_falling(2, n, k)
    hist = self_dual_histogram(q, n)
    total = sum(hist.values())
    return Fraction(sum(c for v, c in hist.items() if v < threshold), total)


def character_divisibility_bound(q: int, n: int, n0: int, r: int) -> tuple[int, int]:
    """(#{mu in Y_n meeting the valuation test for 2^r | chi_mu(g), g in GL_n0}, |Y_n|).

    The test is v2(d_mu) >= r + v2(prod_{i<n0} (q^(n-i) - 1)); it is sufficient,
    not necessary.  r <= 0 gives the whole of Y_n since 2^r | anything then.
    """
    hist = self_dual_histogram(q, n)
    total = sum(hist.values())
    if r <= 0:
        return total, total
    threshold = r + v2_prod_top_terms(q, n, n0)
    return sum(c for v, c in hist.items() if v >= threshold), total


def gln_stats_row(q: int, n: int, k: int = 1, n0: int = 1, r: int = 1) -> dict:
    """One CSV row of X_n / Y_n statistics."""
    hx, hy = label_histogram(q, n), self_dual_histogram(q, n)
    guaranteed, total = character_divisibility_bound(q, n, n0, r)
    prop = divisibility_proportion(q, n, k)
    return {
        "q": q,
        "n": n,
        "X_n": sum(hx.values()),
        "class_number": class_number(q, n),
        "Y_n": total,
        "v2_hist_X": " ".join(f"{v}:{c}" for v, c in sorted(hx.items())),
        "v2_hist_Y": " ".join(f"{v}:{c}" for v, c in sorted(hy.items())),
        "k": k,
        "divisibility_proportion": f"{prop.numerator}/{prop.denominator}",
        "divisibility_proportion_float": f"{float(prop):.6f}",
        "n0": n0,
        "r": r,
        "bound_guaranteed": guaranteed,
    }
