"""Finite fields F_q (q odd) and monic polynomials over them.

An element of F_q with q = p^e is stored as an int 0 <= a < q whose base-p
digits are its coordinates over F_p, lowest digit = constant term.  For e > 1
the field is F_p[t]/(m) with m the least irreducible of degree e in the order
used throughout this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from sympy import factorint


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed its configured size budget."""


def prime_power(q: int) -> tuple[int, int]:
    """(p, e) with q = p^e, or ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, e),) = f.items()
    return p, e


def require_odd_prime_power(q: int) -> tuple[int, int]:
    p, e = prime_power(q)
    if p == 2:
        raise ValueError(f"q must be odd, got {q}")
    return p, e


def mobius(n: int) -> int:
    f = factorint(n)
    if any(v > 1 for v in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# --- prime-field polynomial helpers (used only to build extension fields) ---------


def _poly_mod_p(a: list[int], m: list[int], p: int) -> list[int]:
    # a, m low->high, m monic
    a = a[:]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [x % p for x in a[:dm]] + [0] * max(0, dm - len(a))


def _is_irreducible_mod_p(m: list[int], p: int) -> bool:
    d = len(m) - 1
    if d == 1:
        return True
    # no roots and no factors of degree <= d/2, via brute trial division
    for k in range(1, d // 2 + 1):
        for tail in product(range(p), repeat=k):
            g = list(tail) + [1]
            if not any(_poly_mod_p(m, g, p)):
                return False
    return True


def least_irreducible_mod_p(p: int, e: int) -> tuple[int, ...]:
    """Least monic irreducible of degree e over F_p (key: a_{e-1}, ..., a_0)."""
    for high_first in product(range(p), repeat=e):
        coeffs = list(reversed(high_first)) + [1]
        if coeffs[0] == 0 and e > 1:
            continue
        if _is_irreducible_mod_p(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("unreachable: irreducibles exist in every degree")


class FiniteField:
    """F_q for odd q, with log/exp tables against the least primitive element."""

    def __init__(self, q: int):
        self.p, self.e = require_odd_prime_power(q)
        self.q = q
        p, e = self.p, self.e
        if e == 1:
            self.modulus = (0, 1)
        else:
            self.modulus = least_irreducible_mod_p(p, e)
        self._digits = [self._to_digits(a) for a in range(q)]
        # multiplication via a generator found by brute force on the prime-field model
        self.generator = None
        for g in range(2, q):
            exp_table = self._powers(g)
            if exp_table is not None:
                self.generator = g
                self.exp = exp_table
                break
        if self.generator is None:
            raise AssertionError(f"no primitive element found for q={q}")
        self.log = [0] * q
        for i, x in enumerate(self.exp):
            self.log[x] = i

    def _to_digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _from_digits(self, ds: Sequence[int]) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + d
        return a

    def _slow_mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        da, db = self._digits[a], self._digits[b]
        prod_ = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod_[i + j] += x * y
        return self._from_digits(_poly_mod_p(prod_, list(self.modulus), self.p))

    def _powers(self, g: int):
        seq = [1]
        x = g
        while x != 1:
            seq.append(x)
            x = self._slow_mul(x, g)
            if len(seq) > self.q - 1:
                return None
        return seq if len(seq) == self.q - 1 else None

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        da, db = self._digits[a], self._digits[b]
        return self._from_digits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        return self._from_digits([-x % self.p for x in self._digits[a]])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_q")
        return self.exp[-self.log[a] % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k else 1
        return self.exp[self.log[a] * k % (self.q - 1)]

    def is_square(self, a: int) -> bool:
        return a != 0 and self.log[a] % 2 == 0

    @property
    def minus_one(self) -> int:
        return self.exp[(self.q - 1) // 2]

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        return f"FiniteField({self.q})"


@lru_cache(maxsize=None)
def field(q: int) -> FiniteField:
    return FiniteField(q)


# --- polynomials over F_q ------------------------------------------------------


@dataclass(frozen=True)
class FqPoly:
    """Monic polynomial over F_q, coefficients low -> high (last entry is 1)."""

    q: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 2 or self.coeffs[-1] != 1:
            raise ValueError("FqPoly must be monic of degree >= 1")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant(self) -> int:
        return self.coeffs[0]

    def sort_key(self) -> tuple:
        return (self.degree, tuple(reversed(self.coeffs[:-1])))

    def __lt__(self, other: "FqPoly") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mon)
            else:
                terms.append(f"{c}*{mon}")
        return " + ".join(terms)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(F: FiniteField, a: list[int], m: list[int]) -> list[int]:
    # m monic
    a = _trim(a[:])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for j in range(dm + 1):
            a[shift + j] = F.sub(a[shift + j], F.mul(c, m[j]))
        _trim(a)
    return a


def _pmulmod(F: FiniteField, a: list[int], b: list[int], m: list[int]) -> list[int]:
    out = [0] * max(0, len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _pmod(F, out, m)


def _ppowmod(F: FiniteField, a: list[int], k: int, m: list[int]) -> list[int]:
    result = [1]
    base = _pmod(F, a, m)
    while k:
        if k & 1:
            result = _pmulmod(F, result, base, m)
        base = _pmulmod(F, base, base, m)
        k >>= 1
    return result


def _pgcd(F: FiniteField, a: list[int], b: list[int]) -> list[int]:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        inv = F.inv(b[-1])
        b = [F.mul(c, inv) for c in b]
        a, b = b, _pmod(F, a, b)
    return a


def is_irreducible(f: FqPoly) -> bool:
    """Distinct-degree test: gcd(x^(q^i) - x, f) = 1 for 1 <= i <= deg f / 2."""
    F = field(f.q)
    m = list(f.coeffs)
    d = f.degree
    if d == 1:
        return True
    if f.constant == 0:
        return False
    xp = [0, 1]
    for _ in range(d // 2):
        xp = _ppowmod(F, xp, f.q, m)
        diff = xp[:] + [0] * max(0, 2 - len(xp))
        diff[1] = F.sub(diff[1], 1)
        g = _pgcd(F, m, _trim(diff))
        if len(g) > 1:
            return False
    return True


def irreducible_count(q: int, d: int) -> int:
    """Monic irreducibles of degree d over F_q, excluding x."""
    if d < 1:
        raise ValueError("d must be positive")
    total = sum(mobius(e) * q ** (d // e) for e in divisors(d)) // d
    return total - 1 if d == 1 else total


DEFAULT_POLY_BUDGET = 200_000


@lru_cache(maxsize=None)
def _irreducibles(q: int, d: int) -> tuple[FqPoly, ...]:
    out = []
    for high_first in product(range(q), repeat=d):
        coeffs = tuple(reversed(high_first)) + (1,)
        if coeffs[0] == 0:
            continue
        f = FqPoly(q, coeffs)
        if is_irreducible(f):
            out.append(f)
    return tuple(out)


def irreducibles(q: int, d: int, budget: int = DEFAULT_POLY_BUDGET) -> Iterator[FqPoly]:
    """All monic irreducibles of degree d over F_q except x, in sort-key order."""
    require_odd_prime_power(q)
    if d < 1:
        raise ValueError("d must be positive")
    if q**d > budget:
        raise BudgetExceeded(f"q^d = {q**d} candidate polynomials exceeds budget {budget}")
    return iter(_irreducibles(q, d))


def reciprocal(f: FqPoly) -> FqPoly:
    """Monic normalization of T^deg f * f(1/T)."""
    if f.constant == 0:
        raise ValueError("reciprocal needs f(0) != 0")
    F = field(f.q)
    inv = F.inv(f.constant)
    return FqPoly(f.q, tuple(F.mul(c, inv) for c in reversed(f.coeffs)))


def linear(q: int, root: int) -> FqPoly:
    """The polynomial x - root."""
    return FqPoly(q, (field(q).neg(root), 1))


@dataclass(frozen=True)
class PolyOrbit:
    rep: FqPoly
    size: int

    @property
    def members(self) -> tuple[FqPoly, ...]:
        return (self.rep,) if self.size == 1 else (self.rep, reciprocal(self.rep))

    @property
    def degree(self) -> int:
        return self.rep.degree


def orbits(q: int, d: int, budget: int = DEFAULT_POLY_BUDGET) -> Iterator[PolyOrbit]:
    """Group irreducibles(q, d) into orbits {f, f*}, keyed by the smaller member."""
    seen = set()
    for f in irreducibles(q, d, budget):
        if f in seen:
            continue
        g = reciprocal(f)
        seen.update((f, g))
        yield PolyOrbit(min(f, g), 1 if f == g else 2)


def self_reciprocal_count(q: int, d: int) -> int:
    """Number of self-reciprocal monic irreducibles of degree d over F_q, q odd."""
    require_odd_prime_power(q)
    if d == 1:
        return 2
    if d % 2:
        return 0
    m = d // 2
    total = sum(mobius(k) * (q ** (m // k) - 1) for k in divisors(m) if k % 2)
    return total // (2 * m)


def reciprocal_pair_count(q: int, d: int) -> int:
    """Number of orbits {f, f*} with f != f* among degree-d irreducibles != x."""
    return (irreducible_count(q, d) - self_reciprocal_count(q, d)) // 2
