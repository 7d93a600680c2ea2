"""Exact elements of Z[zeta_N] as sparse {exponent: coefficient} maps.

Equality, zero tests and rationality reduce modulo the N-th cyclotomic
polynomial, so different spellings of the same algebraic integer compare equal.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (low -> high) of Phi_n, by dividing x^n - 1 by Phi_d for d | n, d < n."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_div(a: list[int], b: list[int]) -> list[int]:
    # b monic
    a = a[:]
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1]
        out[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    if any(a[: len(b) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


class Cyc:
    """An element sum c_e zeta_N^e of Z[zeta_N] (or Q[zeta_N] with Fraction coefficients)."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms=None):
        self.N = N
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                e %= N
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def root(cls, N: int, e: int, coeff=1) -> "Cyc":
        return cls(N, {e: coeff})

    @classmethod
    def const(cls, N: int, c) -> "Cyc":
        return cls(N, {0: c})

    def _coerce(self, other) -> "Cyc":
        if isinstance(other, Cyc):
            if other.N != self.N:
                raise ValueError("mixing different cyclotomic orders")
            return other
        return Cyc.const(self.N, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return Cyc(self.N, t)

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.N, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Cyc):
            return Cyc(self.N, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1 + e2) % self.N
                t[e] = t.get(e, 0) + c1 * c2
        return Cyc(self.N, t)

    __rmul__ = __mul__

    def conj(self) -> "Cyc":
        return Cyc(self.N, {-e: c for e, c in self.terms.items()})

    def galois(self, k: int) -> "Cyc":
        """Apply zeta -> zeta^k."""
        return Cyc(self.N, {e * k: c for e, c in self.terms.items()})

    def reduced(self) -> tuple:
        """Canonical coefficient tuple modulo Phi_N (length phi(N))."""
        phi = cyclotomic_poly(self.N)
        deg = len(phi) - 1
        a = [0] * max(self.N, deg)
        for e, c in self.terms.items():
            a[e] += c
        for i in range(len(a) - 1, deg - 1, -1):
            c = a[i]
            if c:
                for j in range(deg + 1):
                    a[i - deg + j] -= c * phi[j]
        return tuple(a[:deg])

    def is_zero(self) -> bool:
        return not any(self.reduced())

    def __eq__(self, other):
        if not isinstance(other, Cyc):
            if isinstance(other, (int, Fraction)):
                other = Cyc.const(self.N, other)
            else:
                return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.N, self.reduced()))

    def rational(self):
        """The value as int/Fraction, or ValueError if it is not rational."""
        r = self.reduced()
        if any(r[1:]):
            raise ValueError(f"{self} is not rational")
        c = r[0] if r else 0
        if isinstance(c, Fraction) and c.denominator == 1:
            return c.numerator
        return c

    def is_rational(self) -> bool:
        return not any(self.reduced()[1:])

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*z{self.N}^{e}" for e, c in sorted(self.terms.items()))
