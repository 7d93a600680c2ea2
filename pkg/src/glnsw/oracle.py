"""Brute-force GL_2(F_q) for q in {3, 5, 7}: classes, induced characters, indicators, dets.

Everything is computed by summing over explicit matrices, independently of the
closed formulas in gl2.  Character values live in Z[zeta_N], N = lcm(q^2 - 1, q).

Fixed choices:
  * F_q^x generator g: least primitive root mod q; chi_j(g) = zeta_{q-1}^j.
  * F_{q^2} = F_q[t]/(m) with m the least irreducible quadratic; its generator G
    is the least primitive element (same conventions as fqpoly.FiniteField), and
    theta_k(G) = zeta_{q^2-1}^k.  The torus E is the image of multiplication by
    F_{q^2}^x in the basis {1, t}.
  * additive character psi(b) = zeta_q^b.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, Iterator

from .cyclotomic import Cyc
from .fqpoly import field
from .gl2 import Cuspidal, Gl2Rep, OneDim, PrincipalSeries, SteinbergTwist

ORACLE_QS = (3, 5, 7)

Matrix = tuple  # (a, b, c, d) for [[a, b], [c, d]]


def _check_q(q: int) -> None:
    if q not in ORACLE_QS:
        raise ValueError(f"the brute-force oracle only supports q in {ORACLE_QS}, got {q}")


def enumerate_group(q: int) -> Iterator[Matrix]:
    _check_q(q)
    r = range(q)
    for a in r:
        for b in r:
            for c in r:
                for d in r:
                    if (a * d - b * c) % q:
                        yield (a, b, c, d)


@dataclass(frozen=True)
class ClassData:
    representative: Matrix
    size: int
    centralizer_order: int
    key: tuple


class Gl2Group:
    """GL_2(F_q) with its class structure and the fixed character conventions."""

    def __init__(self, q: int):
        _check_q(q)
        self.q = q
        self.elements = list(enumerate_group(q))
        self.order = len(self.elements)
        self.N = lcm(q * q - 1, q)
        self.Fq = field(q)
        self.Fq2 = field(q * q)
        sizes: dict = {}
        reps: dict = {}
        for g in self.elements:
            k = self.class_key(g)
            sizes[k] = sizes.get(k, 0) + 1
            reps.setdefault(k, g)
        keys = sorted(sizes)
        self.classes = [ClassData(reps[k], sizes[k], self.order // sizes[k], k) for k in keys]
        self.index = {k: i for i, k in enumerate(keys)}
        self.square_class = [self.index[self.class_key(self.mul(c.representative, c.representative))] for c in self.classes]
        self.inverse_class = [self.index[self.class_key(self.inv(c.representative))] for c in self.classes]

    # -- matrix arithmetic
    def mul(self, x: Matrix, y: Matrix) -> Matrix:
        q = self.q
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % q, (a * f + b * h) % q, (c * e + d * g) % q, (c * f + d * h) % q)

    def det(self, x: Matrix) -> int:
        return (x[0] * x[3] - x[1] * x[2]) % self.q

    def inv(self, x: Matrix) -> Matrix:
        q = self.q
        di = pow(self.det(x), -1, q)
        a, b, c, d = x
        return (d * di % q, -b * di % q, -c * di % q, a * di % q)

    def class_key(self, x: Matrix) -> tuple:
        a, b, c, d = x
        scalar = b == 0 and c == 0 and a == d
        return ((a + d) % self.q, self.det(x), scalar)

    def class_of(self, x: Matrix) -> int:
        return self.index[self.class_key(x)]

    # -- character conventions (exponents of zeta_N)
    def chi_exp(self, j: int, x: int) -> int:
        """Exponent of chi_j(x), x in F_q^x."""
        return j * self.Fq.log[x] * (self.N // (self.q - 1))

    def theta_exp(self, k: int, w: int) -> int:
        """Exponent of theta_k(w), w in F_{q^2}^x (int encoding of fqpoly)."""
        return k * self.Fq2.log[w] * (self.N // (self.q * self.q - 1))

    def psi_exp(self, b: int) -> int:
        return b * (self.N // self.q)

    def torus_matrix(self, w: int) -> Matrix:
        """Multiplication by w = w0 + w1 t on F_{q^2} in the basis {1, t}."""
        q = self.q
        c0, c1 = self.Fq2.modulus[0], self.Fq2.modulus[1]
        w0, w1 = w % q, w // q
        return (w0, -c0 * w1 % q, w1, (w0 - c1 * w1) % q)

    # -- subgroups as lists of (element, exponent of sigma)
    def borel(self, j1: int, j2: int) -> list[tuple[Matrix, int]]:
        q = self.q
        return [
            ((x, y, 0, z), self.chi_exp(j1, x) + self.chi_exp(j2, z))
            for x in range(1, q)
            for y in range(q)
            for z in range(1, q)
        ]

    def diagonal_torus(self, j1: int, j2: int) -> list[tuple[Matrix, int]]:
        q = self.q
        return [((x, 0, 0, z), self.chi_exp(j1, x) + self.chi_exp(j2, z)) for x in range(1, q) for z in range(1, q)]

    def mirabolic_center(self, k: int) -> list[tuple[Matrix, int]]:
        # z * [[1, b], [0, 1]] with sigma = theta_k(z) psi(b); z in F_q sits in F_{q^2} as the constant z
        q = self.q
        return [((z, z * b % q, 0, z), self.theta_exp(k, z) + self.psi_exp(b)) for z in range(1, q) for b in range(q)]

    def nonsplit_torus(self, k: int) -> list[tuple[Matrix, int]]:
        return [(self.torus_matrix(w), self.theta_exp(k, w)) for w in range(1, self.q * self.q)]


@lru_cache(maxsize=None)
def group(q: int) -> Gl2Group:
    return Gl2Group(q)


def conjugacy_classes(q: int) -> list[ClassData]:
    return group(q).classes


class ClassFunction:
    """Values on the classes of group(q), in class order."""

    def __init__(self, q: int, values):
        self.q = q
        self.G = group(q)
        self.values = [_normalize(v, self.G.N) for v in values]

    def __call__(self, g: Matrix) -> Cyc:
        return self.values[self.G.class_of(g)]

    def at_class(self, i: int) -> Cyc:
        return self.values[i]

    def __add__(self, other):
        return ClassFunction(self.q, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        return ClassFunction(self.q, [a - b for a, b in zip(self.values, other.values)])

    def conj(self):
        return ClassFunction(self.q, [v.conj() for v in self.values])

    def degree(self) -> int:
        return self(identity()).rational()

    def __eq__(self, other):
        return all(a == b for a, b in zip(self.values, other.values))


def identity() -> Matrix:
    return (1, 0, 0, 1)


def h1() -> Matrix:
    return (-1, 0, 0, 1)


def h2() -> Matrix:
    return (-1, 0, 0, -1)


def _normalize(v, N: int) -> Cyc:
    if not isinstance(v, Cyc):
        v = Cyc.const(N, v)
    coeffs = v.reduced()
    out = {}
    for e, c in enumerate(coeffs):
        if c:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ArithmeticError("character value is not an algebraic integer")
                c = c.numerator
            out[e] = c
    return Cyc(N, out)


def _positive_key(x: Matrix, q: int) -> Matrix:
    return tuple(v % q for v in x)


def induced_character(q: int, subgroup: list[tuple[Matrix, int]]) -> ClassFunction:
    """Ind_H^G sigma for H given as (element, exponent of sigma) pairs.

    value(C) = |C_G(g)| / |H| * sum over y in H meeting C of sigma(y).
    """
    G = group(q)
    sums = [Cyc(G.N) for _ in G.classes]
    for y, e in subgroup:
        i = G.class_of(_positive_key(y, q))
        sums[i] = sums[i] + Cyc.root(G.N, e)
    H = len(subgroup)
    return ClassFunction(q, [s * Fraction(c.centralizer_order, H) for s, c in zip(sums, G.classes)])


def linear_character(q: int, j: int) -> ClassFunction:
    G = group(q)
    return ClassFunction(q, [Cyc.root(G.N, G.chi_exp(j, G.det(c.representative))) for c in G.classes])


def cuspidal_character(q: int, k: int) -> ClassFunction:
    """Ind_ZN(theta x psi) - Ind_E(theta) for a regular theta_k."""
    if k % (q + 1) == 0:
        raise ValueError("theta must be regular")
    G = group(q)
    return induced_character(q, G.mirabolic_center(k)) - induced_character(q, G.nonsplit_torus(k))


def character_of(rep: Gl2Rep) -> ClassFunction:
    q = rep.q
    G = group(q)
    if isinstance(rep, OneDim):
        return linear_character(q, rep.psi)
    if isinstance(rep, PrincipalSeries):
        return induced_character(q, G.borel(rep.chi1, rep.chi2))
    if isinstance(rep, SteinbergTwist):
        return induced_character(q, G.borel(rep.psi, rep.psi)) - linear_character(q, rep.psi)
    return cuspidal_character(q, rep.theta)


def inner_product(a: ClassFunction, b: ClassFunction) -> Fraction:
    G = a.G
    total = Cyc(G.N)
    for i, c in enumerate(G.classes):
        total = total + a.values[i] * b.values[i].conj() * c.size
    return Fraction(total.rational(), G.order)


def frobenius_schur(chi: ClassFunction) -> int:
    if inner_product(chi, chi) != 1:
        raise ValueError("frobenius_schur needs an irreducible character")
    G = chi.G
    total = Cyc(G.N)
    for i, c in enumerate(G.classes):
        total = total + chi.values[G.square_class[i]] * c.size
    value = Fraction(total.rational(), G.order)
    if value not in (-1, 0, 1):
        raise ArithmeticError(f"indicator {value} out of range")
    return int(value)


# --- determinants of induced representations ---------------------------------------


class InducedDet:
    """det of Ind_H^G sigma via the monomial matrices: sgn(perm) * prod sigma(h_i)."""

    def __init__(self, q: int, subgroup: list[tuple[Matrix, int]]):
        G = group(q)
        self.G = G
        sigma = {_positive_key(y, q): e for y, e in subgroup}
        self.coset_reps = []
        self.where = {}  # element -> (coset index, exponent of sigma(r_i^-1 x))
        for x in G.elements:
            if x in self.where:
                continue
            i = len(self.coset_reps)
            self.coset_reps.append(x)
            for y, e in sigma.items():
                self.where[G.mul(x, y)] = (i, e)

    def exponent(self, g: Matrix) -> int:
        """Exponent of det at g, as a power of zeta_N."""
        G = self.G
        perm = []
        total = 0
        for r in self.coset_reps:
            j, e = self.where[G.mul(g, r)]
            perm.append(j)
            total += e
        if _perm_sign(perm) < 0:
            total += G.N // 2
        return total % G.N


def _perm_sign(perm: list[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _det_function(rep: Gl2Rep) -> Callable[[Matrix], int]:
    q = rep.q
    G = group(q)
    if isinstance(rep, OneDim):
        return lambda g: G.chi_exp(rep.psi, G.det(g))
    if isinstance(rep, PrincipalSeries):
        return InducedDet(q, G.borel(rep.chi1, rep.chi2)).exponent
    if isinstance(rep, SteinbergTwist):
        ind = InducedDet(q, G.borel(rep.psi, rep.psi))
        return lambda g: ind.exponent(g) - G.chi_exp(rep.psi, G.det(g))
    big = InducedDet(q, G.mirabolic_center(rep.theta))
    small = InducedDet(q, G.nonsplit_torus(rep.theta))
    return lambda g: big.exponent(g) - small.exponent(g)


def det_character(rep: Gl2Rep, g: Matrix) -> Cyc:
    """det(rep)(g) as a root of unity in Z[zeta_N]."""
    G = group(rep.q)
    return Cyc.root(G.N, _det_function(rep)(g))


@lru_cache(maxsize=None)
def det_exponent_of(rep: Gl2Rep) -> int:
    """nu with det(rep) = chi_nu o det, checked on every class representative."""
    q = rep.q
    G = group(q)
    f = _det_function(rep)
    gen = G.Fq.generator
    e = f((gen, 0, 0, 1)) % G.N
    step = G.N // (q - 1)
    if e % step:
        raise ArithmeticError(f"det of {rep} at diag(g, 1) is not a (q-1)-th root of unity")
    nu = e // step
    for c in G.classes:
        x = c.representative
        if (f(x) - G.chi_exp(nu, G.det(x))) % G.N:
            raise ArithmeticError(f"det of {rep} does not factor through det")
    return nu


# --- Stiefel-Whitney classes restricted to the diagonal 2-torus ------------------
#
# D = {diag(x, y) : x, y in P}, P the 2-Sylow of F_q^x, cyclic of order 2^a.
# For a >= 2, H*(C_{2^a}; F_2) = F_2[s, t]/(s^2) with |s| = 1, |t| = 2; for a = 1 it
# is F_2[v].  A real character of C_{2^a} has w = 1 + s (or 1 + v), a conjugate
# pair of complex characters lambda^u, lambda^-u realifies with w = 1 + u t.
# The restriction rep|_D is read off from rep|_T (T the diagonal torus), whose
# decomposition follows from the character values on T.


def torus_decomposition(rep: Gl2Rep) -> dict[tuple[int, int], int]:
    """Multiplicities of chi_alpha x chi_beta in rep restricted to the diagonal torus."""
    q = rep.q
    n = q - 1
    out: dict = {}

    def add(a, b, c=1):
        key = (a % n, b % n)
        out[key] = out.get(key, 0) + c

    if isinstance(rep, OneDim):
        add(rep.psi, rep.psi)
    elif isinstance(rep, PrincipalSeries):
        add(rep.chi1, rep.chi2)
        add(rep.chi2, rep.chi1)
        for a in range(n):
            add(a, rep.chi1 + rep.chi2 - a)
    elif isinstance(rep, SteinbergTwist):
        add(rep.psi, rep.psi)
        for a in range(n):
            add(a, 2 * rep.psi - a)
    else:
        for a in range(n):
            add(a, _theta_on_base(rep) - a)
    return {k: v for k, v in out.items() if v}


def _theta_on_base(rep: Cuspidal) -> int:
    """c with theta restricted to F_q^x equal to chi_c."""
    q = rep.q
    if (rep.theta * (q + 1)) % (q * q - 1) == 0:
        return 0  # theta^(q+1) = 1: trivial on the norm group F_q^x
    if q not in ORACLE_QS:
        raise ValueError("theta on F_q^x is only tracked for self-dual theta or q in the oracle range")
    G = group(q)
    L = G.Fq2.log[G.Fq.generator]
    return rep.theta * (L // (q + 1)) % (q - 1)


def torus_decomposition_check(rep: Gl2Rep) -> bool:
    """The decomposition reproduces the brute-force character on diagonal matrices (q <= 7)."""
    q = rep.q
    G = group(q)
    chi = character_of(rep)
    dec = torus_decomposition(rep)
    diag = [(x, 0, 0, z) for x in range(1, q) for z in range(1, q)]
    for g in diag:
        value = Cyc(G.N)
        for (a, b), m in dec.items():
            value = value + Cyc.root(G.N, G.chi_exp(a, g[0]) + G.chi_exp(b, g[3]), m)
        if value != chi(g):
            return False
    return True


def _two_adic(q: int) -> int:
    a = 0
    n = q - 1
    while n % 2 == 0:
        n //= 2
        a += 1
    return a


def _poly_mul(x: dict, y: dict, nvars: int, degrees: tuple, ideal_sq: tuple, cap: int) -> dict:
    out: dict = {}
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            m = tuple(u + v for u, v in zip(m1, m2))
            if any(m[i] > 1 for i in ideal_sq):
                continue
            if sum(d * e for d, e in zip(degrees, m)) > cap:
                continue
            out[m] = (out.get(m, 0) + c1 * c2) % 2
    return {m: c for m, c in out.items() if c}


def restricted_sw_class(rep: Gl2Rep, cap: int = 4) -> dict[int, dict]:
    """Total SW class of rep|_D by degree, as {degree: {monomial: 1}}.

    Variables: a = 1: (v1, v2) of degree 1.  a >= 2: (s1, s2, t1, t2) of degrees
    1, 1, 2, 2 with s_i^2 = 0.
    """
    q = rep.q
    a = _two_adic(q)
    P = 2**a
    dec = torus_decomposition(rep)
    # chi_alpha on P is lambda^(alpha mod 2^a): P is generated by g^((q-1)/2^a)
    restricted: dict = {}
    for (x, y), m in dec.items():
        key = (x % P, y % P)
        restricted[key] = restricted.get(key, 0) + m
    if a == 1:
        nvars, degrees, ideal_sq = 2, (1, 1), ()

        def linear_class(u, v):
            out = {}
            if u:
                out[(1, 0)] = 1
            if v:
                out[(0, 1)] = 1
            return out

    else:
        nvars, degrees, ideal_sq = 4, (1, 1, 2, 2), (0, 1)
        half = P // 2

        def linear_class(u, v):
            # real characters: u, v in {0, half}; w1 = (u/half) s1 + (v/half) s2
            out = {}
            if u == half:
                out[(1, 0, 0, 0)] = 1
            if v == half:
                out[(0, 1, 0, 0)] = 1
            return out

        def chern_class(u, v):
            out = {}
            if u % 2:
                out[(0, 0, 1, 0)] = 1
            if v % 2:
                out[(0, 0, 0, 1)] = 1
            return out

    zero = tuple([0] * nvars)
    total = {zero: 1}
    done = set()
    for (u, v), m in sorted(restricted.items()):
        if (u, v) in done:
            continue
        conj = ((-u) % P, (-v) % P)
        if conj == (u, v):
            factor = {zero: 1}
            for mono, c in linear_class(u, v).items():
                factor[mono] = (factor.get(mono, 0) + c) % 2
            reps_count = m
        else:
            if restricted.get(conj, 0) != m:
                raise ArithmeticError("restriction is not self-dual")
            factor = {zero: 1}
            for mono, c in chern_class(u, v).items():
                factor[mono] = (factor.get(mono, 0) + c) % 2
            reps_count = m
            done.add(conj)
        done.add((u, v))
        for _ in range(reps_count):
            total = _poly_mul(total, factor, nvars, degrees, ideal_sq, cap)
    by_degree: dict = {}
    for mono, c in total.items():
        deg = sum(d * e for d, e in zip(degrees, mono))
        by_degree.setdefault(deg, {})[mono] = c
    return by_degree


def restricted_w(rep: Gl2Rep, i: int) -> dict:
    return restricted_sw_class(rep).get(i, {})
