"""Integer partitions, hook lengths and symmetric-group characters.

Partitions are immutable tuples of weakly decreasing positive integers.
Everything here is exact integer arithmetic.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator

from .valuations import v_factorial, v_int


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")" if self else "()"


EMPTY = Partition()


@dataclass(frozen=True)
class CycleType:
    """Cycle type (mu_1, ..., mu_m, 1^(n-k)) of a permutation in S_n."""

    mu: Partition
    ambient_n: int

    def __post_init__(self):
        if not isinstance(self.mu, Partition):
            object.__setattr__(self, "mu", Partition(self.mu))
        if self.ambient_n < self.mu.size:
            raise ValueError("ambient_n must be at least |mu|")

    @property
    def k(self) -> int:
        return self.mu.size

    def full(self) -> Partition:
        return Partition(tuple(self.mu) + (1,) * (self.ambient_n - self.mu.size))

    @property
    def sign(self) -> int:
        full = self.full()
        return -1 if (self.ambient_n - len(full)) % 2 else 1


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield the partitions of n in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield EMPTY
        return
    # standard "next partition" walk; a holds the current partition
    a = [n]
    while True:
        yield Partition(a)
        # find the rightmost part > 1
        i = len(a) - 1
        while i >= 0 and a[i] == 1:
            i -= 1
        if i < 0:
            return
        ones = len(a) - i - 1
        m = a[i] - 1
        rem = ones + 1
        del a[i:]
        a.append(m)
        while rem > m:
            a.append(m)
            rem -= m
        if rem:
            a.append(rem)


_p_cache = [1]


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_p_cache) <= n:
        m = len(_p_cache)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sgn = 1 if k % 2 else -1
            total += sgn * _p_cache[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sgn * _p_cache[m - g2]
            k += 1
        _p_cache.append(total)
    return _p_cache[n]


def hooks(lam: Partition) -> tuple[int, ...]:
    """Hook lengths of every cell of the Young diagram, row by row."""
    conj = Partition(lam).conjugate() if lam else EMPTY
    return tuple(
        lam[i] - j + conj[j] - i - 1
        for i in range(len(lam))
        for j in range(lam[i])
    )


def specht_dimension(lam: Partition) -> int:
    """f_lambda = |lambda|! / prod of hook lengths."""
    return factorial(sum(lam)) // prod(hooks(lam))


def alpha(lam: Partition) -> int:
    return sum(i * part for i, part in enumerate(lam))


# --- Murnaghan-Nakayama ------------------------------------------------------


def _beta(shape: tuple[int, ...]) -> tuple[int, ...]:
    L = len(shape)
    return tuple(shape[i] + (L - 1 - i) for i in range(L))


def _from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    L = len(beta)
    parts = [beta[i] - (L - 1 - i) for i in range(L)]
    return tuple(p for p in parts if p > 0)


def remove_rim_hooks(shape: tuple[int, ...], r: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (shape minus an r-rim hook, leg length) for every removable r-rim hook."""
    beta = _beta(shape)
    occupied = set(beta)
    for b in beta:
        c = b - r
        if c < 0 or c in occupied:
            continue
        height = sum(1 for x in beta if c < x < b)
        new = [x for x in beta if x != b] + [c]
        yield _from_beta(new), height


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    # cycles sorted decreasing; a tail of fixed points is handled by the hook formula
    if not cycles or cycles[0] == 1:
        return specht_dimension(shape)
    r, rest = cycles[0], cycles[1:]
    total = 0
    for smaller, height in remove_rim_hooks(shape, r):
        term = _mn(smaller, rest)
        total += -term if height % 2 else term
    return total


def mn_character(lam: Partition, ct: CycleType) -> int:
    """Value of the irreducible character chi^lambda at a permutation of cycle type ct."""
    if ct.ambient_n != sum(lam):
        raise ValueError(f"cycle type lives in S_{ct.ambient_n} but |lambda| = {sum(lam)}")
    cycles = tuple(sorted((c for c in ct.mu if c > 1), reverse=True))
    return _mn(tuple(lam), cycles)


def falling_factorial(n: int, k: int) -> int:
    return prod(range(n - k + 1, n + 1))


class LassalleIntegralityError(ArithmeticError):
    pass


def lassalle_coefficient(lam: Partition, mu: Partition) -> int:
    """A_mu^lambda = chi_mu^lambda * (n)_k / f_lambda, checked to be an integer."""
    n, k = sum(lam), sum(mu)
    if k > n:
        raise ValueError("|mu| must not exceed |lambda|")
    chi = mn_character(lam, CycleType(Partition(mu), n))
    value = Fraction(chi * falling_factorial(n, k), specht_dimension(lam))
    if value.denominator != 1:
        raise LassalleIntegralityError(f"A_{mu}^{lam} = {value} is not an integer")
    return value.numerator


# --- chiral representations ---------------------------------------------------


def chiral_count_closed_form(n: int) -> int:
    """Number of irreducible S_n representations with determinant = sign.

    Uses the closed form in the binary digits n = eps + 2^k1 + ... + 2^kr,
    0 < k1 < ... < kr.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    eps = n & 1
    ks = [i for i in range(1, n.bit_length()) if (n >> i) & 1]
    k1, higher = ks[0], ks[1:]
    inner = 2 ** (k1 - 1) + eps * 2 ** comb(k1, 2)
    for v in range(1, k1):
        inner += 2 ** ((v + 1) * (k1 - 2) - comb(v, 2))
    return 2 ** sum(higher) * inner


CHIRAL_BRUTE_MAX_N = 40


def chiral_count_brute(n: int) -> int:
    """Count lambda |- n whose determinant at a transposition is -1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > CHIRAL_BRUTE_MAX_N:
        raise ValueError(f"brute-force chiral count limited to n <= {CHIRAL_BRUTE_MAX_N}")
    transposition = CycleType(Partition((2,)), n)
    count = 0
    for lam in enumerate_partitions(n):
        minus_eigen = (specht_dimension(lam) - mn_character(lam, transposition)) // 2
        count += minus_eigen % 2
    return count


# --- valuations of f_lambda -------------------------------------------------------


def hook_valuation_sum(lam: Partition, ell: int) -> int:
    return sum(v_int(ell, h) for h in hooks(lam))


def v_specht(lam: Partition, ell: int) -> int:
    """v_ell(f_lambda), from Legendre's formula minus hook valuations."""
    return v_factorial(ell, sum(lam)) - hook_valuation_sum(lam, ell)


def _series_mul(a: list, b: list, cap: int) -> list:
    out = [0] * (cap + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(min(len(b), cap + 1 - i)):
            if b[j]:
                out[i + j] += x * b[j]
    return out


@lru_cache(maxsize=None)
def core_counts(ell: int, cap: int) -> tuple[int, ...]:
    """Number of ell-cores of each size 0..cap.

    Coefficients of prod_k (1 - x^(ell k))^ell / (1 - x^k).
    """
    series = [1] + [0] * cap
    for k in range(1, cap + 1):
        # divide by (1 - x^k)
        for i in range(k, cap + 1):
            series[i] += series[i - k]
        if ell * k <= cap:
            factor = [0] * (cap + 1)
            for j in range(ell + 1):
                if ell * k * j <= cap:
                    factor[ell * k * j] = (-1) ** j * comb(ell, j)
            series = _series_mul(series, factor, cap)
    return tuple(series)


@lru_cache(maxsize=None)
def _hook_valuation_distribution(n: int, ell: int) -> tuple[tuple[int, int], ...]:
    # Hooks of length divisible by ell correspond to hooks of the ell-quotient,
    # with length ell*k <-> k. Hence S(lam) = weight + sum S(quotient parts).
    if n == 0:
        return ((0, 1),)
    cores = core_counts(ell, n)
    total: Counter = Counter()
    for c in range(n % ell, n + 1, ell):
        if c > n or not cores[c]:
            continue
        w = (n - c) // ell
        # distribution of sum of S over ell-tuples of partitions of total size w
        tuples = [Counter({0: 1})] + [Counter() for _ in range(w)]
        for _ in range(ell):
            nxt = [Counter() for _ in range(w + 1)]
            for size_a, dist_a in enumerate(tuples):
                if not dist_a:
                    continue
                for size_b in range(w - size_a + 1):
                    for sb, cb in _hook_valuation_distribution(size_b, ell):
                        for sa, ca in dist_a.items():
                            nxt[size_a + size_b][sa + sb] += ca * cb
            tuples = nxt
        for s, cnt in tuples[w].items():
            total[s + w] += cores[c] * cnt
    return tuple(sorted(total.items()))


def valuation_distribution(n: int, ell: int, method: str = "auto") -> Counter:
    """Histogram {v_ell(f_lambda): #lambda |- n}.

    method "enumerate" walks all partitions; "quotient" counts through the
    ell-core/ell-quotient decomposition and never lists partitions.
    """
    if method == "auto":
        method = "enumerate" if n <= 30 else "quotient"
    vf = v_factorial(ell, n)
    if method == "enumerate":
        return Counter(v_specht(lam, ell) for lam in enumerate_partitions(n))
    if method == "quotient":
        return Counter({vf - s: c for s, c in _hook_valuation_distribution(n, ell)})
    raise ValueError(f"unknown method {method!r}")


def valuation_statistic(n: int, ell: int, threshold, method: str = "auto") -> tuple[int, int]:
    """(#{lambda |- n : v_ell(f_lambda) < threshold}, p(n))."""
    if n < 1:
        raise ValueError("n must be positive")
    dist = valuation_distribution(n, ell, method)
    below = sum(c for v, c in dist.items() if v < threshold)
    return below, partition_count(n)


def below_log_threshold(v: int, ell: int, r: int, n: int) -> bool:
    """Exact test of v < r + log_ell(n) for integers v, r."""
    e = v - r
    return e < 0 or ell**e < n


def log_threshold_statistic(n: int, ell: int, r: int, method: str = "auto") -> tuple[int, int]:
    """(#{lambda |- n : v_ell(f_lambda) < r + log_ell n}, p(n))."""
    dist = valuation_distribution(n, ell, method)
    below = sum(c for v, c in dist.items() if below_log_threshold(v, ell, r, n))
    return below, partition_count(n)
