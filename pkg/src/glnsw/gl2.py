"""Self-dual irreducibles of GL_2(F_q) and their Stiefel-Whitney vanishing decisions.

Characters of F_q^x are exponents j mod q-1 against a fixed generator, so
chi_j(-1) = (-1)^j.  Characters of F_{q^2}^x are exponents k mod q^2-1, with
theta^q = theta_{kq}.  A cuspidal orbit {theta, theta^q} is stored by its
smaller exponent.

w2 (and w4 when q = 1 mod 4) are decided from m = (dim - chi(h1))/2 where
h1 = diag(-1, 1):
    q = 1 mod 4:  w2 = 0  iff  m = 0 mod 4
                  w4 = 0  iff  C(m/2, 2) and (dim - chi(h2))/8 are both even
    q = 3 mod 4:  w2 = 0  iff  C(m, 2) is even
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Optional, Union

from .fqpoly import require_odd_prime_power

ORACLE_QS = (3, 5, 7)


@dataclass(frozen=True)
class OneDim:
    q: int
    psi: int

    family = "one_dim"

    @property
    def dim(self) -> int:
        return 1

    def __str__(self):
        return f"psi_{self.psi} o det"


@dataclass(frozen=True)
class PrincipalSeries:
    q: int
    chi1: int
    chi2: int

    family = "principal_series"

    def __post_init__(self):
        if self.chi1 % (self.q - 1) == self.chi2 % (self.q - 1):
            raise ValueError("principal series needs chi1 != chi2")
        a, b = sorted((self.chi1 % (self.q - 1), self.chi2 % (self.q - 1)))
        object.__setattr__(self, "chi1", a)
        object.__setattr__(self, "chi2", b)

    @property
    def dim(self) -> int:
        return self.q + 1

    def __str__(self):
        return f"Ind_B(chi_{self.chi1} x chi_{self.chi2})"


@dataclass(frozen=True)
class SteinbergTwist:
    q: int
    psi: int

    family = "steinberg"

    @property
    def dim(self) -> int:
        return self.q

    def __str__(self):
        return f"St x psi_{self.psi} o det"


@dataclass(frozen=True)
class Cuspidal:
    q: int
    theta: int

    family = "cuspidal"

    def __post_init__(self):
        N = self.q * self.q - 1
        k = self.theta % N
        if k % (self.q + 1) == 0:
            raise ValueError("cuspidal needs a regular theta (theta != theta^q)")
        object.__setattr__(self, "theta", min(k, k * self.q % N))

    @property
    def dim(self) -> int:
        return self.q - 1

    def __str__(self):
        return f"pi_theta_{self.theta}"


Gl2Rep = Union[OneDim, PrincipalSeries, SteinbergTwist, Cuspidal]


def _quadratic(q: int) -> int:
    return (q - 1) // 2


def sign_at_minus_one(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def is_self_dual(rep: Gl2Rep) -> bool:
    q = rep.q
    if isinstance(rep, (OneDim, SteinbergTwist)):
        return 2 * rep.psi % (q - 1) == 0
    if isinstance(rep, PrincipalSeries):
        return {(-rep.chi1) % (q - 1), (-rep.chi2) % (q - 1)} == {rep.chi1, rep.chi2}
    N = q * q - 1
    return (rep.theta * q + rep.theta) % N == 0


def enumerate_all_reps(q: int) -> Iterator[Gl2Rep]:
    """All q^2 - 1 irreducibles, family by family."""
    require_odd_prime_power(q)
    for j in range(q - 1):
        yield OneDim(q, j)
    for a in range(q - 1):
        for b in range(a + 1, q - 1):
            yield PrincipalSeries(q, a, b)
    for j in range(q - 1):
        yield SteinbergTwist(q, j)
    N = q * q - 1
    for k in range(N):
        if k % (q + 1) and k <= k * q % N:
            yield Cuspidal(q, k)


def enumerate_self_dual_reps(q: int) -> Iterator[Gl2Rep]:
    """The q + 3 self-dual irreducibles."""
    require_odd_prime_power(q)
    h = _quadratic(q)
    yield OneDim(q, 0)
    yield OneDim(q, h)
    for j in range(1, h):
        yield PrincipalSeries(q, j, q - 1 - j)
    yield PrincipalSeries(q, 0, h)
    yield SteinbergTwist(q, 0)
    yield SteinbergTwist(q, h)
    for m in range(1, (q - 1) // 2 + 1):
        yield Cuspidal(q, m * (q - 1))


def char_at_involutions(rep: Gl2Rep) -> tuple[int, int]:
    """(chi(h1), chi(h2)) with h1 = diag(-1, 1), h2 = -I."""
    q = rep.q
    if isinstance(rep, OneDim):
        return sign_at_minus_one(rep.psi), 1
    if isinstance(rep, PrincipalSeries):
        s1, s2 = sign_at_minus_one(rep.chi1), sign_at_minus_one(rep.chi2)
        return s1 + s2, (q + 1) * s1 * s2
    if isinstance(rep, SteinbergTwist):
        # St(h1) = (fixed points of h1 on P^1) - 1 = 1
        return sign_at_minus_one(rep.psi), q
    return 0, (q - 1) * sign_at_minus_one(rep.theta)


def det_exponent(rep: Gl2Rep) -> Optional[int]:
    """nu with det(rep) = chi_nu o det, or None for cuspidals outside the oracle range."""
    q = rep.q
    h = _quadratic(q)
    if isinstance(rep, OneDim):
        return rep.psi % (q - 1)
    if isinstance(rep, PrincipalSeries):
        # sign of the permutation action on P^1 is mu o det; the diagonal part is chi1*chi2 o det
        return (h + rep.chi1 + rep.chi2) % (q - 1)
    if isinstance(rep, SteinbergTwist):
        return (h + rep.psi * q) % (q - 1)
    if q in ORACLE_QS:
        from .oracle import det_exponent_of

        return det_exponent_of(rep)
    return None


@dataclass(frozen=True)
class SwDecision:
    w1_trivial: Optional[bool]
    w2_trivial: bool
    w4_trivial: Optional[bool]  # None: not applicable (q = 3 mod 4)
    m_pi: int
    chi_h1: int
    chi_h2: int
    dim: int


def decide_from_values(q: int, dim: int, chi_h1: int, chi_h2: int) -> tuple[bool, Optional[bool], int]:
    """(w2 trivial, w4 trivial or None, m) from dimension and the two involution values."""
    if (dim - chi_h1) % 2:
        raise ArithmeticError("dim - chi(h1) must be even")
    m = (dim - chi_h1) // 2
    if not 0 <= m <= dim:
        raise ArithmeticError(f"m = {m} out of range")
    if q % 4 == 1:
        if m % 2:
            raise ArithmeticError("m must be even when q = 1 mod 4")
        second = Fraction(dim - chi_h2, 8)
        if second.denominator != 1 or second != 0:
            raise ArithmeticError(f"(dim - chi(h2))/8 = {second}, expected 0 for self-dual reps")
        w2 = m % 4 == 0
        w4 = comb(m // 2, 2) % 2 == 0 and second.numerator % 2 == 0
        return w2, w4, m
    return comb(m, 2) % 2 == 0, None, m


def sw_decision(rep: Gl2Rep, with_w1: bool = True) -> SwDecision:
    """Decide w1, w2, w4 for a self-dual rep.  with_w1=False skips the det
    computation (and any oracle call) when only w2/w4 are wanted."""
    q = rep.q
    if not is_self_dual(rep):
        raise ValueError(f"{rep} is not self-dual")
    chi_h1, chi_h2 = char_at_involutions(rep)
    w2, w4, m = decide_from_values(q, rep.dim, chi_h1, chi_h2)
    nu = det_exponent(rep) if with_w1 else None
    w1 = None if nu is None else nu == 0
    if q % 4 == 3:
        # h1 is an involution of nonsquare determinant: det(h1) = (-1)^m decides det
        parity = m % 2 == 0
        if w1 is not None and w1 != parity:
            raise ArithmeticError(f"det formula and m-parity disagree for {rep}")
        w1 = parity
    return SwDecision(w1, w2, w4, m, chi_h1, chi_h2, rep.dim)


# --- subcases and the table -------------------------------------------------------


def subcase(rep: Gl2Rep) -> str:
    q = rep.q
    if isinstance(rep, OneDim):
        return "one_dim"
    if isinstance(rep, PrincipalSeries):
        if {rep.chi1, rep.chi2} == {0, _quadratic(q)}:
            return "ps_1_quadratic"
        return "ps_plus" if sign_at_minus_one(rep.chi1) == 1 else "ps_minus"
    if isinstance(rep, SteinbergTwist):
        return "steinberg_trivial" if rep.psi == 0 else "steinberg_quadratic"
    return "cuspidal"


SUBCASES = (
    "one_dim",
    "ps_plus",
    "ps_minus",
    "ps_1_quadratic",
    "steinberg_trivial",
    "steinberg_quadratic",
    "cuspidal",
)

SUBCASE_LABELS = {
    "one_dim": "1-dim",
    "ps_plus": "Principal series chi1(-1)=1",
    "ps_minus": "Principal series chi1(-1)=-1",
    "ps_1_quadratic": "Principal series {1, quadratic}",
    "steinberg_trivial": "Steinberg (psi=1)",
    "steinberg_quadratic": "Steinberg twist (psi=quadratic)",
    "cuspidal": "Cuspidal",
}


def subcase_counts(q: int) -> dict[str, int]:
    """Number of self-dual reps in each subcase, without enumerating them."""
    h = _quadratic(q)
    odd_j = h - (1 if h % 2 else 0)
    even_j = (h - 1) - (0 if h % 2 else 1)
    return {
        "one_dim": 2,
        "ps_plus": even_j // 2,
        "ps_minus": odd_j // 2,
        "ps_1_quadratic": 1,
        "steinberg_trivial": 1,
        "steinberg_quadratic": 1,
        "cuspidal": (q - 1) // 2,
    }


def subcase_values(q: int, case: str) -> list[tuple[int, int, int]]:
    """(dim, chi(h1), chi(h2)) for each distinct value pattern in a subcase."""
    mu1 = sign_at_minus_one(_quadratic(q))
    if case == "one_dim":
        return [(1, 1, 1), (1, mu1, 1)]
    if case == "ps_plus":
        return [(q + 1, 2, q + 1)]
    if case == "ps_minus":
        return [(q + 1, -2, q + 1)]
    if case == "ps_1_quadratic":
        return [(q + 1, 1 + mu1, (q + 1) * mu1)]
    if case == "steinberg_trivial":
        return [(q, 1, q)]
    if case == "steinberg_quadratic":
        return [(q, mu1, q)]
    if case == "cuspidal":
        return [(q - 1, 0, q - 1)]
    raise KeyError(case)


def _all_same(values):
    values = set(values)
    return values.pop() if len(values) == 1 else "mixed"


def table_cell(q: int, case: str) -> Optional[tuple[bool, Optional[bool]]]:
    """(w2 = 0, w4 = 0) as the published summary table states it; None if the row is absent.

    w4 is None where the table has "--" (q = 3 mod 4).
    """
    r8, r16 = q % 8, q % 16
    if q % 4 == 1:
        table = {
            "one_dim": (True, True),
            "ps_plus": (r8 == 1, r16 == 1),
            "ps_minus": (r8 == 5, r16 == 13),
            "steinberg_trivial": (r8 == 1, r16 == 1),
            "steinberg_quadratic": (r8 == 1, r16 == 1),
            "cuspidal": (r8 == 1, r16 == 1),
        }
    else:
        table = {
            "one_dim": (True, None),
            "ps_plus": (r8 == 3, None),
            "ps_minus": (r8 == 7, None),
            "steinberg_quadratic": (r8 == 7, None),
            "cuspidal": (False, None),
        }
    return table.get(case)


@dataclass(frozen=True)
class TableRow:
    q: int
    case: str
    count: int
    m_pi: object
    w2_trivial: object
    w4_trivial: object
    in_table: bool
    table_w2: Optional[bool]
    table_w4: Optional[bool]

    @property
    def label(self) -> str:
        return SUBCASE_LABELS[self.case]

    @property
    def matches_table(self) -> Optional[bool]:
        """None when the row is outside the table or has no representatives."""
        if not self.in_table or self.count == 0:
            return None
        ok = self.w2_trivial == self.table_w2
        if self.q % 4 == 1:
            ok = ok and self.w4_trivial == self.table_w4
        return ok

    def mismatched_cells(self) -> list[str]:
        if self.matches_table is not False:
            return []
        out = []
        if self.w2_trivial != self.table_w2:
            out.append("w2")
        if self.q % 4 == 1 and self.w4_trivial != self.table_w4:
            out.append("w4")
        return out


def summary_table(q: int) -> list[TableRow]:
    """One row per (family, subcase), verdicts from the m criterion next to the table's."""
    require_odd_prime_power(q)
    counts = subcase_counts(q)
    rows = []
    for case in SUBCASES:
        decisions = [decide_from_values(q, *vals) for vals in subcase_values(q, case)]
        cell = table_cell(q, case)
        rows.append(
            TableRow(
                q=q,
                case=case,
                count=counts[case],
                m_pi=_all_same(d[2] for d in decisions),
                w2_trivial=_all_same(d[0] for d in decisions),
                w4_trivial=_all_same(d[1] for d in decisions),
                in_table=cell is not None,
                table_w2=cell[0] if cell else None,
                table_w4=cell[1] if cell else None,
            )
        )
    return rows


def census(q: int) -> dict:
    """Self-dual counts per family: enumerated next to the published census."""
    counts = Counter(r.family for r in enumerate_self_dual_reps(q))
    return {
        "q": q,
        "one_dim": counts["one_dim"],
        "principal_series": counts["principal_series"],
        "principal_series_inverse_pairs": (q - 3) // 2,
        "principal_series_1_quadratic": 1,
        "steinberg": counts["steinberg"],
        "cuspidal": counts["cuspidal"],
        "enumerated_total": sum(counts.values()),
        "census_total": census_total(q),
    }


# --- densities --------------------------------------------------------------------


@dataclass(frozen=True)
class DensityRecord:
    q: int
    residue: int
    count_w2_zero: int
    total_orthogonal: int
    derived_closed_form: int
    table_closed_form: int
    census_total: int

    def __post_init__(self):
        if not 0 <= self.count_w2_zero <= self.total_orthogonal:
            raise ValueError("count out of range")


def derived_count(q: int) -> int:
    """Closed form of #{w2 = 0} from the m criterion (q + 3 self-dual reps)."""
    return {1: (3 * q + 13) // 4, 3: (3 * q + 7) // 4, 5: (q + 7) // 4, 7: (q + 13) // 4}[q % 8]


def table_count(q: int) -> int:
    """The published per-class counts: all, (q+5)/4, (q-1)/4, one Steinberg twist."""
    return {1: q + 3, 3: (q + 5) // 4, 5: (q - 1) // 4, 7: 1}[q % 8]


def census_total(q: int) -> int:
    """The published census (q-3)/2 + (q-1)/2 + 2 + 2."""
    return (q - 3) // 2 + (q - 1) // 2 + 4


def density(q: int, method: str = "subcase") -> DensityRecord:
    """Count self-dual reps with w2 = 0.

    method "enumerate" runs sw_decision on every rep; "subcase" multiplies each
    subcase's size by its (common) verdict.  Both are exact.
    """
    require_odd_prime_power(q)
    if method == "enumerate":
        reps = list(enumerate_self_dual_reps(q))
        count = sum(sw_decision(r, with_w1=False).w2_trivial for r in reps)
        total = len(reps)
    elif method == "subcase":
        counts = subcase_counts(q)
        total = sum(counts.values())
        count = 0
        for case, c in counts.items():
            verdicts = [decide_from_values(q, *vals)[0] for vals in subcase_values(q, case)]
            if case == "one_dim":
                count += sum(verdicts)
            else:
                count += c * verdicts[0]
    else:
        raise ValueError(f"unknown method {method!r}")
    derived = derived_count(q)
    if count != derived:
        raise ArithmeticError(f"q={q}: count {count} != derived closed form {derived}")
    return DensityRecord(q, q % 8, count, total, derived, table_count(q), census_total(q))


def prime_powers(X: int, residue: Optional[int] = None) -> Iterator[int]:
    """Odd prime powers q <= X, ascending, optionally with q = residue mod 8."""
    if X < 3:
        raise ValueError("X must be at least 3")
    sieve = bytearray([1]) * (X + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(X**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, X + 1, i)))
    found = set()
    for p in range(3, X + 1, 2):
        if sieve[p]:
            pk = p
            while pk <= X:
                found.add(pk)
                pk *= p
    for q in sorted(found):
        if residue is None or q % 8 == residue % 8:
            yield q


STATED_CLASS_LIMITS = {1: Fraction(1), 3: Fraction(1, 4), 5: Fraction(1, 4), 7: Fraction(0)}
STATED_GLOBAL_LIMIT = Fraction(3, 8)
DERIVED_CLASS_LIMITS = {1: Fraction(3, 4), 3: Fraction(3, 4), 5: Fraction(1, 4), 7: Fraction(1, 4)}
DERIVED_GLOBAL_LIMIT = Fraction(1, 2)


@dataclass(frozen=True)
class DensitySummary:
    X: int
    per_class: dict  # residue -> (count, total)
    count: int
    total: int

    def class_ratio(self, a: int) -> Fraction:
        c, t = self.per_class[a]
        return Fraction(c, t)

    @property
    def global_ratio(self) -> Fraction:
        return Fraction(self.count, self.total)


def density_records(X: int, method: str = "subcase") -> list[DensityRecord]:
    return [density(q, method) for q in prime_powers(X)]


def summarize(records: list[DensityRecord], X: int) -> DensitySummary:
    per = {a: [0, 0] for a in (1, 3, 5, 7)}
    for r in records:
        per[r.residue][0] += r.count_w2_zero
        per[r.residue][1] += r.total_orthogonal
    count = sum(v[0] for v in per.values())
    total = sum(v[1] for v in per.values())
    return DensitySummary(X, {a: tuple(v) for a, v in per.items()}, count, total)


def global_average(X: int, method: str = "subcase") -> Fraction:
    """Sum of w2 = 0 counts over sum of q + 3, over odd prime powers q <= X."""
    return summarize(density_records(X, method), X).global_ratio
