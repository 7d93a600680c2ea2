"""ell-adic valuations of the integers that show up in character degrees.

q-dependent quantities are handled with the lifting-the-exponent closed
form; nothing here factors a large integer.
"""
from __future__ import annotations


def _require_odd_q(q: int) -> None:
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be an odd integer >= 3, got {q}")


def v_int(ell: int, m: int) -> int:
    """Largest r with ell**r dividing m."""
    if m == 0:
        raise ValueError("valuation of 0 is undefined")
    m = abs(m)
    if ell == 2:
        return (m & -m).bit_length() - 1
    r = 0
    while m % ell == 0:
        m //= ell
        r += 1
    return r


def digit_sum(n: int, base: int) -> int:
    s = 0
    while n:
        n, d = divmod(n, base)
        s += d
    return s


def v_factorial(ell: int, n: int) -> int:
    """Legendre: v_ell(n!) = (n - s_ell(n)) / (ell - 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (n - digit_sum(n, ell)) // (ell - 1)


def v_falling(ell: int, n: int, k: int) -> int:
    """v_ell(n (n-1) ... (n-k+1))."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return (k + digit_sum(n - k, ell) - digit_sum(n, ell)) // (ell - 1)


def v2_qpow_minus_one(q: int, m: int) -> int:
    """v_2(q^m - 1) for odd q."""
    _require_odd_q(q)
    if m < 1:
        raise ValueError("m must be positive")
    if m % 2:
        return v_int(2, q - 1)
    return v_int(2, q - 1) + v_int(2, q + 1) + v_int(2, m) - 1


def v2_psi(q: int, n: int) -> int:
    """v_2 of prod_{i=1}^n (q^i - 1)."""
    _require_odd_q(q)
    return sum(v2_qpow_minus_one(q, i) for i in range(1, n + 1))


def v2_H_denominator(lam, q: int, d: int) -> int:
    """v_2 of prod over hooks h of (q^(d|h|) - 1)."""
    from .partitions import hooks

    _require_odd_q(q)
    if d < 1:
        raise ValueError("d must be positive")
    return sum(v2_qpow_minus_one(q, d * h) for h in hooks(lam))


def v2_prod_top_terms(q: int, n: int, n0: int) -> int:
    """v_2 of prod_{i=0}^{n0-1} (q^(n-i) - 1)."""
    if not 0 <= n0 <= n:
        raise ValueError("need 0 <= n0 <= n")
    return sum(v2_qpow_minus_one(q, n - i) for i in range(n0))
