"""Motzkin 数とインボリューション数（多倍長整数で厳密に）."""

from __future__ import annotations

from functools import lru_cache
from math import factorial


def motzkin_formula(n: int) -> int:
    """M_n = Σ_k n! / (k! (k+1)! (n−2k)!)."""
    if n < 0:
        raise ValueError(f"n は 0 以上: n={n}")
    return sum(
        factorial(n) // (factorial(k) * factorial(k + 1) * factorial(n - 2 * k))
        for k in range(n // 2 + 1)
    )


@lru_cache(maxsize=None)
def motzkin_recurrence(n: int) -> int:
    """M_{n+1} = M_n + Σ_{k=0}^{n−1} M_k M_{n−1−k}."""
    if n < 0:
        raise ValueError(f"n は 0 以上: n={n}")
    if n <= 1:
        return 1
    m = n - 1
    return motzkin_recurrence(m) + sum(
        motzkin_recurrence(k) * motzkin_recurrence(m - 1 - k) for k in range(m)
    )


def motzkin(n: int) -> int:
    value = motzkin_formula(n)
    assert value == motzkin_recurrence(n), f"M_{n}: 公式と漸化式が一致しません"
    return value


def M(n: int) -> int:
    """恒等式用: 負の添字は 0."""
    return motzkin(n) if n >= 0 else 0


@lru_cache(maxsize=None)
def involution_count(n: int) -> int:
    """i(n) = i(n−1) + (n−1) i(n−2)."""
    if n < 0:
        raise ValueError(f"n は 0 以上: n={n}")
    if n <= 1:
        return 1
    return involution_count(n - 1) + (n - 1) * involution_count(n - 2)
