"""Exact combinatorial tables: binomials, Stirling subset numbers, harmonic
sums, lcm(1..n) and the C^n/n! decay helper."""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def stirling2(m: int, l: int) -> int:
    """Stirling subset number S(m, l): partitions of an m-set into l blocks.

    Recurrence S(m,l) = l*S(m-1,l) + S(m-1,l-1), S(0,0) = 1.
    """
    if m < 0 or l < 0:
        raise ValueError("stirling2 needs nonnegative arguments")
    if m == 0:
        return 1 if l == 0 else 0
    if l == 0 or l > m:
        return 0
    return l * stirling2(m - 1, l) + stirling2(m - 1, l - 1)


@lru_cache(maxsize=None)
def harmonic(r: int, p: int = 1) -> Fraction:
    """H_r^(p) = sum_{k=1..r} 1/k^p as an exact rational (H_0 = 0)."""
    if r < 0:
        raise ValueError("harmonic needs r >= 0")
    if r == 0:
        return Fraction(0)
    return harmonic(r - 1, p) + Fraction(1, r**p)


_lcm_cache: list[int] = [1]
_lcm_lock = threading.Lock()


def lcm_upto(n: int) -> int:
    """d_n = lcm(1, 2, ..., n); d_0 = 1."""
    if n < 0:
        raise ValueError("lcm_upto needs n >= 0")
    if len(_lcm_cache) <= n:
        with _lcm_lock:
            while len(_lcm_cache) <= n:
                k = len(_lcm_cache)
                _lcm_cache.append(math.lcm(_lcm_cache[-1], k))
    return _lcm_cache[n]


def power_over_factorial(C: Fraction | int, n: int) -> Fraction:
    """C^n / n! as an exact rational."""
    return Fraction(C) ** n / math.factorial(n)


def factorial_domination_crossover(C: Fraction | int, threshold: Fraction,
                                   n_max: int = 10_000) -> int:
    """Smallest n <= n_max with C^n/n! < threshold (exact comparison).

    The sequence decreases monotonically once n > e*C, so the scan is safe.
    """
    C = Fraction(C)
    term = Fraction(1)
    for n in range(1, n_max + 1):
        term = term * C / n
        if term < threshold:
            return n
    raise ArithmeticError(f"C^n/n! stayed >= {threshold} up to n={n_max}")
