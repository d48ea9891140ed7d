"""Dense univariate polynomial helpers over exact coefficient types.

Coefficients may be int, Fraction, ExactScalar or Ball; everything is
ascending-order lists.  Exact-field routines (gcd, squarefree) require
Fraction or ExactScalar coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import ExactScalar, as_scalar


def trim(p: list) -> list:
    while p and not p[-1]:
        p = p[:-1]
    return p


def degree(p: list) -> int:
    p = trim(list(p))
    return len(p) - 1 if p else -1


def add(p: list, q: list) -> list:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                 for i in range(n)])


def neg(p: list) -> list:
    return [-c for c in p]


def mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return trim(out)


def scale(p: list, c) -> list:
    return trim([a * c for a in p])


def evaluate(p: list, x):
    acc = None
    for c in reversed(p):
        acc = c if acc is None else acc * x + c
    if acc is None:
        return 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
    return acc


def derivative(p: list) -> list:
    return trim([i * c for i, c in enumerate(p)][1:])


def divmod_exact(p: list, q: list) -> tuple[list, list]:
    """Division with remainder over a field (Fraction/ExactScalar coeffs)."""
    q = trim(list(q))
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    d = len(q) - 1
    lead = q[-1]
    out = [Fraction(0)] * max(len(p) - d, 0)
    while len(trim(r)) - 1 >= d:
        r = trim(r)
        k = len(r) - 1 - d
        c = r[-1] / lead
        out[k] = c
        for i, b in enumerate(q):
            r[k + i] = r[k + i] - c * b
        r[-1] = 0 * r[-1]
    return trim(out), trim(r)


def monic(p: list) -> list:
    p = trim(list(p))
    if not p:
        return p
    lead = p[-1]
    return [c / lead for c in p]


def gcd_monic(p: list, q: list) -> list:
    a, b = trim(list(p)), trim(list(q))
    while b:
        _, r = divmod_exact(a, b)
        a, b = b, r
    return monic(a) if a else a


def squarefree_decomposition(p: list) -> list[tuple[list, int]]:
    """Yun's algorithm: [(g_1, 1), (g_2, 2), ...] with p ~ prod g_i^i and the
    g_i squarefree and coprime (characteristic zero).  Constant p -> []."""
    p = trim(list(p))
    if degree(p) < 1:
        return []
    p = monic(p)
    dp = derivative(p)
    a = gcd_monic(p, dp)
    b, _ = divmod_exact(p, a)
    c, _ = divmod_exact(dp, a)
    d = add(c, neg(derivative(b)))
    out = []
    i = 1
    while degree(b) > 0:
        g = gcd_monic(b, d)
        if degree(g) > 0:
            out.append((g, i))
        b, _ = divmod_exact(b, g) if degree(g) > 0 else (b, None)
        c, _ = divmod_exact(d, g) if degree(g) > 0 else (d, None)
        d = add(c, neg(derivative(b)))
        i += 1
    return out


def rational_roots(p: list[Fraction]) -> list[Fraction]:
    """All rational roots (with multiplicity ignored) of a rational-coefficient
    polynomial, via the rational root theorem on the cleared-denominator form."""
    p = trim([Fraction(c) for c in p])
    if degree(p) < 1:
        return []
    from math import gcd, lcm
    den = lcm(*[c.denominator for c in p]) if len(p) > 1 else p[0].denominator
    ip = [int(c * den) for c in p]
    while ip and ip[0] == 0:
        ip = ip[1:]  # factor out x: root 0 handled below
    roots = []
    if p[0] == 0:
        roots.append(Fraction(0))
    if not ip:
        return roots
    a0, an = abs(ip[0]), abs(ip[-1])

    def divisors(n: int) -> list[int]:
        ds = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                ds += [d, n // d]
            d += 1
        return sorted(set(ds))

    for num in divisors(a0):
        for den2 in divisors(an):
            for s in (1, -1):
                cand = Fraction(s * num, den2)
                if evaluate(p, cand) == 0 and cand not in roots:
                    roots.append(cand)
    return roots


def to_exact(p: list) -> list[ExactScalar]:
    return [c if isinstance(c, ExactScalar) else as_scalar(Fraction(c)) for c in p]
