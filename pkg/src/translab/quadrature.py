"""Certified integration of polynomial-times-cotangent integrands.

Everything here reduces to

    integral_a^b P(y) cot(pi y) dy        (0 <= a < b <= 1/2, P exact),

the kernel behind the principal-value transforms: PV integrals over
[-1/2, 1/2] are first folded by the substitution y -> -y, which cancels the
pole analytically, and [1/2, 1] pieces fold back with cot(pi(1-u)) = -cot(pi u).

The rule itself: y*cot(pi y) is analytic on |y| < 1 with the exact expansion

    y cot(pi y) = sum_k r_k pi^(2k-1) y^(2k),     r_0 = 1,
    (2k+1) r_k = -[k=1] - sum_{i+j=k, i,j>=1} r_i r_j,

whose coefficients satisfy |r_k pi^(2k-1)| = 2 zeta(2k)/pi < 21/20.  The
vanishing part of P integrates exactly against the truncated series; the
truncation error is a geometric tail, and the series length doubles until the
tail meets the tolerance (cap -> PrecisionExhausted).  A nonzero P(0) only
ever occurs on intervals with a > 0 and contributes the elementary
(P(0)/pi) log(sin(pi b)/sin(pi a)).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .balls import Ball, PrecisionExhausted
from .closedform import SingularArgumentError

_COEFF_BOUND = Fraction(21, 20)
_M_CAP = 1 << 14


@lru_cache(maxsize=None)
def _cot_series(M: int) -> tuple[Fraction, ...]:
    """r_0..r_M with pi*y*cot(pi*y) = sum r_k (pi y)^(2k)."""
    r = [Fraction(1)]
    for k in range(1, M + 1):
        s = Fraction(0)
        if k == 1:
            s -= 1
        for i in range(1, k):
            s -= r[i] * r[k - i]
        r.append(s / (2 * k + 1))
    return tuple(r)


def cot_series_rationals(M: int) -> tuple[Fraction, ...]:
    return _cot_series(M)


def _poly_abs_norm(coeffs: list[Fraction], s: Fraction) -> Fraction:
    """sum |c_j| s^j >= max |C(y)| on [0, s]."""
    acc, p = Fraction(0), Fraction(1)
    for c in coeffs:
        acc += abs(c) * p
        p *= s
    return acc


def _series_piece(cvanish: list[Fraction], s: Fraction, M: int) -> list[Fraction]:
    """I_k(s) = integral_0^s (sum_j c_j y^j) y^(2k) dy for k = 0..M, exactly."""
    out = []
    powers = [s ** (j + 1) for j in range(len(cvanish))]
    s2 = s * s
    base = Fraction(1)
    for k in range(M + 1):
        acc = Fraction(0)
        for j, c in enumerate(cvanish):
            if c:
                acc += c * powers[j] * base / (j + 2 * k + 1)
        out.append(acc)
        base *= s2
    return out


def rule_length(P: list[Fraction], b: Fraction, tol: Fraction) -> int:
    """Number of certified series terms integrate_poly_cot will use."""
    cvanish = [Fraction(c) for c in P[1:]]
    cnorm = _poly_abs_norm(cvanish, b)
    M = 32
    while True:
        tail = 2 * _COEFF_BOUND * cnorm * b ** (2 * M + 3) / ((1 - b * b) * (2 * M + 3))
        if tail <= tol:
            return M
        M *= 2
        if M > _M_CAP:
            raise PrecisionExhausted("cot-series quadrature tail above tolerance at cap")


def integrate_poly_cot(P: list[Fraction], a: Fraction, b: Fraction,
                       precision: int, tol: Fraction) -> Ball:
    """Certified enclosure of integral_a^b P(y) cot(pi y) dy.

    Requires 0 <= a < b <= 1/2; if a == 0 then P(0) must vanish (the zero of
    P cancels the cot pole, keeping the integrand continuous).
    """
    if not (0 <= a < b <= Fraction(1, 2)):
        raise ValueError("integration interval must satisfy 0 <= a < b <= 1/2")
    P = [Fraction(c) for c in P]
    while P and not P[-1]:
        P.pop()
    if not P:
        return Ball.exact_int(0, precision)
    p0 = P[0]
    if a == 0 and p0 != 0:
        raise SingularArgumentError("cot pole at 0 is not cancelled: P(0) != 0")
    cvanish = P[1:]  # (P - P(0)) / y

    prec = precision + 32
    cnorm = _poly_abs_norm(cvanish, b)
    M = 32
    while True:
        # one factor covers each of the [0,b] and [0,a] series pieces
        tail = 2 * _COEFF_BOUND * cnorm * b ** (2 * M + 3) / ((1 - b * b) * (2 * M + 3))
        if tail <= tol:
            break
        M *= 2
        if M > _M_CAP:
            raise PrecisionExhausted(
                f"cot-series quadrature tail {float(tail):.3g} > tol at cap")

    r = _cot_series(M)
    Ib = _series_piece(cvanish, b, M)
    Ia = _series_piece(cvanish, a, M) if a else [Fraction(0)] * (M + 1)
    # sum_k r_k (I_k(b) - I_k(a)) pi^(2k-1)  via Horner in pi^2
    pi = Ball.pi(prec)
    pi2 = pi * pi
    acc = Ball.exact_int(0, prec)
    for k in range(M, -1, -1):
        acc = acc * pi2 + Ball.from_fraction(r[k] * (Ib[k] - Ia[k]), prec)
    main = acc / pi
    result = main.widen(tail)

    if p0:
        sa = (Ball.pi(prec) * Ball.from_fraction(a, prec)).sin()
        sb = (Ball.pi(prec) * Ball.from_fraction(b, prec)).sin()
        result = result + (sb.log() - sa.log()) * Ball.from_fraction(p0, prec) / pi
    return result.round_to(precision)


def poly_affine(P: list[Fraction], a0: Fraction, a1: Fraction) -> list[Fraction]:
    """Coefficients of P(a0 + a1*y) as a polynomial in y (Horner)."""
    out: list[Fraction] = [Fraction(0)] * max(len(P), 1)
    for coef in reversed(P):
        new = [Fraction(0)] * len(out)
        for j, oj in enumerate(out):
            if oj:
                new[j] += a0 * oj
                if j + 1 < len(new):
                    new[j + 1] += a1 * oj
        new[0] += Fraction(coef)
        out = new
    return out


def poly_compose_1_minus(P: list[Fraction]) -> list[Fraction]:
    """Coefficients of P(1 - u), for folding [1/2, 1] pieces back."""
    return poly_affine(P, Fraction(1), Fraction(-1))
