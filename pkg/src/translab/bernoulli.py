"""Bernoulli numbers and polynomials, their periodic and conjugate variants,
zeta(2n) in closed form and the zeta(2n+1) machinery.

Conventions: B_n^- comes from t/(e^t - 1) (B_1^- = -1/2), B_n^+ from
t e^t/(e^t - 1); B_n(x) is the monic Bernoulli polynomial.  The conjugate
objects (periodic Hilbert transforms of the Bernoulli functions) are returned
as certified balls produced by the cot-kernel quadrature.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .balls import Ball
from .closedform import CF, CFPow, CFProd, CFQuot, CFRat, PI
from .combinatorics import binomial
from .quadrature import integrate_poly_cot, poly_affine
from .scalars import ExactScalar

_bminus: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
_bminus_lock = threading.Lock()


def bernoulli_minus(n: int) -> Fraction:
    """B_n^- via the binomial recurrence sum_{k<=n} C(n+1,k) B_k^- = 0."""
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if len(_bminus) <= n:
        with _bminus_lock:
            while len(_bminus) <= n:
                m = len(_bminus)
                if m % 2 == 1 and m >= 3:
                    _bminus.append(Fraction(0))
                    continue
                s = Fraction(0)
                for k in range(m):
                    bk = _bminus[k]
                    if bk:
                        s += binomial(m + 1, k) * bk
                _bminus.append(-s / (m + 1))
    return _bminus[n]


def bernoulli_number(n: int, sign: str = "minus") -> Fraction:
    if sign == "minus":
        return bernoulli_minus(n)
    if sign == "plus":
        b = bernoulli_minus(n)
        return -b if n % 2 else b
    raise ValueError("sign must be 'plus' or 'minus'")


@dataclass(frozen=True)
class BernoulliPoly:
    """B_n(x) with exact ascending coefficients (monic, degree n)."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, x):
        if isinstance(x, Ball):
            acc = Ball.exact_int(0, x.prec)
            for c in reversed(self.coeffs):
                acc = acc * x + Ball.from_fraction(c, x.prec)
            return acc
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "BernoulliPoly":
        d = tuple(j * c for j, c in enumerate(self.coeffs) if j)
        return BernoulliPoly(max(self.n - 1, 0), d or (Fraction(0),))

    def integral01(self) -> Fraction:
        return sum(c / (j + 1) for j, c in enumerate(self.coeffs))


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> BernoulliPoly:
    """B_n(x) = sum_k C(n,k) B_{n-k}^- x^k."""
    coeffs = tuple(binomial(n, k) * bernoulli_minus(n - k) for k in range(n + 1))
    return BernoulliPoly(n, coeffs)


def bernoulli_fn(n: int, x) -> "Fraction | Ball":
    """The 1-periodic Bernoulli function B_n(x - [x]).

    Rational x reduces exactly; a Ball argument is reduced in ball
    arithmetic (its enclosure may need to cover the wrap at an integer).
    """
    p = bernoulli_poly(n)
    if isinstance(x, Ball):
        lo, hi = x.lower(), x.upper()
        k = lo.numerator // lo.denominator
        y = x - k
        ylo, yhi = lo - k, hi - k
        if yhi <= 1:
            return p(y)
        low_piece = p(Ball.from_interval(ylo, Fraction(1), x.prec))
        high_piece = p(Ball.from_interval(Fraction(0), yhi - 1, x.prec))
        return Ball.hull(low_piece, high_piece)
    x = Fraction(x)
    return p(x - (x.numerator // x.denominator))


# ----------------------------------------------------------------------
# Fourier coefficients and zeta(2n)
# ----------------------------------------------------------------------

def bernoulli_fourier(n: int, k: int) -> CF:
    """Fourier coefficient of B_n on [0,1]: -n!/(2 pi i k)^n, and 0 at k = 0."""
    if n < 1:
        raise ValueError("need n >= 1")
    if k == 0:
        return CFRat(0)
    fact = 1
    for j in range(2, n + 1):
        fact *= j
    denom_scalar = (ExactScalar(0, 1) * (2 * k)) ** n  # (2ik)^n
    coeff = ExactScalar(-fact) / denom_scalar
    pi_pow: CF = PI if n == 1 else CFPow(PI, n)
    return CFQuot(CFRat(coeff), pi_pow)


def zeta_even_rational(n: int) -> Fraction:
    """The rational r with zeta(2n) = r * pi^(2n)."""
    if n < 1:
        raise ValueError("need n >= 1")
    sign = 1 if (n - 1) % 2 == 0 else -1
    fact = 1
    for j in range(2, 2 * n + 1):
        fact *= j
    return Fraction(sign * 2 ** (2 * n - 1), fact) * bernoulli_minus(2 * n)


def zeta_even_cf(n: int) -> CF:
    r = zeta_even_rational(n)
    return CFProd([CFRat(r), CFPow(PI, 2 * n)])


def zeta_even_ball(n: int, precision: int) -> Ball:
    return Ball.pi(precision).pow_int(2 * n) * Ball.from_fraction(
        zeta_even_rational(n), precision)


# ----------------------------------------------------------------------
# reference enclosures for zeta values
# ----------------------------------------------------------------------

@lru_cache(maxsize=64)
def zeta_truncated_enclosure(s: int, N: int) -> tuple[Fraction, Fraction]:
    """Exact bounds for zeta(s) from sum_{k<=N} k^-s plus integral tail bounds.

    Scaled-integer summation: the partial sum is bracketed to within N units
    in the last of `bits` binary places, the tail by
    integral_{N+1}^inf <= tail <= integral_N^inf of x^-s.
    """
    if s < 2 or N < 10:
        raise ValueError("need s >= 2, N >= 10")
    bits = 128
    scale = 1 << bits
    acc = 0
    for k in range(1, N + 1):
        t = scale // k**s
        if t == 0:
            break
        acc += t
    lo_sum = Fraction(acc, scale)
    hi_sum = Fraction(acc + N, scale)
    tail_lo = Fraction(1, (s - 1) * (N + 1) ** (s - 1))
    tail_hi = Fraction(1, (s - 1) * N ** (s - 1))
    return lo_sum + tail_lo, hi_sum + tail_hi


def zeta3_ball(precision: int) -> Ball:
    """zeta(3) = (5/2) sum (-1)^(n-1) / (n^3 C(2n,n)): alternating with
    strictly decreasing terms, so the first omitted term bounds the tail."""
    N = max(32, (precision + 16) // 2 + 8)
    s = Fraction(0)
    for n in range(1, N + 1):
        t = Fraction(1, n**3 * binomial(2 * n, n))
        s += t if n % 2 else -t
    bound = Fraction(1, (N + 1) ** 3 * binomial(2 * N + 2, N + 1))
    lo, hi = (s - bound, s + bound)
    return Ball.from_interval(Fraction(5, 2) * lo, Fraction(5, 2) * hi, precision)


def zeta_ref_ball(s: int, precision: int) -> Ball:
    """Sharp certified enclosure of zeta(s) for even s or s = 3."""
    if s % 2 == 0 and s >= 2:
        return zeta_even_ball(s // 2, precision)
    if s == 3:
        return zeta3_ball(precision)
    lo, hi = zeta_truncated_enclosure(s, 10**6)
    return Ball.from_interval(lo, hi, precision)


# ----------------------------------------------------------------------
# conjugate Bernoulli numbers / functions, Omega
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ConjugateBernoulli:
    """A certified enclosure of a conjugate Bernoulli number, carrying the
    length of the quadrature rule whose error bound sits in the radius."""

    n: int
    value: Ball
    quadrature_nodes: int


def _tol(precision: int) -> Fraction:
    return Fraction(1, 2**precision)


def conj_bernoulli_record(n: int, precision: int = 128) -> ConjugateBernoulli:
    from .quadrature import rule_length
    value = conj_bernoulli(n, precision)
    nodes = rule_length(list(bernoulli_poly(n).coeffs), Fraction(1, 2),
                        _tol(precision + 8))
    return ConjugateBernoulli(n, value, nodes)


@lru_cache(maxsize=None)
def conj_bernoulli(n: int, precision: int = 128) -> Ball:
    """B~_n for odd n >= 3, as -integral_0^1 B_n(y) cot(pi y) dy.

    The integrand extends continuously to [0, 1] (B_n kills both cot poles),
    and for odd n it is symmetric about 1/2, so the integral folds to
    -2 integral_0^{1/2}.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("conjugate Bernoulli numbers need odd n >= 3")
    P = list(bernoulli_poly(n).coeffs)
    half = Fraction(1, 2)
    v = integrate_poly_cot(P, Fraction(0), half, precision + 16, _tol(precision + 8))
    return (v * (-2)).round_to(precision)


def conj_bernoulli_fn(n: int, x: Fraction, precision: int = 128) -> Ball:
    """B~_n(x) = PV integral_{-1/2}^{1/2} B_n((x-y) mod 1) cot(pi y) dy for
    rational x in (0,1), evaluated exactly as printed (the mod-1 shift is
    done piecewise so every piece is polynomial * cot)."""
    x = Fraction(x)
    if not (0 < x < 1):
        raise ValueError("need 0 < x < 1")
    if n < 1:
        raise ValueError("need n >= 1")
    prec = precision + 16
    tol = _tol(precision + 8)
    half = Fraction(1, 2)
    pn = list(bernoulli_poly(n).coeffs)

    def piecewise(shift_sign: int) -> list[tuple[Fraction, Fraction, list[Fraction]]]:
        # integrand factor B_n((x + shift_sign*y) mod 1) on y in (0, 1/2):
        # the argument crosses an integer at most once; split there.
        pieces = []
        if shift_sign < 0:
            cross = x if x < half else None
            segs = [(Fraction(0), cross or half, 0)]
            if cross is not None:
                segs.append((cross, half, 1))  # x - y < 0: add 1
        else:
            cross = 1 - x if 1 - x < half else None
            segs = [(Fraction(0), cross or half, 0)]
            if cross is not None:
                segs.append((cross, half, -1))  # x + y > 1: subtract 1
        for (a, b, wrap) in segs:
            if a == b:
                continue
            poly = poly_affine(pn, x + wrap, Fraction(shift_sign))
            pieces.append((a, b, poly))
        return pieces

    total = Ball.exact_int(0, prec)
    minus = piecewise(-1)
    plus = piecewise(+1)
    # PV pairing: integral_0^{1/2} [B(x-y) - B(x+y)] cot(pi y) dy
    breakpoints = sorted({a for (a, _, _) in minus + plus} |
                         {b for (_, b, _) in minus + plus})
    for lo, hi in zip(breakpoints, breakpoints[1:]):
        pm = next(p for (a, b, p) in minus if a <= lo and hi <= b)
        pp = next(p for (a, b, p) in plus if a <= lo and hi <= b)
        diff = [cm - cp for cm, cp in
                zip(pm + [Fraction(0)] * len(pp), pp + [Fraction(0)] * len(pm))]
        total = total + integrate_poly_cot(diff, lo, hi, prec, tol)
    return total.round_to(precision)


@lru_cache(maxsize=None)
def omega_coeff(j: int, precision: int = 128) -> Ball:
    """Omega_j = PV integral_{-1/2}^{1/2} y^j cot(pi y) dy.

    Even j vanish exactly (odd integrand after the PV pairing); odd j fold to
    2 integral_0^{1/2} y^j cot(pi y) dy.
    """
    if j < 0:
        raise ValueError("need j >= 0")
    if j % 2 == 0:
        return Ball.exact_int(0, precision)
    P = [Fraction(0)] * j + [Fraction(1)]
    v = integrate_poly_cot(P, Fraction(0), Fraction(1, 2), precision + 16,
                           _tol(precision + 8))
    return (v * 2).round_to(precision)


def omega_fn(x: Fraction, precision: int = 128) -> Ball:
    """Omega(x) = PV integral e^{xy} cot(pi y) dy = 2 integral_0^{1/2}
    sinh(xy) cot(pi y) dy, via a truncated sinh polynomial with certified tail
    (|cot(pi y)| <= 1/(pi y) on (0, 1/2])."""
    x = Fraction(x)
    if x == 0:
        return Ball.exact_int(0, precision)
    prec = precision + 16
    tol = _tol(precision + 8)
    half = Fraction(1, 2)
    M = 8
    while True:
        # remainder of sinh(xy) after the y^(2M+1) term, times 1/(pi y), integrated
        top = abs(x) ** (2 * M + 3) * half ** (2 * M + 3)
        fact = 1
        for i in range(2, 2 * M + 4):
            fact *= i
        # cosh(|x|/2) <= e < 3 for |x| <= 2; general bound via exp upper
        coshb = Ball.from_fraction(abs(x) * half, 64).exp().upper() + 1
        err = 2 * top * coshb / (fact * 3 * (2 * M + 3))  # 1/pi < 1/3
        if err <= tol / 2:
            break
        M *= 2
        if M > 4096:
            raise ValueError("omega_fn: sinh truncation did not converge")
    coeffs = [Fraction(0)] * (2 * M + 2)
    fact = 1
    for m in range(M + 1):
        if m:
            fact *= (2 * m) * (2 * m + 1)
        coeffs[2 * m + 1] = x ** (2 * m + 1) / fact
    v = integrate_poly_cot(coeffs, Fraction(0), half, prec, tol / 2)
    return (v * 2).widen(Fraction(err)).round_to(precision)


def zeta_odd_via_conj(n: int, precision: int = 128) -> Ball:
    """zeta(2n+1) = (-1)^n 2^(2n) pi^(2n+1) B~_{2n+1} / (2n+1)!."""
    if n < 1:
        raise ValueError("need n >= 1")
    bt = conj_bernoulli(2 * n + 1, precision + 32)
    fact = 1
    for j in range(2, 2 * n + 2):
        fact *= j
    sign = 1 if n % 2 == 0 else -1
    coef = Fraction(sign * 2 ** (2 * n), fact)
    v = Ball.pi(precision + 32).pow_int(2 * n + 1) * bt * Ball.from_fraction(
        coef, precision + 32)
    return v.round_to(precision)
