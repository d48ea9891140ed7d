"""Certified complex root enclosures for exact-coefficient polynomials.

Approximations come from a Durand-Kerner sweep in MPC floats; each one is
then certified by a Rouche disk test carried out in ball arithmetic:
writing T(w + d) = sum t_k d^k, the disk |d| <= rho contains exactly one
zero of T whenever

    |t_1| rho  >  |t_0| + sum_{k>=2} |t_k| rho^k,

(compare with the linear part t_1 d on the boundary).  Disks are shrunk to
the requested precision and checked pairwise disjoint, which pins exactly
one simple root per disk.  Multiplicities come from an exact squarefree
decomposition beforehand.
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2

from .balls import Ball, PrecisionExhausted
from .polyops import degree, squarefree_decomposition, to_exact, trim
from .scalars import ExactScalar

_mpc = gmpy2.mpc
_mpfr = gmpy2.mpfr


def _scalar_to_mpc(s: ExactScalar, prec: int):
    re = gmpy2.mpfr(gmpy2.mpq(s.re.numerator, s.re.denominator), prec)
    im = gmpy2.mpfr(gmpy2.mpq(s.im.numerator, s.im.denominator), prec)
    return _mpc(re, im, precision=prec)


def _durand_kerner(coeffs_mpc, prec: int, iters: int = 400):
    n = len(coeffs_mpc) - 1
    lead = coeffs_mpc[-1]
    mono = [c / lead for c in coeffs_mpc]
    bound = 1 + max((abs(c) for c in mono[:-1]), default=_mpfr(0))
    ctx = gmpy2.context(precision=prec)
    seed = _mpc("0.4+0.9j")
    zs = []
    w = _mpc(1)
    for _ in range(n):
        w = ctx.mul(w, seed)
        zs.append(ctx.mul(w, _mpc(bound)))

    def peval(z):
        acc = _mpc(0)
        for c in reversed(mono):
            acc = ctx.add(ctx.mul(acc, z), c)
        return acc

    for _ in range(iters):
        moved = _mpfr(0)
        for i in range(n):
            denom = _mpc(1)
            for j in range(n):
                if j != i:
                    denom = ctx.mul(denom, ctx.sub(zs[i], zs[j]))
            if gmpy2.is_zero(denom.real) and gmpy2.is_zero(denom.imag):
                zs[i] = ctx.add(zs[i], _mpc("1e-3+2e-3j"))
                continue
            delta = ctx.div(peval(zs[i]), denom)
            zs[i] = ctx.sub(zs[i], delta)
            moved = max(moved, abs(delta))
        if moved < gmpy2.exp2(_mpfr(-prec + 4)):
            break
    return zs


def _taylor_at(coeffs: list[Ball], w: Ball) -> list[Ball]:
    """Coefficients of T(w + d) in d, by repeated synthetic division."""
    work = list(coeffs)
    out = []
    for _ in range(len(coeffs)):
        quot = []
        carry = None
        for c in reversed(work):
            carry = c if carry is None else carry * w + c
            quot.append(carry)
        out.append(carry)           # remainder = value of current quotient at w
        work = list(reversed(quot[:-1]))
        if not work:
            break
    return out


def certify_simple_root(coeffs: list[ExactScalar], approx, prec: int) -> Ball | None:
    """Try to certify exactly one root of T in a disk around ``approx``.

    Returns the root ball, or None when the Rouche test fails here.
    """
    wb = Ball(_mpc(approx, precision=prec), _mpfr(0), prec)
    cb = [Ball.from_scalar(c, prec) for c in coeffs]
    ts = _taylor_at(cb, wb)
    if len(ts) < 2:
        return None
    t0u = ts[0].abs_upper()
    t1l = ts[1].abs_lower()
    if t1l <= 0:
        return None
    rho = 2 * t0u / t1l if t0u else Fraction(1, 2 ** (prec + 8))
    for _ in range(60):
        rhs = t0u
        rp = rho
        for k in range(2, len(ts)):
            rp *= rho
            rhs += ts[k].abs_upper() * rp
        if t1l * rho > rhs:
            return Ball(wb.mid, _mpfr(0), prec).widen(rho)
        rho *= 2
        if rho > 1 << 40:
            return None
    return None


def certified_roots(coeffs, precision: int = 128) -> list[tuple[Ball, int]]:
    """All complex roots of an exact-coefficient polynomial, as pairwise
    disjoint certified balls with exact multiplicities."""
    cs = to_exact(trim(list(coeffs)))
    if degree(cs) < 1:
        return []
    out: list[tuple[Ball, int]] = []
    for part, mult in squarefree_decomposition(cs):
        n = degree(part)
        prec = 2 * precision + 32
        for _attempt in range(6):
            approx = _durand_kerner([_scalar_to_mpc(c, prec) for c in part], prec)
            balls = []
            ok = True
            for a in approx:
                b = certify_simple_root(part, a, precision)
                if b is None:
                    ok = False
                    break
                balls.append(b)
            if ok and _pairwise_disjoint(balls):
                out.extend((b, mult) for b in balls)
                break
            prec *= 2
        else:
            raise PrecisionExhausted("root certification failed")
    return out


def _pairwise_disjoint(balls: list[Ball]) -> bool:
    for i in range(len(balls)):
        for j in range(i + 1, len(balls)):
            a1, b1 = balls[i]._mid_re_im()
            a2, b2 = balls[j]._mid_re_im()
            s = balls[i].rad_fraction() + balls[j].rad_fraction()
            if (a1 - a2) ** 2 + (b1 - b2) ** 2 <= s * s:
                return False
    return True
