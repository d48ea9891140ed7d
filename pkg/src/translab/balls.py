"""Mid-radius ball arithmetic over MPFR/MPC.

A :class:`Ball` encloses one real or complex number: every point of every
input ball maps, under the exact mathematical operation, into the output
ball.  Midpoints are computed at the working precision with round-to-nearest
and the radius picks up one ulp of slack per midpoint operation, plus the
exactly-propagated input radii (radius arithmetic is rounded up throughout).

Midpoints are dyadic, so containment and intersection queries can be (and
are) decided exactly via ``fractions.Fraction``.
"""

from __future__ import annotations

import gmpy2
from fractions import Fraction
from typing import Union

from .scalars import ExactScalar

__all__ = ["Ball", "BallDomainError", "PrecisionExhausted"]


class BallDomainError(ValueError):
    """Operation left its domain (log of nonpositive ball, division by a
    ball containing zero, ...)."""


class PrecisionExhausted(RuntimeError):
    """A certified routine could not meet its tolerance at its node/precision cap."""


_mpfr = gmpy2.mpfr
_mpc = gmpy2.mpc

# radius arithmetic: 64 bits, always rounded towards +inf
_RUP = gmpy2.context(precision=64, round=gmpy2.RoundUp)
_RDOWN = gmpy2.context(precision=64, round=gmpy2.RoundDown)

_CTXS: dict[int, gmpy2.context] = {}


def _ctx(prec: int) -> gmpy2.context:
    c = _CTXS.get(prec)
    if c is None:
        c = gmpy2.context(precision=prec)
        _CTXS[prec] = c
    return c


def _max_exp(m) -> int | None:
    """Max exponent of the nonzero components, or None for exact zero."""
    if isinstance(m, _mpc):
        es = []
        if not gmpy2.is_zero(m.real):
            es.append(gmpy2.get_exp(m.real))
        if not gmpy2.is_zero(m.imag):
            es.append(gmpy2.get_exp(m.imag))
        return max(es) if es else None
    return gmpy2.get_exp(m) if not gmpy2.is_zero(m) else None


_MPFR_ZERO = _mpfr(0)


def _ulp(m, prec: int):
    """An upper bound for the rounding error of the midpoint operation that
    produced ``m`` at precision ``prec`` (1 ulp real, 2 ulp complex).

    A correctly-rounded zero is exact (round-to-nearest cannot flush a
    nonzero dyadic to zero within MPFR's exponent range), so no slack then.
    """
    e = _max_exp(m)
    if e is None:
        return _MPFR_ZERO
    e -= prec
    if isinstance(m, _mpc):
        e += 1
    return gmpy2.exp2(_mpfr(e))


def _abs_up(m):
    return _RUP.abs(m)


def _abs_down(m):
    return _RDOWN.abs(m)


def _fr(x) -> Fraction:
    n, d = x.as_integer_ratio()
    return Fraction(int(n), int(d))


def _fr_up(q: Fraction):
    """A 64-bit dyadic upper bound for the exact rational q."""
    m = _mpfr(gmpy2.mpq(q.numerator, q.denominator), 64)
    if _fr(m) >= q:
        return m
    return _RUP.add(m, gmpy2.exp2(_mpfr(_max_exp_f(m) - 63)))


def _max_exp_f(m) -> int:
    return gmpy2.get_exp(m) if not gmpy2.is_zero(m) else 0


Number = Union[int, Fraction, ExactScalar, "Ball"]


class Ball:
    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid, rad, prec: int):
        self.mid = mid
        self.rad = rad
        self.prec = prec

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def exact_int(cls, n: int, prec: int) -> "Ball":
        m = _mpfr(n, prec)
        if int(m) == n and gmpy2.is_finite(m):
            return cls(m, _mpfr(0), prec)
        return cls(m, _ulp(m, prec), prec)

    @classmethod
    def from_fraction(cls, q: Fraction, prec: int) -> "Ball":
        m = _mpfr(gmpy2.mpq(q.numerator, q.denominator), prec)
        if _fr(m) == q:
            return cls(m, _mpfr(0), prec)
        return cls(m, _ulp(m, prec), prec)

    @classmethod
    def from_ratio(cls, num: int, den: int, prec: int) -> "Ball":
        """Ball around num/den without Fraction normalization (huge operands
        go through GMP; the radius is a conservative one-ulp)."""
        m = _mpfr(gmpy2.mpq(num, den), prec)
        return cls(m, _ulp(m, prec), prec)

    @classmethod
    def from_scalar(cls, s, prec: int) -> "Ball":
        if isinstance(s, Ball):
            return s.round_to(prec)
        if isinstance(s, int):
            return cls.exact_int(s, prec)
        if isinstance(s, Fraction):
            return cls.from_fraction(s, prec)
        if isinstance(s, ExactScalar):
            if s.is_real:
                return cls.from_fraction(s.re, prec)
            re = cls.from_fraction(s.re, prec)
            im = cls.from_fraction(s.im, prec)
            return cls(_mpc(re.mid, im.mid, precision=prec),
                       _RUP.add(re.rad, im.rad), prec)
        raise TypeError(f"cannot make Ball from {type(s)}")

    @classmethod
    def from_interval(cls, lo: Fraction, hi: Fraction, prec: int) -> "Ball":
        """Smallest representable ball containing the exact interval [lo, hi]."""
        if lo > hi:
            raise ValueError("empty interval")
        mid = cls.from_fraction((lo + hi) / 2, prec)
        half = _fr_up((hi - lo) / 2)
        return cls(mid.mid, _RUP.add(mid.rad, half), prec)

    @classmethod
    def pi(cls, prec: int) -> "Ball":
        c = _ctx(prec)
        m = c.const_pi()
        return cls(m, _ulp(m, prec), prec)

    @classmethod
    def complex_from(cls, re: "Ball", im: "Ball") -> "Ball":
        prec = min(re.prec, im.prec)
        m = _mpc(re.real_mid(), im.real_mid(), precision=prec)
        # the constructor may round components that carried more precision
        r = _RUP.add(_RUP.add(re.rad, im.rad), _ulp(m, prec))
        return cls(m, r, prec)

    def round_to(self, prec: int) -> "Ball":
        if prec == self.prec:
            return self
        c = _ctx(prec)
        m = c.add(self.mid, _mpfr(0)) if not isinstance(self.mid, _mpc) else c.add(self.mid, _mpc(0))
        return Ball(m, _RUP.add(self.rad, _ulp(m, prec)), prec)

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    @property
    def is_complex(self) -> bool:
        return isinstance(self.mid, _mpc)

    def real_mid(self):
        return self.mid.real if self.is_complex else self.mid

    def real(self) -> "Ball":
        """Enclosure of the real part."""
        if not self.is_complex:
            return self
        return Ball(self.mid.real, self.rad, self.prec)

    def imag(self) -> "Ball":
        if not self.is_complex:
            return Ball(_mpfr(0), self.rad, self.prec)
        return Ball(self.mid.imag, self.rad, self.prec)

    def mid_fraction(self) -> Fraction:
        if self.is_complex:
            raise BallDomainError("complex ball has no real midpoint")
        return _fr(self.mid)

    def rad_fraction(self) -> Fraction:
        return _fr(self.rad)

    def lower(self) -> Fraction:
        """Exact lower endpoint (real balls)."""
        if self.is_complex:
            raise BallDomainError("lower() on complex ball")
        return _fr(self.mid) - _fr(self.rad)

    def upper(self) -> Fraction:
        if self.is_complex:
            raise BallDomainError("upper() on complex ball")
        return _fr(self.mid) + _fr(self.rad)

    def _mid_re_im(self) -> tuple[Fraction, Fraction]:
        if self.is_complex:
            return _fr(self.mid.real), _fr(self.mid.imag)
        return _fr(self.mid), Fraction(0)

    def contains_zero(self) -> bool:
        a, b = self._mid_re_im()
        return a * a + b * b <= _fr(self.rad) ** 2

    def is_nonzero(self) -> bool:
        return not self.contains_zero()

    def contains(self, other: "Ball") -> bool:
        """Exact test: does self contain other (as sets)?"""
        a1, b1 = self._mid_re_im()
        a2, b2 = other._mid_re_im()
        gap = _fr(self.rad) - _fr(other.rad)
        if gap < 0:
            return False
        return (a1 - a2) ** 2 + (b1 - b2) ** 2 <= gap * gap

    def contains_value(self, v) -> bool:
        if isinstance(v, ExactScalar):
            re, im = v.re, v.im
        else:
            re, im = Fraction(v), Fraction(0)
        a, b = self._mid_re_im()
        return (a - re) ** 2 + (b - im) ** 2 <= _fr(self.rad) ** 2

    def intersects(self, other: "Ball") -> bool:
        a1, b1 = self._mid_re_im()
        a2, b2 = other._mid_re_im()
        s = _fr(self.rad) + _fr(other.rad)
        return (a1 - a2) ** 2 + (b1 - b2) ** 2 <= s * s

    def compare(self, other: "Ball"):
        """Three-valued comparison of real balls: -1, +1 or None (undecided)."""
        if self.upper() < other.lower():
            return -1
        if self.lower() > other.upper():
            return 1
        return None

    def certainly_lt(self, other) -> bool:
        other = other if isinstance(other, Ball) else Ball.from_scalar(other, self.prec)
        return self.compare(other) == -1

    def certainly_gt(self, other) -> bool:
        other = other if isinstance(other, Ball) else Ball.from_scalar(other, self.prec)
        return self.compare(other) == 1

    def certainly_le(self, other) -> bool:
        other = other if isinstance(other, Ball) else Ball.from_scalar(other, self.prec)
        return self.upper() <= other.lower()

    def is_positive(self) -> bool:
        return not self.is_complex and self.lower() > 0

    def is_negative(self) -> bool:
        return not self.is_complex and self.upper() < 0

    def __repr__(self):
        return f"Ball({self.mid}, rad={self.rad!s}, prec={self.prec})"

    def __str__(self):
        return f"[{self.mid} +/- {self.rad}]"

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other) -> "Ball":
        if isinstance(other, Ball):
            return other
        return Ball.from_scalar(other, self.prec)

    def __add__(self, other) -> "Ball":
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        m = _ctx(prec).add(self.mid, o.mid)
        r = _RUP.add(_RUP.add(self.rad, o.rad), _ulp(m, prec))
        return Ball(m, r, prec)

    __radd__ = __add__

    def __neg__(self) -> "Ball":
        # n.b. bare "-mid" would round through the default 53-bit context
        return Ball(_ctx(self.prec).minus(self.mid), self.rad, self.prec)

    def __sub__(self, other) -> "Ball":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Ball":
        return (-self) + other

    def __mul__(self, other) -> "Ball":
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        m = _ctx(prec).mul(self.mid, o.mid)
        # |xy - m1 m2| <= |m1| r2 + |m2| r1 + r1 r2
        r = _RUP.add(_RUP.mul(_abs_up(self.mid), o.rad),
                     _RUP.add(_RUP.mul(_abs_up(o.mid), self.rad),
                              _RUP.mul(self.rad, o.rad)))
        return Ball(m, _RUP.add(r, _ulp(m, prec)), prec)

    __rmul__ = __mul__

    def inverse(self) -> "Ball":
        am = _abs_down(self.mid)
        if not am > self.rad:
            raise BallDomainError("inverse of ball containing zero")
        prec = self.prec
        one = _mpfr(1) if not self.is_complex else _mpc(1)
        m = _ctx(prec).div(one, self.mid)
        # |1/(m+d) - 1/m| <= r / (|m| (|m| - r))
        denom = _RDOWN.mul(am, _RDOWN.sub(am, self.rad))
        r = _RUP.div(self.rad, denom)
        return Ball(m, _RUP.add(r, _ulp(m, prec)), prec)

    def __truediv__(self, other) -> "Ball":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "Ball":
        return self._coerce(other) * self.inverse()

    def __abs__(self) -> "Ball":
        """Ball of |x| (real output; valid for real and complex input)."""
        m = _ctx(self.prec).abs(self.mid)
        return Ball(m, _RUP.add(self.rad, _ulp(m, self.prec)), self.prec)

    def abs_upper(self) -> Fraction:
        """A dyadic upper bound for sup |x| over the ball."""
        return _fr(_RUP.add(_abs_up(self.mid), self.rad))

    def abs_lower(self) -> Fraction:
        """A dyadic lower bound for inf |x| over the ball (0 if it contains 0)."""
        lo = _RDOWN.sub(_abs_down(self.mid), self.rad)
        return max(Fraction(0), _fr(lo))

    def pow_int(self, n: int) -> "Ball":
        if n < 0:
            return self.pow_int(-n).inverse()
        out = Ball.exact_int(1, self.prec)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __pow__(self, n: int) -> "Ball":
        if not isinstance(n, int):
            return NotImplemented
        return self.pow_int(n)

    def sqrt(self) -> "Ball":
        if self.is_complex:
            raise BallDomainError("sqrt of complex ball not supported")
        lo = _RDOWN.sub(self.mid, self.rad)
        if not lo > 0:
            raise BallDomainError("sqrt of ball not certainly positive")
        prec = self.prec
        m = _ctx(prec).sqrt(self.mid)
        # slope bound 1/(2 sqrt(lo))
        r = _RUP.div(self.rad, _RDOWN.mul(_mpfr(2), _RDOWN.sqrt(lo)))
        return Ball(m, _RUP.add(r, _ulp(m, prec)), prec)

    def exp(self) -> "Ball":
        prec = self.prec
        m = _ctx(prec).exp(self.mid)
        # |e^z - e^m| <= |e^m| (e^r - 1)
        grow = _RUP.expm1(self.rad)
        r = _RUP.mul(_abs_up(m), grow)
        # cover the rounding of m itself: |true e^m| <= |m_rounded| + ulp slack
        r = _RUP.add(r, _RUP.mul(_ulp(m, prec), _RUP.add(_mpfr(2), grow)))
        return Ball(m, r, prec)

    def log(self) -> "Ball":
        if self.is_complex:
            raise BallDomainError("log of complex ball not supported")
        lo = _RDOWN.sub(self.mid, self.rad)
        if not lo > 0:
            raise BallDomainError("log of ball not certainly positive")
        prec = self.prec
        m = _ctx(prec).log(self.mid)
        r = _RUP.div(self.rad, lo)
        return Ball(m, _RUP.add(r, _ulp(m, prec)), prec)

    def _lipschitz_trig_rad(self, m):
        """Radius for sin/cos: slope <= 1 on R, <= cosh(|Im|+r) <= e^{|Im|+r} on C."""
        if not self.is_complex:
            return _RUP.add(self.rad, _ulp(m, self.prec))
        imabs = _RUP.abs(self.mid.imag)
        slope = _RUP.exp(_RUP.add(imabs, self.rad))
        return _RUP.add(_RUP.mul(self.rad, slope), _ulp(m, self.prec))

    def sin(self) -> "Ball":
        m = _ctx(self.prec).sin(self.mid)
        return Ball(m, self._lipschitz_trig_rad(m), self.prec)

    def cos(self) -> "Ball":
        m = _ctx(self.prec).cos(self.mid)
        return Ball(m, self._lipschitz_trig_rad(m), self.prec)

    def sinh(self) -> "Ball":
        if self.is_complex:
            # sinh z = -i sin(iz); slope bound cosh(|Re|+r) <= e^{|z|+r} works too
            m = _ctx(self.prec).sinh(self.mid)
            slope = _RUP.exp(_RUP.add(_abs_up(self.mid), self.rad))
            return Ball(m, _RUP.add(_RUP.mul(self.rad, slope), _ulp(m, self.prec)), self.prec)
        m = _ctx(self.prec).sinh(self.mid)
        slope = _RUP.cosh(_RUP.add(_abs_up(self.mid), self.rad))
        return Ball(m, _RUP.add(_RUP.mul(self.rad, slope), _ulp(m, self.prec)), self.prec)

    def cosh(self) -> "Ball":
        m = _ctx(self.prec).cosh(self.mid)
        slope = _RUP.cosh(_RUP.add(_abs_up(self.mid), self.rad))
        return Ball(m, _RUP.add(_RUP.mul(self.rad, slope), _ulp(m, self.prec)), self.prec)

    def cot(self) -> "Ball":
        """cot of a ball, via cos/sin after reduction modulo an enclosure of pi."""
        x = self
        re_mid = x.mid.real if x.is_complex else x.mid
        k = int(gmpy2.rint(_RDOWN.div(re_mid, _RDOWN.const_pi())))
        if k:
            x = x - Ball.pi(self.prec) * k
        s = x.sin()
        if s.contains_zero():
            raise BallDomainError("cot evaluated across a pole (sin ball contains 0)")
        return x.cos() / s

    def coth(self) -> "Ball":
        s = self.sinh()
        if s.contains_zero():
            raise BallDomainError("coth evaluated across its pole")
        return self.cosh() / s

    def arg(self) -> "Ball":
        """Principal argument of a complex ball that excludes zero and stays
        clear of the branch cut (the negative real axis).

        Requires rad < |mid| / 2 so that asin(r/|m|) <= 1.05 r/|m|; balls
        touching the cut are rejected because the principal value jumps 2 pi
        there and no small radius could cover it.
        """
        a, b = self._mid_re_im()
        am = _abs_down(self.mid)
        if not _RDOWN.mul(am, _mpfr("0.5")) > self.rad:
            raise BallDomainError("arg() needs rad < |mid|/2")
        if a <= 0 and abs(b) <= _fr(self.rad):
            raise BallDomainError("arg() ball crosses the branch cut")
        re = self.mid.real if self.is_complex else self.mid
        im = self.mid.imag if self.is_complex else _mpfr(0)
        m = _ctx(self.prec).atan2(im, re)
        r = _RUP.mul(_mpfr("1.05"), _RUP.div(self.rad, _RDOWN.sub(am, self.rad)))
        return Ball(m, _RUP.add(r, _ulp(m, self.prec)), self.prec)

    @staticmethod
    def hull(*balls: "Ball") -> "Ball":
        """A ball containing all the given balls (real or complex)."""
        bs = list(balls)
        prec = min(b.prec for b in bs)
        if any(b.is_complex for b in bs):
            res = bs[0]
            for b in bs[1:]:
                a1, b1 = res._mid_re_im()
                a2, b2 = b._mid_re_im()
                d = _RUP.sqrt(_fr_up((a1 - a2) ** 2 + (b1 - b2) ** 2))
                need = _RUP.add(d, b.rad)
                if need > res.rad:
                    res = Ball(res.mid, need, prec)
            return res
        lo = min(b.lower() for b in bs)
        hi = max(b.upper() for b in bs)
        return Ball.from_interval(lo, hi, prec)

    def widen(self, extra_rad: "Ball | Fraction") -> "Ball":
        if isinstance(extra_rad, Ball):
            e = _RUP.add(_abs_up(extra_rad.mid), extra_rad.rad)
        else:
            e = _fr_up(Fraction(extra_rad))
        return Ball(self.mid, _RUP.add(self.rad, e), self.prec)
