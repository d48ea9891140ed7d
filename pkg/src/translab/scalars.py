"""Exact scalars: arbitrary-precision rationals with an optional Gaussian part.

The coefficient field everywhere in this package is Q or Q(i).  A scalar is
stored as a pair of ``fractions.Fraction`` values; purely real scalars keep
``im is None`` so real-only code paths never pay for the imaginary part.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from typing import Union

_ZERO = Fraction(0)

RationalLike = Union[int, Fraction, "ExactScalar"]


class ExactScalar:
    """A rational or Gaussian-rational number, always in lowest terms.

    ``Fraction`` already guarantees lowest terms and positive denominators,
    so equality is structural.
    """

    __slots__ = ("re", "_im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction | None = None):
        self.re = Fraction(re)
        if im is None or im == 0:
            self._im = None
        else:
            self._im = Fraction(im)

    # -- basic structure -------------------------------------------------

    @property
    def im(self) -> Fraction:
        return self._im if self._im is not None else _ZERO

    @property
    def is_real(self) -> bool:
        return self._im is None

    @property
    def is_rational(self) -> bool:
        return self._im is None

    def __bool__(self) -> bool:
        return bool(self.re) or self._im is not None

    def __eq__(self, other) -> bool:
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self._im is None:
            return hash(self.re)
        return hash((self.re, self._im))

    def __repr__(self):
        return f"ExactScalar({self})"

    def __str__(self):
        if self._im is None:
            return str(self.re)
        if not self.re:
            return f"{self._im}*i"
        sign = "+" if self._im > 0 else "-"
        return f"{self.re}{sign}{abs(self._im)}*i"

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self._im is None and other._im is None:
            return ExactScalar(self.re + other.re)
        return ExactScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        if self._im is None:
            return ExactScalar(-self.re)
        return ExactScalar(-self.re, -self._im)

    def __sub__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self._im is None and other._im is None:
            return ExactScalar(self.re * other.re)
        a, b, c, d = self.re, self.im, other.re, other.im
        return ExactScalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "ExactScalar":
        if self._im is None:
            return self
        return ExactScalar(self.re, -self._im)

    def norm2(self) -> Fraction:
        """|z|^2 as an exact rational."""
        if self._im is None:
            return self.re * self.re
        return self.re * self.re + self._im * self._im

    def inverse(self) -> "ExactScalar":
        if not self:
            raise ZeroDivisionError("ExactScalar division by zero")
        if self._im is None:
            return ExactScalar(1 / self.re)
        n = self.norm2()
        return ExactScalar(self.re / n, -self._im / n)

    def __truediv__(self, other):
        other = as_scalar(other)
        if other is NotImplemented:
            return NotImplemented
        if self._im is None and other._im is None:
            if not other.re:
                raise ZeroDivisionError("ExactScalar division by zero")
            return ExactScalar(self.re / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- parsing ----------------------------------------------------------

    _TOKEN = _re.compile(r"^\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*(i|\*i)?\s*")

    @classmethod
    def parse(cls, text: str) -> "ExactScalar":
        """Parse strings like ``3``, ``-5/7``, ``2i``, ``1/2+3i``, ``i``."""
        s = text.strip()
        if not s:
            raise ValueError("empty scalar")
        re_part, im_part = _ZERO, _ZERO
        pos = 0
        while pos < len(s):
            m = cls._TOKEN.match(s[pos:])
            if not m or m.end() == 0:
                raise ValueError(f"bad scalar syntax: {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            digits, imark = m.group(2), m.group(3)
            if digits is None and imark is None:
                raise ValueError(f"bad scalar syntax: {text!r}")
            val = Fraction(digits) if digits is not None else Fraction(1)
            if imark:
                im_part += sign * val
            else:
                re_part += sign * val
            pos += m.end()
        return cls(re_part, im_part if im_part else None)


def as_scalar(x) -> ExactScalar:
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactScalar(x)
    return NotImplemented


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)
