"""Closed-form expression trees and their canonical printable grammar.

Node kinds: rational/Gaussian-rational constants, pi, sqrt of a positive
integer, exp/log, cot(pi*.), coth(pi*.), sums, products, quotients and
integer powers.  Printing is deterministic and injective on normal forms:

    (1/6)*pi^2
    (1/4320)*((192*log(2))-(81*log(3))-((7*sqrt(3))*pi))

``enclose`` evaluates any well-formed tree to a certified Ball; singular
arguments (cot at an integer, log of a nonpositive number) raise
:class:`SingularArgumentError` after an exact check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .balls import Ball, BallDomainError, PrecisionExhausted
from .scalars import ExactScalar, as_scalar


class SingularArgumentError(ValueError):
    """A cot/log/coth argument hit the singular set (exactly checkable)."""


class CF:
    """Base node of a closed-form expression."""
    __slots__ = ()

    def __str__(self) -> str:
        return _print(self)

    def __repr__(self) -> str:
        return f"CF<{_print(self)}>"

    def __eq__(self, other):
        return isinstance(other, CF) and _print(self) == _print(other)

    def __hash__(self):
        return hash(_print(self))


class CFRat(CF):
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = as_scalar(value) if not isinstance(value, ExactScalar) else value


class CFPi(CF):
    __slots__ = ()


class CFSqrt(CF):
    __slots__ = ("k",)

    def __init__(self, k: int):
        if k <= 0:
            raise ValueError("sqrt argument must be a positive integer")
        self.k = k


class CFExp(CF):
    __slots__ = ("arg",)

    def __init__(self, arg: CF):
        self.arg = arg


class CFLog(CF):
    __slots__ = ("arg",)

    def __init__(self, arg: CF):
        self.arg = arg


class CFCot(CF):
    """cot(pi * arg)."""
    __slots__ = ("arg",)

    def __init__(self, arg: CF):
        self.arg = arg


class CFCoth(CF):
    """coth(pi * arg)."""
    __slots__ = ("arg",)

    def __init__(self, arg: CF):
        self.arg = arg


class CFSum(CF):
    __slots__ = ("terms",)

    def __init__(self, terms: Sequence[CF]):
        self.terms = list(terms)


class CFProd(CF):
    __slots__ = ("factors",)

    def __init__(self, factors: Sequence[CF]):
        self.factors = list(factors)


class CFQuot(CF):
    __slots__ = ("num", "den")

    def __init__(self, num: CF, den: CF):
        self.num = num
        self.den = den


class CFPow(CF):
    __slots__ = ("base", "n")

    def __init__(self, base: CF, n: int):
        self.base = base
        self.n = n


PI = CFPi()
ZERO = CFRat(0)
ONE = CFRat(1)


# ----------------------------------------------------------------------
# canonical printing
# ----------------------------------------------------------------------

def _scalar_str(s: ExactScalar) -> tuple[str, bool]:
    """Render an exact scalar; second value says whether it is compound
    (needs parentheses when used as an operand)."""
    if s.is_real:
        q = s.re
        if q.denominator == 1:
            return str(q.numerator), q.numerator < 0
        return f"{q.numerator}/{q.denominator}", True
    def part(q: Fraction) -> str:
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    if not s.re:
        if s.im == 1:
            return "i", False
        return f"({part(s.im)})*i", True
    return f"({part(s.re)})+(({part(s.im)})*i)", True


def _is_compound(node: CF) -> bool:
    if isinstance(node, (CFSum, CFProd, CFQuot)):
        return True
    if isinstance(node, CFRat):
        return _scalar_str(node.value)[1]
    if isinstance(node, CFPow):
        return False  # pow of an atom prints tightly; compound bases self-wrap
    return False


def _wrap(node: CF) -> str:
    s = _print(node)
    return f"({s})" if _is_compound(node) else s


def _sign_split(node: CF) -> tuple[int, CF]:
    """Split a leading rational sign out of a term, for sum printing."""
    if isinstance(node, CFRat):
        v = node.value
        if v.is_real and v.re < 0:
            return -1, CFRat(-v.re)
        return 1, node
    if isinstance(node, CFProd) and node.factors:
        sgn, head = _sign_split(node.factors[0])
        if sgn < 0:
            rest = node.factors[1:]
            if isinstance(head, CFRat) and head.value == as_scalar(1):
                if len(rest) == 1:
                    return -1, rest[0]
                return -1, CFProd(rest)
            return -1, CFProd([head] + rest)
    return 1, node


def _print(node: CF) -> str:
    if isinstance(node, CFRat):
        return _scalar_str(node.value)[0]
    if isinstance(node, CFPi):
        return "pi"
    if isinstance(node, CFSqrt):
        return f"sqrt({node.k})"
    if isinstance(node, CFExp):
        return f"exp({_print(node.arg)})"
    if isinstance(node, CFLog):
        return f"log({_print(node.arg)})"
    if isinstance(node, CFCot):
        return f"cot(pi*{_wrap(node.arg)})"
    if isinstance(node, CFCoth):
        return f"coth(pi*{_wrap(node.arg)})"
    if isinstance(node, CFPow):
        return f"{_wrap(node.base)}^{node.n}"
    if isinstance(node, CFQuot):
        return f"{_wrap(node.num)}/{_wrap(node.den)}"
    if isinstance(node, CFProd):
        return "*".join(_wrap(f) for f in node.factors)
    if isinstance(node, CFSum):
        if not node.terms:
            return "0"
        parts = []
        for idx, t in enumerate(node.terms):
            sgn, mag = _sign_split(t)
            piece = _wrap(mag)
            if idx == 0:
                parts.append(piece if sgn > 0 else "-" + piece)
            else:
                parts.append(("+" if sgn > 0 else "-") + piece)
        return "".join(parts)
    raise TypeError(f"unknown ClosedForm node {type(node)}")


# ----------------------------------------------------------------------
# convenient builders (keep output strings canonical)
# ----------------------------------------------------------------------

def cf_rat(x) -> CFRat:
    return CFRat(x)


def coeff_atom(coef: ExactScalar | Fraction | int, sqrt_k: Optional[int],
               atom: Optional[CF]) -> Optional[CF]:
    """Build ``coef [* sqrt(k)] [* atom]`` in the canonical nesting, or None
    when the coefficient is zero."""
    c = as_scalar(coef)
    if not c:
        return None
    pieces: list[CF] = []
    if not (c == as_scalar(1)) or (sqrt_k is None and atom is None):
        pieces.append(CFRat(c))
    if sqrt_k is not None:
        pieces.append(CFSqrt(sqrt_k))
    head: Optional[CF]
    if len(pieces) == 0:
        head = None
    elif len(pieces) == 1:
        head = pieces[0]
    else:
        head = CFProd(pieces)
    if atom is None:
        return head
    if head is None:
        return atom
    return CFProd([head, atom])


def scaled_combination(scale: Fraction,
                       terms: Sequence[tuple[Fraction | ExactScalar, Optional[int], Optional[CF]]]
                       ) -> CF:
    """Canonical ``(scale)*(sum of coef*sqrt*atom terms)`` tree.

    Each term is (coefficient, optional sqrt radicand, optional atom).
    """
    built = [t for t in (coeff_atom(c, s, a) for (c, s, a) in terms) if t is not None]
    if not built:
        return CFRat(0)
    body: CF = built[0] if len(built) == 1 else CFSum(built)
    if scale == 1:
        return body
    return CFProd([CFRat(scale), body])


# ----------------------------------------------------------------------
# exact evaluation of argument subtrees (for singularity preconditions)
# ----------------------------------------------------------------------

def exact_value(node: CF) -> Optional[ExactScalar]:
    """Exact scalar value of a pi-free tree, or None if not exactly rational."""
    if isinstance(node, CFRat):
        return node.value
    if isinstance(node, CFSum):
        acc = as_scalar(0)
        for t in node.terms:
            v = exact_value(t)
            if v is None:
                return None
            acc = acc + v
        return acc
    if isinstance(node, CFProd):
        acc = as_scalar(1)
        for f in node.factors:
            v = exact_value(f)
            if v is None:
                return None
            acc = acc * v
        return acc
    if isinstance(node, CFQuot):
        n, d = exact_value(node.num), exact_value(node.den)
        if n is None or d is None or not d:
            return None
        return n / d
    if isinstance(node, CFPow):
        b = exact_value(node.base)
        return None if b is None else b ** node.n
    if isinstance(node, CFSqrt):
        import math
        r = math.isqrt(node.k)
        return as_scalar(r) if r * r == node.k else None
    return None


# ----------------------------------------------------------------------
# enclosure
# ----------------------------------------------------------------------

_MAX_RETRY = 8


def enclose(expr: CF, precision: int) -> Ball:
    """A Ball containing the exact value of ``expr``.

    Doubling ``precision`` shrinks the radius at least twofold on
    nonsingular inputs; singular cot/log arguments raise
    :class:`SingularArgumentError` via exact checks.
    """
    prec = precision + 16
    for _ in range(_MAX_RETRY):
        try:
            return _eval(expr, prec)
        except BallDomainError:
            prec *= 2
    raise PrecisionExhausted(f"enclose failed up to {prec} bits")


def _eval(node: CF, prec: int) -> Ball:
    if isinstance(node, CFRat):
        return Ball.from_scalar(node.value, prec)
    if isinstance(node, CFPi):
        return Ball.pi(prec)
    if isinstance(node, CFSqrt):
        return Ball.exact_int(node.k, prec).sqrt()
    if isinstance(node, CFExp):
        return _eval(node.arg, prec).exp()
    if isinstance(node, CFLog):
        v = exact_value(node.arg)
        if v is not None and (not v.is_real or v.re <= 0):
            raise SingularArgumentError(f"log argument {v} is not positive")
        b = _eval(node.arg, prec)
        if not b.is_complex and not b.is_positive():
            raise SingularArgumentError("log argument not certainly positive")
        return b.log()
    if isinstance(node, CFCot):
        v = exact_value(node.arg)
        if v is not None:
            if not v.is_real:
                raise SingularArgumentError("cot argument must be real")
            q = v.re - int(v.re // 1)  # exact reduction mod 1
            if q == 0:
                raise SingularArgumentError("cot(pi*n) pole at integer argument")
            return (Ball.pi(prec) * Ball.from_fraction(q, prec)).cot()
        return (Ball.pi(prec) * _eval(node.arg, prec)).cot()
    if isinstance(node, CFCoth):
        v = exact_value(node.arg)
        if v is not None and v.is_real and v.re == 0:
            raise SingularArgumentError("coth pole at zero")
        return (Ball.pi(prec) * _eval(node.arg, prec)).coth()
    if isinstance(node, CFSum):
        acc = Ball.exact_int(0, prec)
        for t in node.terms:
            acc = acc + _eval(t, prec)
        return acc
    if isinstance(node, CFProd):
        acc = Ball.exact_int(1, prec)
        for f in node.factors:
            acc = acc * _eval(f, prec)
        return acc
    if isinstance(node, CFQuot):
        return _eval(node.num, prec) / _eval(node.den, prec)
    if isinstance(node, CFPow):
        return _eval(node.base, prec).pow_int(node.n)
    raise TypeError(f"unknown ClosedForm node {type(node)}")


# cot special values for denominators dividing 12, as (rational, sqrt part):
# cot(pi p/q) = a + b*sqrt(3)  or  a + b*sqrt(1)=rational, keyed by p/q mod 1.
_COT_TABLE: dict[Fraction, tuple[Fraction, Fraction, int]] = {
    Fraction(1, 2): (Fraction(0), Fraction(0), 3),
    Fraction(1, 3): (Fraction(0), Fraction(1, 3), 3),
    Fraction(2, 3): (Fraction(0), Fraction(-1, 3), 3),
    Fraction(1, 4): (Fraction(1), Fraction(0), 3),
    Fraction(3, 4): (Fraction(-1), Fraction(0), 3),
    Fraction(1, 6): (Fraction(0), Fraction(1), 3),
    Fraction(5, 6): (Fraction(0), Fraction(-1), 3),
    Fraction(1, 12): (Fraction(2), Fraction(1), 3),
    Fraction(5, 12): (Fraction(2), Fraction(-1), 3),
    Fraction(7, 12): (Fraction(-2), Fraction(1), 3),
    Fraction(11, 12): (Fraction(-2), Fraction(-1), 3),
}


def cot_special(q: Fraction) -> Optional[tuple[Fraction, Fraction, int]]:
    """(a, b, k) with cot(pi*q) = a + b*sqrt(k), for q whose reduced
    denominator divides 12; None otherwise (left symbolic)."""
    r = q - int(q // 1)
    if r == 0:
        raise SingularArgumentError("cot(pi*n) pole at integer argument")
    return _COT_TABLE.get(r)
