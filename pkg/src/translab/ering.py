"""The free E-ring Z[X1..Xn]^E: normal forms, ring operations, the formal
exponential E, and the canonical evaluation morphism into complex balls.

Elements are finite sums  sum_a p_a(X) E(a)  where the p_a are integer
polynomials and the exponents a are themselves normal-form elements with
zero integer-constant part (E is trivial on the base ring Z, so E(m + a) =
E(a) and the constants are absorbed - this is what makes normal forms
unique).  Height decreases strictly into exponents, so the recursion is
well-founded; structural equality of normal forms decides ring equality.
"""

from __future__ import annotations

import re as _re
from functools import total_ordering

from .balls import Ball

Monomial = tuple[tuple[int, int], ...]   # ((var, power), ...) sorted by var


class IntPoly:
    """Integer polynomial in X1, X2, ... (immutable, canonical)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, int] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            if c:
                clean[tuple(sorted(mono))] = c
        object.__setattr__(self, "terms", tuple(sorted(clean.items())))

    def dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    @classmethod
    def const(cls, n: int) -> "IntPoly":
        return cls({(): n})

    @classmethod
    def var(cls, k: int) -> "IntPoly":
        if k < 1:
            raise ValueError("variables are X1, X2, ...")
        return cls({((k, 1),): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        d = self.dict()
        for m, c in other.terms:
            d[m] = d.get(m, 0) + c
        return IntPoly(d)

    def __neg__(self) -> "IntPoly":
        return IntPoly({m: -c for m, c in self.terms})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                d = dict(m1)
                for v, p in m2:
                    d[v] = d.get(v, 0) + p
                key = tuple(sorted(d.items()))
                out[key] = out.get(key, 0) + c1 * c2
        return IntPoly(out)

    @property
    def constant(self) -> int:
        for m, c in self.terms:
            if m == ():
                return c
        return 0

    def drop_constant(self) -> "IntPoly":
        return IntPoly({m: c for m, c in self.terms if m != ()})

    def eval_ball(self, point: list[Ball], prec: int) -> Ball:
        acc = Ball.exact_int(0, prec)
        for mono, c in self.terms:
            t = Ball.exact_int(c, prec)
            for v, p in mono:
                if v - 1 >= len(point):
                    raise ValueError(f"no value for X{v}")
                t = t * point[v - 1].pow_int(p)
            acc = acc + t
        return acc

    def sort_key(self):
        return self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        def mono_str(m: Monomial) -> str:
            return "*".join(f"X{v}" + (f"^{p}" if p > 1 else "") for v, p in m)
        parts = []
        # print in graded-lex descending order for readability
        for m, c in sorted(self.terms,
                           key=lambda t: (-sum(p for _, p in t[0]), t[0])):
            ms = mono_str(m)
            if not ms:
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = ms
            else:
                piece = f"{abs(c)}*{ms}"
            parts.append(("-" if c < 0 else "+", piece))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sgn, piece in parts[1:]:
            out += sgn + piece
        return out

    def __repr__(self):
        return f"IntPoly({self})"


@total_ordering
class ETowerElem:
    """Normal-form element of the free E-ring."""

    __slots__ = ("terms", "_height", "_key")

    def __init__(self, terms):
        # terms: iterable of (exponent: ETowerElem, poly: IntPoly)
        merged: dict[ETowerElem, IntPoly] = {}
        for a, p in terms:
            if not p:
                continue
            if a in merged:
                merged[a] = merged[a] + p
            else:
                merged[a] = p
        pairs = [(a, p) for a, p in merged.items() if p]
        for a, _ in pairs:
            if a.constant_int != 0:
                raise ValueError("exponent with nonzero integer constant "
                                 "(should be absorbed by E)")
        pairs.sort(key=lambda ap: ap[0].sort_key())
        object.__setattr__(self, "terms", tuple(pairs))
        h = 0
        for a, _ in pairs:
            if not a.is_zero():
                h = max(h, 1 + a.height)
        object.__setattr__(self, "_height", h)
        object.__setattr__(self, "_key", None)

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def height(self) -> int:
        return self._height

    @property
    def poly_part(self) -> IntPoly:
        for a, p in self.terms:
            if a.is_zero():
                return p
        return IntPoly()

    @property
    def constant_int(self) -> int:
        return self.poly_part.constant

    def __eq__(self, other):
        return isinstance(other, ETowerElem) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple((hash(a), p.terms) for a, p in self.terms))

    def sort_key(self):
        if self._key is None:
            key = (self._height, len(self.terms),
                   tuple((a.sort_key(), p.sort_key()) for a, p in self.terms))
            object.__setattr__(self, "_key", key)
        return self._key

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "ETowerElem") -> "ETowerElem":
        return ETowerElem(self.terms + other.terms)

    def __neg__(self) -> "ETowerElem":
        return ETowerElem((a, -p) for a, p in self.terms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "ETowerElem") -> "ETowerElem":
        out = []
        for a1, p1 in self.terms:
            for a2, p2 in other.terms:
                out.append((a1 + a2, p1 * p2))
        return ETowerElem(out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for a, p in self.terms:
            if a.is_zero():
                parts.append(str(p))
            else:
                coeff = "" if p == IntPoly.const(1) else f"({p})*"
                parts.append(f"{coeff}E({a})")
        return " + ".join(parts)

    def __repr__(self):
        return f"ETowerElem({self})"


ZERO = ETowerElem(())
ONE = ETowerElem(((ZERO, IntPoly.const(1)),))


def from_poly(p: IntPoly) -> ETowerElem:
    return ETowerElem(((ZERO, p),))


def from_int(n: int) -> ETowerElem:
    return from_poly(IntPoly.const(n))


def var(k: int) -> ETowerElem:
    return from_poly(IntPoly.var(k))


def E(x: ETowerElem) -> ETowerElem:
    """The formal exponential: E(m + a) = E(a) for integer m (the base ring
    carries the trivial exponentiation), so integer constants are absorbed."""
    m = x.constant_int
    if m:
        x = x - from_int(m)
    if x.is_zero():
        return ONE
    return ETowerElem(((x, IntPoly.const(1)),))


e_add = ETowerElem.__add__
e_mul = ETowerElem.__mul__


def e_pow(x: ETowerElem, n: int) -> ETowerElem:
    out = ONE
    for _ in range(n):
        out = out * x
    return out


# ----------------------------------------------------------------------
# evaluation
# ----------------------------------------------------------------------

def gamma_eval(elem: ETowerElem, point: list[Ball], precision: int = 128) -> Ball:
    """Evaluation with X_i -> point_i and E -> complex exp; a ring morphism
    at the enclosure level.

    Note the normal form has already absorbed integer constants out of
    exponents (E is trivial on the base ring), so e.g. E(E(X)-1) evaluates
    as exp(exp(x)) - absorption happens before evaluation, by construction.
    Deep towers whose exponents grow out of range raise PrecisionExhausted
    rather than silently truncating.
    """
    from .balls import PrecisionExhausted
    prec = precision
    acc = Ball.exact_int(0, prec)
    for a, p in elem.terms:
        t = p.eval_ball(point, prec)
        if not a.is_zero():
            inner = gamma_eval(a, point, prec)
            mag = inner.abs_upper()
            if mag > (1 << 24):
                raise PrecisionExhausted(
                    f"tower exponent magnitude {float(mag):.3g} too large")
            t = t * inner.exp()
        acc = acc + t
    return acc


# ----------------------------------------------------------------------
# parsing and the raw-expression interface
# ----------------------------------------------------------------------

_TOKEN_RE = _re.compile(r"\s*(X\d+|\d+|E\(|[()+*^-])")


def e_normalize(text_or_tree) -> ETowerElem:
    """Normalize a raw expression (string over the grammar
    ``elem := int | X<k> | elem+elem | elem-elem | elem*elem | elem^int |
    E(elem)`` or a nested tuple tree) into its unique normal form."""
    if isinstance(text_or_tree, ETowerElem):
        return text_or_tree
    if isinstance(text_or_tree, str):
        return _parse(text_or_tree)
    return _from_tree(text_or_tree)


def _from_tree(t) -> ETowerElem:
    if isinstance(t, int):
        return from_int(t)
    op = t[0]
    if op == "int":
        return from_int(t[1])
    if op == "var":
        return var(t[1])
    if op == "+":
        return _from_tree(t[1]) + _from_tree(t[2])
    if op == "-":
        return _from_tree(t[1]) - _from_tree(t[2])
    if op == "*":
        return _from_tree(t[1]) * _from_tree(t[2])
    if op == "E":
        return E(_from_tree(t[1]))
    raise ValueError(f"unknown node {op!r}")


class _Parser:
    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise ValueError(f"bad token at {text[pos:]!r}")
                break
            self.tokens.append(m.group(1))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse_expr(self) -> ETowerElem:
        out = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.parse_term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def parse_term(self) -> ETowerElem:
        out = self.parse_power()
        while self.peek() == "*":
            self.next()
            out = out * self.parse_power()
        return out

    def parse_power(self) -> ETowerElem:
        base = self.parse_atom()
        if self.peek() == "^":
            self.next()
            n = self.next()
            if n is None or not n.isdigit():
                raise ValueError("integer exponent expected after '^'")
            return e_pow(base, int(n))
        return base

    def parse_atom(self) -> ETowerElem:
        tok = self.next()
        if tok is None:
            raise ValueError("unexpected end of input")
        if tok == "(":
            inner = self.parse_expr()
            if self.next() != ")":
                raise ValueError("missing ')'")
            return inner
        if tok == "E(":
            inner = self.parse_expr()
            if self.next() != ")":
                raise ValueError("missing ')' after E(")
            return E(inner)
        if tok == "-":
            return -self.parse_power()
        if tok.isdigit():
            return from_int(int(tok))
        if tok.startswith("X"):
            return var(int(tok[1:]))
        raise ValueError(f"unexpected token {tok!r}")


def _parse(text: str) -> ETowerElem:
    p = _Parser(text)
    out = p.parse_expr()
    if p.peek() is not None:
        raise ValueError(f"trailing input at {p.peek()!r}")
    return out


# ----------------------------------------------------------------------
# random elements (shared by the property suites)
# ----------------------------------------------------------------------

def random_element(rng, nvars: int = 2, height: int = 2,
                   max_terms: int = 3) -> ETowerElem:
    """A random normal-form element of bounded height and size."""
    def rand_poly() -> IntPoly:
        out: dict[Monomial, int] = {}
        for _ in range(rng.randint(1, 2)):
            mono = tuple(sorted((v, rng.randint(1, 2))
                                for v in rng.sample(range(1, nvars + 1),
                                                    rng.randint(0, nvars))))
            out[mono] = out.get(mono, 0) + rng.randint(-3, 3)
        return IntPoly(out)

    def rand_elem(h: int) -> ETowerElem:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            p = rand_poly()
            if h > 0 and rng.random() < 0.6:
                a = rand_elem(h - 1)
                a = a - from_int(a.constant_int)
                if a.is_zero():
                    terms.append((ZERO, p))
                else:
                    terms.append((a, p))
            else:
                terms.append((ZERO, p))
        return ETowerElem(terms)

    return rand_elem(height)
