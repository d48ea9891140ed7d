"""Closed-form and certified-numeric summation of rational series.

Bilateral sums run through the cotangent: sum_{n in Z} 1/(n+z)^k equals
(-1)^(k-1) pi^k Q_k(cot(pi z)) / (k-1)! where Q_1 = c and
Q_{k+1} = -Q_k'(c)(1+c^2) (integer coefficients), the k=1 case being the
principal value of the conditionally convergent series in symmetric order.
Unilateral sums of simple rational-pole fractions go through the Gauss
digamma evaluation; with deg B >= deg A + 2 the Euler constants cancel
exactly and the result is a combination of logs of small integers, pi and
cotangent/cotanh special values.

Closed forms are emitted only for exactly-factorable pole sets (rational
roots, and n^2+C^2-style pure-imaginary pairs); everything else gets a
certified Ball from isolated root enclosures, never a symbolic answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .balls import Ball
from .closedform import (CF, CFCot, CFCoth, CFLog, CFPow, CFProd, CFRat, PI,
                         cot_special, scaled_combination)
from .combinatorics import stirling2
from .polyops import (degree, derivative, evaluate, rational_roots,
                      squarefree_decomposition, to_exact, trim)
from .rootiso import certified_roots
from .scalars import ExactScalar, as_scalar



class IntegerPoleError(ValueError):
    """The series has a pole at an integer index."""


class NonconvergentError(ValueError):
    """deg B < deg A + 2: the (bilateral) series does not converge absolutely."""


class DivergentSeriesError(ValueError):
    """|z| >= 1 in a power-series sum."""


# ----------------------------------------------------------------------
# cotangent derivative apparatus
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def cot_derivative_coeffs(k: int) -> tuple[int, ...]:
    """Integers A_{k,1..k} with d^{k-1}/dz^{k-1} (pi cot pi z) =
    (2 pi i)^k sum_j A_{k,j} / (e^{2 pi i z} - 1)^j, for k >= 2.

    A_2 = (-1, -1); A_{k,j} = -(j A_{k-1,j} + (j-1) A_{k-1,j-1}).
    """
    if k < 2:
        raise ValueError("cot_derivative_coeffs needs k >= 2")
    if k == 2:
        return (-1, -1)
    prev = cot_derivative_coeffs(k - 1)
    out = []
    for j in range(1, k + 1):
        a_j = prev[j - 1] if j <= len(prev) else 0
        a_jm1 = prev[j - 2] if 2 <= j <= len(prev) + 1 else 0
        out.append(-(j * a_j + (j - 1) * a_jm1))
    assert out[0] != 0 and out[-1] != 0
    return tuple(out)


@lru_cache(maxsize=None)
def cot_power_poly(k: int) -> tuple[int, ...]:
    """Q_k with (d/dz)^{k-1} (pi cot pi z) = pi^k Q_k(cot pi z):
    Q_1 = c, Q_{k+1} = -(1+c^2) Q_k'(c).  Integer ascending coefficients."""
    if k < 1:
        raise ValueError("k >= 1")
    if k == 1:
        return (0, 1)
    q = list(cot_power_poly(k - 1))
    dq = [i * c for i, c in enumerate(q)][1:]
    out = [0] * (len(dq) + 2)
    for i, c in enumerate(dq):
        out[i] -= c
        out[i + 2] -= c
    return tuple(trim(out) or [0])


def _powersum_scale(k: int) -> Fraction:
    # sum 1/(n+z)^k = (-1)^(k-1) pi^k Q_k(cot(pi z)) / (k-1)!
    return Fraction((-1) ** (k - 1), math.factorial(k - 1))


# quadratic-field helper for cot special values a + b*sqrt(3)
def _q3_mul(x, y):
    a, b = x
    c, d = y
    return (a * c + 3 * b * d, a * d + b * c)


def _q3_eval(poly, t):
    acc = (Fraction(0), Fraction(0))
    for c in reversed(poly):
        acc = _q3_mul(acc, t)
        acc = (acc[0] + c, acc[1])
    return acc


# ----------------------------------------------------------------------
# symbolic value combinations
# ----------------------------------------------------------------------

# atom keys: ("log", m) | ("pi", j, sqrt_k) | ("picot", j, q, p) |
#            ("picoth", j, q, p) | ("rat",)
_ATOM_ORDER = {"log": 0, "pi": 1, "picot": 2, "picoth": 3, "rat": 4}


class ValueCombo:
    """An exact linear combination of closed-form atoms."""

    def __init__(self):
        self.terms: dict[tuple, Fraction] = {}

    def add(self, key: tuple, coef: Fraction):
        if not coef:
            return
        cur = self.terms.get(key, Fraction(0)) + coef
        if cur:
            self.terms[key] = cur
        else:
            self.terms.pop(key, None)

    def add_rational(self, coef: Fraction):
        self.add(("rat",), coef)

    def update(self, other: "ValueCombo", scale: Fraction = Fraction(1)):
        for k, v in other.terms.items():
            self.add(k, v * scale)

    # -- rendering ------------------------------------------------------

    def _atom_cf(self, key: tuple) -> tuple[Optional[int], Optional[CF]]:
        kind = key[0]
        if kind == "rat":
            return None, None
        if kind == "log":
            return None, CFLog(CFRat(key[1]))
        if kind == "pi":
            j, sk = key[1], key[2]
            atom = PI if j == 1 else CFPow(PI, j)
            return (sk if sk != 1 else None), atom
        if kind in ("picot", "picoth"):
            j, q, p = key[1], key[2], key[3]
            node = CFCot(CFRat(q)) if kind == "picot" else CFCoth(CFRat(q))
            trig: CF = node if p == 1 else CFPow(node, p)
            if j == 0:
                return None, trig
            pi_part: CF = PI if j == 1 else CFPow(PI, j)
            return None, CFProd([pi_part, trig])
        raise KeyError(key)

    def to_cf(self) -> CF:
        keys = sorted(self.terms, key=lambda k: (_ATOM_ORDER[k[0]], k[1:]))
        if not keys:
            return CFRat(0)
        D = 1
        for k in keys:
            D = D * self.terms[k].denominator // math.gcd(D, self.terms[k].denominator)
        entries = []
        for k in keys:
            coef = self.terms[k] * D
            assert coef.denominator == 1
            sk, atom = self._atom_cf(k)
            entries.append((Fraction(coef), sk, atom))
        return scaled_combination(Fraction(1, D), entries)

    def enclose(self, precision: int) -> Ball:
        prec = precision + 16
        pi = Ball.pi(prec)
        acc = Ball.exact_int(0, prec)
        for k, coef in self.terms.items():
            c = Ball.from_fraction(coef, prec)
            kind = k[0]
            if kind == "rat":
                v = c
            elif kind == "log":
                v = c * Ball.exact_int(k[1], prec).log()
            elif kind == "pi":
                v = c * pi.pow_int(k[1])
                if k[2] != 1:
                    v = v * Ball.exact_int(k[2], prec).sqrt()
            elif kind == "picot":
                v = c * pi.pow_int(k[1]) * (pi * Ball.from_fraction(k[2], prec)).cot().pow_int(k[3])
            elif kind == "picoth":
                v = c * pi.pow_int(k[1]) * (pi * Ball.from_fraction(k[2], prec)).coth().pow_int(k[3])
            else:
                raise KeyError(k)
            acc = acc + v
        return acc.round_to(precision)


# ----------------------------------------------------------------------
# bilateral power sums
# ----------------------------------------------------------------------

def _cot_ball(alpha, precision: int) -> Ball:
    pi = Ball.pi(precision)
    if isinstance(alpha, Ball):
        return (pi * alpha).cot()
    return (pi * Ball.from_scalar(alpha, precision)).cot()


def bilateral_power_sum(z, k: int, precision: int = 128):
    """sum_{n in Z} 1/(n+z)^k -> (ClosedForm | None, Ball).

    k = 1 sums in symmetric partial-sum order (principal value).  Exact
    rational z yields a closed form; Gaussian or Ball z yields Ball only.
    """
    if k < 1:
        raise ValueError("k >= 1")
    cf = None
    if isinstance(z, Ball):
        if z.is_complex and z.imag().contains_zero() and _contains_integer(z.real()):
            raise IntegerPoleError("z ball cannot be separated from the integers")
        if not z.is_complex and _contains_integer(z):
            raise IntegerPoleError("z ball cannot be separated from the integers")
        zb = z
    else:
        zs = as_scalar(z) if not isinstance(z, ExactScalar) else z
        if zs.is_real and zs.re.denominator == 1:
            raise IntegerPoleError(f"pole: z = {zs} is an integer")
        if zs.is_real:
            cf = _power_sum_cf(zs.re, k)
        zb = Ball.from_scalar(zs, precision + 16)
    scale = _powersum_scale(k)
    q = cot_power_poly(k)
    t = _cot_ball(zb, precision + 16)
    val = Ball.exact_int(0, precision + 16)
    for c in reversed(q):
        val = val * t + Ball.exact_int(c, precision + 16)
    ball = (val * Ball.pi(precision + 16).pow_int(k) *
            Ball.from_fraction(scale, precision + 16)).round_to(precision)
    return cf, ball


def _contains_integer(b: Ball) -> bool:
    lo, hi = b.lower(), b.upper()
    return math.floor(hi) >= math.ceil(lo)


def _power_sum_cf(q: Fraction, k: int) -> CF:
    combo = power_sum_combo(q, k)
    return combo.to_cf()


def power_sum_combo(alpha: Fraction, k: int) -> ValueCombo:
    """Symbolic sum_{n} 1/(n+alpha)^k for rational non-integer alpha."""
    alpha = Fraction(alpha)
    if alpha.denominator == 1:
        raise IntegerPoleError("integer pole")
    r = alpha - (alpha.numerator // alpha.denominator)  # in (0,1)
    scale = _powersum_scale(k)
    qpoly = [Fraction(c) for c in cot_power_poly(k)]
    combo = ValueCombo()
    special = cot_special(r)
    if special is not None:
        a, b, sk = special
        u, v = _q3_eval(qpoly, (a, b))
        combo.add(("pi", k, 1), scale * u)
        combo.add(("pi", k, sk), scale * v)
    else:
        for p, c in enumerate(qpoly):
            if not c:
                continue
            if p == 0:
                combo.add(("pi", k, 1), scale * c)
            else:
                combo.add(("picot", k, r, p), scale * c)
    return combo


def _coth_pair_combo(C: Fraction, coeffs: dict[int, ExactScalar], k: int) -> ValueCombo:
    """Contribution of a conjugate pole pair alpha = -iC, +iC at power k.

    ``coeffs`` maps sign sigma in {-1,+1} (alpha = sigma*i*C) to the exact
    partial-fraction coefficient.  cot(pi*sigma*i*C) = -sigma*i*coth(pi*C).
    """
    scale = _powersum_scale(k)
    qpoly = cot_power_poly(k)
    combo = ValueCombo()
    acc: dict[int, ExactScalar] = {}
    for sigma, cij in coeffs.items():
        ii = ExactScalar(0, -1) * sigma
        tpow = as_scalar(1)
        for p, c in enumerate(qpoly):
            if c:
                acc[p] = acc.get(p, as_scalar(0)) + cij * c * tpow
            tpow = tpow * ii
    for p, s in acc.items():
        if not s:
            continue
        if not s.is_real:
            raise ArithmeticError("conjugate pair contribution must be real")
        combo.add(("picoth", k, C, p) if p else ("pi", k, 1), scale * s.re)
    return combo


# ----------------------------------------------------------------------
# rational series: pole data and partial fractions
# ----------------------------------------------------------------------

@dataclass
class RationalSeriesSpec:
    """A(n)/B(n) with integer coefficients, deg B >= deg A + 2, and no
    integer roots of B."""

    A: list[int]
    B: list[int]

    def __post_init__(self):
        self.A = [int(c) for c in trim(list(self.A))]
        self.B = [int(c) for c in trim(list(self.B))]
        if not self.B:
            raise ZeroDivisionError("B = 0")
        if not self.A:
            return
        # deg gap >= 2 gives absolute convergence; gap 1 still has a
        # convergent symmetric principal value (each simple-pole piece does)
        if degree(self.B) < degree(self.A) + 1:
            raise NonconvergentError("need deg B >= deg A + 1")

    @property
    def absolutely_convergent(self) -> bool:
        return degree(self.B) >= degree(self.A) + 2

    def pole_data(self, precision: int = 128):
        """[(root, multiplicity, kind)] with kind 'rational'|'gauss'|'ball'.

        Rational roots are Fractions; the pure-imaginary pairs of n^2+C^2
        factors are ExactScalars; everything else is a certified Ball.
        Raises IntegerPoleError for integer roots.
        """
        B = [Fraction(c) for c in self.B]
        out = []
        for part, mult in squarefree_decomposition(B):
            rem = part
            for r in rational_roots(part):
                if r.denominator == 1:
                    raise IntegerPoleError(f"B has integer root {r}")
                out.append((r, mult, "rational"))
                rem = _deflate(rem, r)
            if degree(rem) == 2 and rem[1] == 0 and rem[0] > 0:
                c0 = rem[0] / rem[2]
                csq = _sqrt_fraction(c0)
                if csq is not None:
                    out.append((ExactScalar(0, csq), mult, "gauss"))
                    out.append((ExactScalar(0, -csq), mult, "gauss"))
                    rem = [rem[2]]
            if degree(rem) >= 1:
                for ball, m2 in certified_roots(to_exact(rem), precision):
                    if ball.imag().contains_zero() and _contains_integer(ball.real()):
                        raise IntegerPoleError("ball root cannot be separated "
                                               "from the integers")
                    out.append((ball, mult * m2, "ball"))
        return out


def _deflate(p: list[Fraction], r: Fraction) -> list[Fraction]:
    """p / (X - r), exact synthetic division (r must be a root)."""
    out = []
    carry = Fraction(0)
    for c in reversed(p):
        carry = carry * r + c
        out.append(carry)
    assert out[-1] == 0
    return list(reversed(out[:-1]))


def _sqrt_fraction(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _series_inverse(den: list, order: int, one):
    """1/den as a power series to ``order`` terms; den[0] must be invertible."""
    inv0 = one / den[0]
    out = [inv0]
    for k in range(1, order):
        acc = None
        for j in range(1, min(k, len(den) - 1) + 1):
            t = den[j] * out[k - j]
            acc = t if acc is None else acc + t
        out.append(-inv0 * acc if acc is not None else inv0 * 0)
    return out


def _taylor_shift_generic(p: list, r):
    """Coefficients of p(r + t), synthetic-division style (no divisions)."""
    work = list(p)
    out = []
    for _ in range(len(p)):
        carry = None
        quot = []
        for c in reversed(work):
            carry = c if carry is None else carry * r + c
            quot.append(carry)
        out.append(carry)
        work = list(reversed(quot[:-1]))
        if not work:
            break
    return out


def partial_fraction_coeffs(A: list, B: list, root, mult: int, prec: int | None = None):
    """C_{j} for j = 1..mult in A/B = sum_j C_j/(X - root)^j + ..., computed
    from the Taylor expansion of A/(B/(X-root)^mult) at the root.

    Works over ExactScalar (exact roots) and Ball (isolated roots).
    """
    G = list(B)
    for _ in range(mult):
        G = _deflate_generic(G, root)
    a_series = _taylor_shift_generic(A, root)
    g_series = _taylor_shift_generic(G, root)
    if len(a_series) < mult:
        a_series = a_series + [0 * g_series[0]] * (mult - len(a_series))
    one = (Ball.exact_int(1, prec) if isinstance(root, Ball)
           else as_scalar(1))
    inv = _series_inverse(g_series, mult, one)
    # (A/G)(root + t) = sum_l h_l t^l;  C_{mult-l} = h_l
    out = {}
    for ell in range(mult):
        acc = None
        for j in range(ell + 1):
            if j < len(a_series) and (ell - j) < len(inv):
                t = a_series[j] * inv[ell - j]
                acc = t if acc is None else acc + t
        out[mult - ell] = acc if acc is not None else one * 0
    return out


def _deflate_generic(p: list, r):
    out = []
    carry = None
    for c in reversed(p):
        carry = c if carry is None else carry * r + c
        out.append(carry)
    return list(reversed(out[:-1]))


# ----------------------------------------------------------------------
# bilateral rational sums
# ----------------------------------------------------------------------

def bilateral_rational_sum(spec: RationalSeriesSpec, precision: int = 128):
    """sum_{n in Z} A(n)/B(n) -> (ClosedForm | None, Ball)."""
    if not spec.A:
        return CFRat(0), Ball.exact_int(0, precision)
    prec = precision + 32
    poles = spec.pole_data(precision)
    all_exact = all(kind != "ball" for (_, _, kind) in poles)

    combo = ValueCombo() if all_exact else None
    total = Ball.exact_int(0, prec)
    Aex = [as_scalar(Fraction(c)) for c in spec.A]
    Bex = [as_scalar(Fraction(c)) for c in spec.B]

    gauss_groups: dict[tuple[Fraction, int], dict[int, ExactScalar]] = {}
    residue_sum_k1 = as_scalar(0)

    for root, mult, kind in poles:
        if kind == "ball":
            rootb = root.round_to(prec)
            Ab = [Ball.from_scalar(c, prec) for c in Aex]
            Bb = [Ball.from_scalar(c, prec) for c in Bex]
            cj = partial_fraction_coeffs(Ab, Bb, rootb, mult, prec)
            alpha = -rootb
            for j, c in cj.items():
                _, ps = bilateral_power_sum(alpha, j, prec)
                total = total + c * ps
        else:
            rs = root if isinstance(root, ExactScalar) else as_scalar(root)
            cj = partial_fraction_coeffs(Aex, Bex, rs, mult, None)
            if 1 in cj:
                residue_sum_k1 = residue_sum_k1 + cj[1]
            alpha = -rs
            for j, c in cj.items():
                ab = Ball.from_scalar(alpha, prec)
                _, ps = bilateral_power_sum(ab, j, prec)
                total = total + Ball.from_scalar(c, prec) * ps
                if combo is None:
                    continue
                if kind == "rational":
                    if not c.is_real:
                        raise ArithmeticError("rational pole with nonreal coefficient")
                    combo.update(power_sum_combo(alpha.re, j), c.re)
                else:  # gauss, alpha = -root = sigma i C
                    C = abs(alpha.im)
                    sigma = 1 if alpha.im > 0 else -1
                    gauss_groups.setdefault((C, j), {})[sigma] = \
                        gauss_groups.get((C, j), {}).get(sigma, as_scalar(0)) + c

    if all_exact and spec.absolutely_convergent and not residue_sum_k1 == as_scalar(0):
        # deg B >= deg A + 2 forces the residues to cancel; a violation here
        # would make the symmetric PV regrouping unsound, so fail loudly
        raise NonconvergentError("k=1 residues do not cancel")

    if combo is not None:
        for (C, j), group in gauss_groups.items():
            combo.update(_coth_pair_combo(C, group, j))
        cf = combo.to_cf()
    else:
        cf = None
    return cf, total.real().round_to(precision)


# ----------------------------------------------------------------------
# unilateral sums: Gauss digamma machinery
# ----------------------------------------------------------------------

_SMOOTH_Q = {1, 2, 3, 4, 6}

# log(sin(k pi / q)) as (coef of log2, coef of log3) for smooth q
_LOG_SIN: dict[tuple[int, int], tuple[Fraction, Fraction]] = {
    (1, 2): (Fraction(0), Fraction(0)),                 # sin(pi/2) = 1
    (1, 3): (Fraction(-1), Fraction(1, 2)),             # sqrt(3)/2
    (2, 3): (Fraction(-1), Fraction(1, 2)),
    (1, 4): (Fraction(-1, 2), Fraction(0)),             # sqrt(2)/2
    (3, 4): (Fraction(-1, 2), Fraction(0)),
    (1, 6): (Fraction(-1), Fraction(0)),                # 1/2
    (5, 6): (Fraction(-1), Fraction(0)),
    (2, 6): (Fraction(-1), Fraction(1, 2)),
    (3, 6): (Fraction(0), Fraction(0)),
    (4, 6): (Fraction(-1), Fraction(1, 2)),
}


def _cos_2pi(p: int, q: int) -> Optional[Fraction]:
    """cos(2 pi p / q) when rational (q | 12 cases used here)."""
    r = Fraction(p, q) % 1
    table = {
        Fraction(0): Fraction(1), Fraction(1, 2): Fraction(-1),
        Fraction(1, 3): Fraction(-1, 2), Fraction(2, 3): Fraction(-1, 2),
        Fraction(1, 6): Fraction(1, 2), Fraction(5, 6): Fraction(1, 2),
        Fraction(1, 4): Fraction(0), Fraction(3, 4): Fraction(0),
    }
    return table.get(r)


def digamma_combo(alpha: Fraction) -> tuple[ValueCombo, bool]:
    """(psi(alpha) + gamma) as a ValueCombo, plus a 'symbolic' flag.

    Gauss: for alpha = p/q in (0,1), psi(p/q) = -gamma - ln(2q)
    - (pi/2)cot(pi p/q) + 2 sum_{0<k<q/2} cos(2 pi k p/q) ln(sin(k pi/q)).
    Rational recurrence shifts move any admissible alpha into (0,1].  When q
    is outside {1,2,3,4,6} the log(sin) values leave Q-span{log2,log3}; the
    flag comes back False and only the partial (shift) combo is meaningful.
    """
    alpha = Fraction(alpha)
    if alpha.denominator == 1 and alpha <= 0:
        raise IntegerPoleError("digamma pole at nonpositive integer")
    combo = ValueCombo()
    # shift into (0, 1]
    shift = Fraction(0)
    a = alpha
    while a > 1:
        a -= 1
        shift += 1 / a
    while a <= 0:
        combo.add_rational(-1 / a)
        a += 1
    combo.add_rational(shift)
    if a == 1:
        return combo, True  # psi(1) = -gamma
    p, q = a.numerator, a.denominator
    if q not in _SMOOTH_Q:
        return combo, False
    # -ln(2q): 2q is 3-smooth for q in {1,2,3,4,6}
    m = 2 * q
    e2 = 0
    while m % 2 == 0:
        m //= 2
        e2 += 1
    e3 = 0
    while m % 3 == 0:
        m //= 3
        e3 += 1
    assert m == 1
    combo.add(("log", 2), Fraction(-e2))
    if e3:
        combo.add(("log", 3), Fraction(-e3))
    # -(pi/2) cot(pi p/q)
    spec = cot_special(a)
    assert spec is not None  # q | 12 for all smooth q
    ca, cb, sk = spec
    combo.add(("pi", 1, 1), Fraction(-1, 2) * ca)
    combo.add(("pi", 1, sk), Fraction(-1, 2) * cb)
    # + 2 sum cos(2 pi k p / q) ln sin(k pi / q)
    for k in range(1, (q - 1) // 2 + 1):
        c = _cos_2pi(k * p, q)
        assert c is not None
        l2, l3 = _LOG_SIN[(k, q)]
        combo.add(("log", 2), 2 * c * l2)
        combo.add(("log", 3), 2 * c * l3)
    return combo, True


def _digamma_ball(alpha: Fraction, precision: int) -> Ball:
    """psi(alpha) + gamma as a ball (Gauss formula, any denominator)."""
    prec = precision + 16
    a = Fraction(alpha)
    acc = Ball.exact_int(0, prec)
    while a > 1:
        a -= 1
        acc = acc + Ball.from_fraction(1 / a, prec)
    while a <= 0:
        acc = acc - Ball.from_fraction(1 / a, prec)
        a += 1
    if a == 1:
        return acc
    p, q = a.numerator, a.denominator
    pi = Ball.pi(prec)
    acc = acc - Ball.exact_int(2 * q, prec).log()
    acc = acc - pi * (pi * Ball.from_fraction(a, prec)).cot() / 2
    for k in range(1, (q - 1) // 2 + 1):
        cosv = (Ball.from_fraction(Fraction(2 * k * p, q), prec) * pi).cos()
        sinv = (Ball.from_fraction(Fraction(k, q), prec) * pi).sin()
        acc = acc + 2 * cosv * sinv.log()
    return acc


def unilateral_rational_sum(A: list[int], B: list[int], precision: int = 128):
    """sum_{n >= 0} A(n)/B(n) -> (ClosedForm | None, Ball).

    Requires deg B >= deg A + 2 and simple rational poles, none at a
    nonnegative integer.  Closed forms need the pole denominators in
    {1,2,3,4,6}; otherwise only the certified ball is returned.
    """
    A = trim([int(c) for c in A])
    B = trim([int(c) for c in B])
    if not B:
        raise ZeroDivisionError("B = 0")
    if not A:
        return CFRat(0), Ball.exact_int(0, precision)
    if degree(B) < degree(A) + 2:
        raise NonconvergentError("need deg B >= deg A + 2")
    Bq = [Fraction(c) for c in B]
    sq = squarefree_decomposition(Bq)
    if any(m > 1 for _, m in sq):
        raise NotImplementedError("unilateral sums support simple poles only")
    roots = rational_roots(Bq)
    if len(roots) != degree(Bq):
        raise NotImplementedError("unilateral closed forms need rational poles")
    if any(r.denominator == 1 and r >= 0 for r in roots):
        raise IntegerPoleError("pole at a nonnegative integer index")
    dB = derivative(Bq)
    combo = ValueCombo()
    prec = precision + 32
    total = Ball.exact_int(0, prec)
    symbolic = True
    csum = Fraction(0)
    for r in roots:
        c = Fraction(evaluate([Fraction(x) for x in A], r)) / Fraction(evaluate(dB, r))
        csum += c
        alpha = -r
        dcombo, ok = digamma_combo(alpha)
        symbolic = symbolic and ok
        combo.update(dcombo, -c)   # contribution -c * psi(alpha)
        total = total - Ball.from_fraction(c, prec) * _digamma_ball(alpha, prec)
    if csum != 0:
        raise NonconvergentError("residues do not cancel; series diverges")
    cf = combo.to_cf() if symbolic else None
    return cf, total.round_to(precision)


def unilateral_quadratic_sum(C: Fraction, precision: int = 128):
    """sum_{n>=1} 1/(n^2 + C^2) = (pi/(2C)) coth(pi C) - 1/(2 C^2), C > 0."""
    C = Fraction(C)
    if C <= 0:
        raise ValueError("C must be positive")
    combo = ValueCombo()
    combo.add(("picoth", 1, C, 1), Fraction(1, 2) / C)
    combo.add_rational(Fraction(-1, 2) / (C * C))
    cf = combo.to_cf()
    return cf, combo.enclose(precision)


# ----------------------------------------------------------------------
# algebraic power-series sums
# ----------------------------------------------------------------------

def geometric_poly_sum(P: list[int], z: ExactScalar) -> ExactScalar:
    """Exact sum_{n>=0} z^n P(n) = sum_i a_i sum_j S(i,j) j! z^j/(1-z)^{j+1},
    for |z| < 1 (exact Gaussian-rational modulus check)."""
    z = z if isinstance(z, ExactScalar) else as_scalar(z)
    if z.norm2() >= 1:
        raise DivergentSeriesError("need |z| < 1")
    one = as_scalar(1)
    inv1z = (one - z).inverse()
    out = as_scalar(0)
    for i, a in enumerate(trim([int(c) for c in P])):
        if not a:
            continue
        inner = as_scalar(0)
        for j in range(i + 1):
            s = stirling2(i, j)
            if s:
                inner = inner + as_scalar(s * math.factorial(j)) * z**j * inv1z ** (j + 1)
        out = out + as_scalar(a) * inner
    return out


# ----------------------------------------------------------------------
# truncated oracles (exact scaled-integer brackets)
# ----------------------------------------------------------------------

def _bracket_add(acc_lo: int, acc_hi: int, num: int, den: int, shift: int):
    scaled = num << shift
    q = scaled // den    # floor
    return acc_lo + q, acc_hi + q + 1


def truncated_bilateral(A: list[int], B: list[int], N: int) -> tuple[Fraction, Fraction]:
    """Exact bounds for the symmetric partial sum plus integral tail bound.

    The tail is bounded on the symmetric pairing A(n)/B(n) + A(-n)/B(-n) =
    C(n)/D(n), whose degree gap is >= 2 whenever the original gap is >= 1.
    """
    A = trim([int(c) for c in A])
    B = trim([int(c) for c in B])
    if degree(B) < degree(A) + 1:
        raise NonconvergentError("need deg B >= deg A + 1")
    shift = 160
    lo = hi = 0
    for n in range(-N, N + 1):
        bn = _int_eval(B, n)
        if bn == 0:
            raise IntegerPoleError(f"pole at n = {n}")
        an = _int_eval(A, n)
        if bn < 0:
            an, bn = -an, -bn
        lo, hi = _bracket_add(lo, hi, an, bn, shift)
    Aneg = [c if i % 2 == 0 else -c for i, c in enumerate(A)]
    Bneg = [c if i % 2 == 0 else -c for i, c in enumerate(B)]
    from .polyops import add as padd, mul as pmul
    C = padd(pmul(A, Bneg), pmul(Aneg, B))
    D = pmul(B, Bneg)
    _, th = _tail_bound(C, D, N)
    return (Fraction(lo, 1 << shift) - th,
            Fraction(hi, 1 << shift) + th)


def truncated_unilateral(A: list[int], B: list[int], N: int) -> tuple[Fraction, Fraction]:
    A = trim([int(c) for c in A])
    B = trim([int(c) for c in B])
    shift = 160
    lo = hi = 0
    for n in range(0, N + 1):
        bn = _int_eval(B, n)
        if bn == 0:
            raise IntegerPoleError(f"pole at n = {n}")
        an = _int_eval(A, n)
        if bn < 0:
            an, bn = -an, -bn
        lo, hi = _bracket_add(lo, hi, an, bn, shift)
    tl, th = _tail_bound(A, B, N)
    return Fraction(lo, 1 << shift) - th, Fraction(hi, 1 << shift) + th


def _int_eval(p: list[int], n: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * n + c
    return acc


def _tail_bound(A: list[int], B: list[int], N: int) -> tuple[Fraction, Fraction]:
    """0 <= |sum_{n>N} A/B| <= bound, via |A(n)| <= SA n^degA,
    |B(n)| >= LB n^degB for n > N."""
    if not trim(list(A)):
        return Fraction(0), Fraction(0)
    dA, dB = degree(A), degree(B)
    SA = sum(abs(Fraction(c)) for c in A)
    LB = abs(Fraction(B[-1])) - sum(Fraction(abs(c), N ** (dB - i))
                                    for i, c in enumerate(B[:-1]))
    if LB <= 0:
        raise ValueError(f"truncation point N={N} too small for tail bound")
    k = dB - dA
    bound = SA / LB * Fraction(1, (k - 1) * N ** (k - 1))
    return Fraction(0), bound
