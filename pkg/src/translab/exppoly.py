"""Exponential polynomials sum lambda_i e^(mu_i z): ring operations, support
classification, simple-case Ritt factorization, the sin(pi z) division
algorithm, zero-count bounds and certified zero counting, and interpolation
determinant checks.

Exponents live in a Q-vector space over declared basis symbols; each symbol
carries an exact embedding value (a Gaussian rational, optionally times pi).
Equality of exponents is decided exactly on the coordinates/values - ball
exponents are rejected by every operation that needs decidable equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .balls import Ball, PrecisionExhausted
from .polyops import rational_roots, trim
from .rootiso import certified_roots
from .scalars import ExactScalar, as_scalar


class NotSimpleError(ValueError):
    """Ritt simple factorization requires dim_Q spt(f) = 1."""


class HypothesisViolated(ValueError):
    """The structural assumption of an algorithm failed on this input."""


class DuplicateExponentError(ValueError):
    pass


class ZeroOnBoundaryError(RuntimeError):
    """Certified zero counting found (or could not exclude) a zero on |z|=R."""


PI_I = "__pi_i__"   # reserved symbol name: value pi * i


@dataclass(frozen=True)
class ExpSymbol:
    """A basis symbol with exact embedding value ``scalar * pi^pi_power``."""

    name: str
    scalar: ExactScalar
    pi_power: int = 0

    def value_ball(self, prec: int) -> Ball:
        v = Ball.from_scalar(self.scalar, prec)
        if self.pi_power:
            v = v * Ball.pi(prec).pow_int(self.pi_power)
        return v


def pi_i_symbol() -> ExpSymbol:
    return ExpSymbol(PI_I, ExactScalar(0, 1), 1)


class ExpPoly:
    """Finite table exponent-vector -> coefficient over a symbol basis."""

    def __init__(self, basis: Sequence[ExpSymbol],
                 terms: dict[tuple[Fraction, ...], ExactScalar] | None = None):
        self.basis = tuple(basis)
        self.terms: dict[tuple[Fraction, ...], ExactScalar] = {}
        if terms:
            for k, v in terms.items():
                if v:
                    self.terms[tuple(Fraction(c) for c in k)] = v

    # -- construction helpers -------------------------------------------

    @classmethod
    def constant(cls, c, basis: Sequence[ExpSymbol] = ()) -> "ExpPoly":
        c = as_scalar(c)
        zero = tuple(Fraction(0) for _ in basis)
        return cls(basis, {zero: c} if c else {})

    @classmethod
    def term(cls, coeff, coords, basis: Sequence[ExpSymbol]) -> "ExpPoly":
        return cls(basis, {tuple(Fraction(c) for c in coords): as_scalar(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return (isinstance(other, ExpPoly) and self.basis == other.basis
                and self.terms == other.terms)

    def __repr__(self):
        return f"ExpPoly({self.to_text()})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        names = [s.name for s in self.basis]
        parts = []
        for k in sorted(self.terms, key=str):
            lam = self.terms[k]
            mu = "+".join(f"{c}*{n}" for c, n in zip(k, names) if c) or "0"
            parts.append(f"({lam})*exp(({mu})*z)")
        return " + ".join(parts)

    # -- basis management -------------------------------------------------

    def with_basis(self, basis: Sequence[ExpSymbol]) -> "ExpPoly":
        """Re-coordinatize onto a superset basis (symbols matched by name)."""
        basis = tuple(basis)
        idx = {s.name: i for i, s in enumerate(basis)}
        for s in self.basis:
            if s.name not in idx or basis[idx[s.name]] != s:
                raise ValueError(f"basis mismatch for symbol {s.name}")
        out: dict[tuple[Fraction, ...], ExactScalar] = {}
        for k, v in self.terms.items():
            nk = [Fraction(0)] * len(basis)
            for c, s in zip(k, self.basis):
                nk[idx[s.name]] = c
            out[tuple(nk)] = v
        return ExpPoly(basis, out)


def union_basis(a: ExpPoly, b: ExpPoly) -> tuple[ExpSymbol, ...]:
    seen = {s.name: s for s in a.basis}
    for s in b.basis:
        if s.name in seen:
            if seen[s.name] != s:
                raise ValueError(f"conflicting symbol {s.name}")
        else:
            seen[s.name] = s
    return tuple(seen.values())


def ep_add(f: ExpPoly, g: ExpPoly) -> ExpPoly:
    basis = union_basis(f, g)
    fa, ga = f.with_basis(basis), g.with_basis(basis)
    out = dict(fa.terms)
    for k, v in ga.terms.items():
        cur = out.get(k, as_scalar(0)) + v
        if cur:
            out[k] = cur
        else:
            out.pop(k, None)
    return ExpPoly(basis, out)


def ep_neg(f: ExpPoly) -> ExpPoly:
    return ExpPoly(f.basis, {k: -v for k, v in f.terms.items()})


def ep_sub(f: ExpPoly, g: ExpPoly) -> ExpPoly:
    return ep_add(f, ep_neg(g))


def ep_mul(f: ExpPoly, g: ExpPoly) -> ExpPoly:
    """Exponentwise convolution; units are the single-term elements."""
    basis = union_basis(f, g)
    fa, ga = f.with_basis(basis), g.with_basis(basis)
    out: dict[tuple[Fraction, ...], ExactScalar] = {}
    for k1, v1 in fa.terms.items():
        for k2, v2 in ga.terms.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            cur = out.get(k, as_scalar(0)) + v1 * v2
            if cur:
                out[k] = cur
            else:
                out.pop(k, None)
    return ExpPoly(basis, out)


def ep_scale(f: ExpPoly, c) -> ExpPoly:
    c = as_scalar(c)
    if not c:
        return ExpPoly(f.basis, {})
    return ExpPoly(f.basis, {k: v * c for k, v in f.terms.items()})


# ----------------------------------------------------------------------
# evaluation
# ----------------------------------------------------------------------

def exponent_value_ball(f: ExpPoly, coords, prec: int) -> Ball:
    acc = Ball.exact_int(0, prec)
    for c, s in zip(coords, f.basis):
        if c:
            acc = acc + Ball.from_fraction(c, prec) * s.value_ball(prec)
    return acc


def exponent_value_exact(f: ExpPoly, coords) -> Optional[ExactScalar]:
    """Exact value of an exponent when no pi-carrying symbol participates."""
    acc = as_scalar(0)
    for c, s in zip(coords, f.basis):
        if c:
            if s.pi_power:
                return None
            acc = acc + as_scalar(c) * s.scalar
    return acc


def ep_eval(f: ExpPoly, z: Ball, derivative: int = 0) -> Ball:
    """f^(derivative)(z) = sum lambda_i mu_i^d e^(mu_i z), in balls."""
    prec = z.prec
    acc = Ball.exact_int(0, prec)
    for k, lam in f.terms.items():
        mu = exponent_value_ball(f, k, prec)
        t = Ball.from_scalar(lam, prec) * (mu * z).exp()
        if derivative:
            t = t * mu.pow_int(derivative)
        acc = acc + t
    return acc


# ----------------------------------------------------------------------
# support
# ----------------------------------------------------------------------

def _q_rank(vectors: list[tuple[Fraction, ...]]) -> tuple[int, list[int]]:
    """Fraction-free rank; returns (rank, indices of a row basis)."""
    rows = [list(v) for v in vectors]
    n = len(rows[0]) if rows else 0
    basis_rows: list[int] = []
    pivots: list[tuple[int, list[Fraction]]] = []
    for ri, row in enumerate(rows):
        r = list(row)
        for (pc, pr) in pivots:
            if r[pc]:
                factor = r[pc] / pr[pc]
                r = [a - factor * b for a, b in zip(r, pr)]
        nz = next((j for j, a in enumerate(r) if a), None)
        if nz is not None:
            pivots.append((nz, r))
            basis_rows.append(ri)
    return len(pivots), basis_rows


def support_dim(f: ExpPoly) -> tuple[int, list[tuple[Fraction, ...]]]:
    """(dim_Q spt(f), a Q-basis of the exponent span as coordinate vectors)."""
    if f.is_zero():
        raise ValueError("support of the zero exponential polynomial")
    vecs = [k for k in f.terms if any(k)]
    if not vecs:
        return 0, []
    rank, rows = _q_rank(vecs)
    return rank, [vecs[i] for i in rows]


def is_simple(f: ExpPoly) -> bool:
    return support_dim(f)[0] == 1


# ----------------------------------------------------------------------
# Ritt factorization, simple case
# ----------------------------------------------------------------------

@dataclass
class RittFactorization:
    """f = unit * prod_l (1 - alpha_l e^(rho z)): unit is the single term
    unit_coeff * e^(unit_exponent z), rho is the generator exponent (as
    coordinates over f's basis), alphas are exact scalars or root balls."""

    basis: tuple[ExpSymbol, ...]
    unit_coeff: ExactScalar
    unit_exponent: tuple[Fraction, ...]
    rho: tuple[Fraction, ...]
    alphas: list           # ExactScalar | Ball


def ritt_factor_simple(f: ExpPoly, precision: int = 128) -> RittFactorization:
    """Factor a simple exponential polynomial into its Laurent linear factors.

    The generator is normalized so the integer exponents are >= 0 with gcd 1
    and the lowest term has exponent 0.
    """
    dim, basis_vecs = support_dim(f)
    if dim != 1:
        raise NotSimpleError(f"support dimension {dim} != 1")
    v0 = basis_vecs[0]
    j0 = next(j for j, c in enumerate(v0) if c)
    # every exponent is t_i * v0 with t_i rational
    keys = list(f.terms)
    ts = []
    for k in keys:
        t = Fraction(k[j0], v0[j0])
        if tuple(t * c for c in v0) != k:
            raise NotSimpleError("exponents not collinear")  # defensive
        ts.append(t)
    L = math.lcm(*[t.denominator for t in ts])
    ns = [int(t * L) for t in ts]
    n_min = min(ns)
    ns = [n - n_min for n in ns]
    g = math.gcd(*[n for n in ns if n]) if any(ns) else 1
    ns = [n // g for n in ns]
    rho = tuple(c * Fraction(g, L) for c in v0)
    unit_exp = tuple(c * Fraction(n_min, L) for c in v0)
    # Laurent polynomial T(w) = sum lambda_i w^(n_i), T(0) != 0
    deg = max(ns)
    coeffs = [as_scalar(0)] * (deg + 1)
    for k, n in zip(keys, ns):
        coeffs[n] = coeffs[n] + f.terms[k]
    coeffs = trim(coeffs)
    unit_coeff = coeffs[0]
    alphas: list = []
    rest = coeffs
    if all(c.is_rational for c in rest):
        rq = [c.re for c in rest]
        for root in rational_roots(rq):
            while True:
                quot, rem = _divmod_linear(rq, root)
                if rem != 0:
                    break
                alphas.append(as_scalar(1 / root))
                rq = quot
        rest = [as_scalar(c) for c in rq]
    if len(rest) > 1:
        for ball, mult in certified_roots(rest, precision):
            inv = ball.inverse()
            for _ in range(mult):
                alphas.append(inv)
    return RittFactorization(f.basis, unit_coeff, unit_exp, rho, alphas)


def _divmod_linear(p: list[Fraction], root: Fraction):
    """p = (X - root) q + rem."""
    q = []
    carry = Fraction(0)
    for c in reversed(p):
        carry = carry * root + c
        q.append(carry)
    q.reverse()
    return q[1:], q[0]


def ritt_expand(fact: RittFactorization, prec: int = 128):
    """Multiply the factorization back out; coefficients become balls when
    any alpha is a ball.  Returns {integer exponent multiple of rho: Ball}."""
    acc: dict[int, Ball] = {0: Ball.from_scalar(fact.unit_coeff, prec)}
    for a in fact.alphas:
        ab = a if isinstance(a, Ball) else Ball.from_scalar(a, prec)
        new: dict[int, Ball] = {}
        for n, c in acc.items():
            new[n] = new.get(n, Ball.exact_int(0, prec)) + c
            key = n + 1
            v = -(c * ab)
            new[key] = new.get(key, Ball.exact_int(0, prec)) + v
        acc = new
    return acc


# ----------------------------------------------------------------------
# division by sin(pi z)
# ----------------------------------------------------------------------

def _pi_i_coord(f: ExpPoly, coords) -> tuple[ExactScalar, Fraction]:
    """Split an exponent into (a-part value, b) with mu = a + b * pi*i.

    Requires every pi-carrying symbol to contribute a rational multiple of
    pi*i; raises HypothesisViolated otherwise.
    """
    a = as_scalar(0)
    b = Fraction(0)
    for c, s in zip(coords, f.basis):
        if not c:
            continue
        if s.pi_power == 0:
            a = a + as_scalar(c) * s.scalar
        elif s.pi_power == 1:
            v = as_scalar(c) * s.scalar
            if v.re != 0:
                raise HypothesisViolated("exponent has a real pi part")
            b += v.im
        else:
            raise HypothesisViolated("exponent with higher pi power")
    return a, b


def divide_by_sin(f: ExpPoly, precision: int = 128,
                  verify_points: int = 16) -> ExpPoly:
    """Cofactor G with f = sin(pi z) G, for f vanishing at all integers.

    Implements the inductive pairing argument: find mu_i, mu_j with
    e^(mu_i) = e^(mu_j) (decidable here: equal a-parts, pi*i parts differing
    by an even integer), peel off lambda (e^(mu_i z) - e^(mu_j z)) =
    sin(pi z) * (-2i e^((mu_i + pi i) z) sum_{t<k} e^(2 t pi i z)), recurse.
    The result is verified by ball evaluation at random sample points.
    """
    basis = tuple(f.basis)
    if not any(s.name == PI_I for s in basis):
        basis = basis + (pi_i_symbol(),)
    work = f.with_basis(basis)
    pii_idx = next(i for i, s in enumerate(basis) if s.name == PI_I)

    g_terms: dict[tuple[Fraction, ...], ExactScalar] = {}

    def add_g(coords, coeff):
        cur = g_terms.get(coords, as_scalar(0)) + coeff
        if cur:
            g_terms[coords] = cur
        else:
            g_terms.pop(coords, None)

    terms = dict(work.terms)
    while terms:
        if len(terms) == 1:
            raise HypothesisViolated(
                "a single exponential term cannot vanish on the integers")
        keys = list(terms)
        pair = None
        split = {k: _pi_i_coord(work, k) for k in keys}
        for i in range(len(keys)):
            for j in range(i + 1, len(keys)):
                ai, bi = split[keys[i]]
                aj, bj = split[keys[j]]
                if ai == aj:
                    d = bi - bj
                    if d.denominator == 1 and int(d) % 2 == 0 and d != 0:
                        pair = (keys[i], keys[j]) if d < 0 else (keys[j], keys[i])
                        break
            if pair:
                break
        if pair is None:
            raise HypothesisViolated(
                "no exponent pair with e^(mu_i) = e^(mu_j); "
                "f cannot vanish on all integers")
        ki, kj = pair               # mu_j = mu_i + 2k pi i with k > 0
        lam = terms[kj]
        # merge: h = f - lam (e^(mu_j z) - e^(mu_i z)) removes term j
        terms.pop(kj)
        cur = terms.get(ki, as_scalar(0)) + lam
        if cur:
            terms[ki] = cur
        else:
            terms.pop(ki, None)
        # lam (e^(mu_j z) - e^(mu_i z)) = lam e^(mu_i z)(e^(2k pi i z) - 1)
        #   = sin(pi z) * 2i lam sum_{t=0}^{k-1} e^((mu_i + (2t+1) pi i) z)
        kgap = int(split[kj][1] - split[ki][1]) // 2
        coef = ExactScalar(0, 2) * lam
        for t in range(kgap):
            coords = list(ki)
            coords[pii_idx] = coords[pii_idx] + 2 * t + 1
            add_g(tuple(coords), coef)

    G = ExpPoly(basis, g_terms)
    _verify_sin_division(f, G, precision, verify_points)
    return G


def sin_pi_z(basis: Sequence[ExpSymbol]) -> ExpPoly:
    """sin(pi z) = (e^(i pi z) - e^(-i pi z)) / 2i on a basis containing the
    reserved pi*i symbol."""
    basis = tuple(basis)
    pii_idx = next(i for i, s in enumerate(basis) if s.name == PI_I)
    plus = [Fraction(0)] * len(basis)
    plus[pii_idx] = Fraction(1)
    minus = [Fraction(0)] * len(basis)
    minus[pii_idx] = Fraction(-1)
    half_over_i = ExactScalar(0, Fraction(-1, 2))   # 1/(2i)
    return ExpPoly(basis, {tuple(plus): half_over_i,
                           tuple(minus): -half_over_i})


def _verify_sin_division(f: ExpPoly, G: ExpPoly, precision: int, points: int):
    import random
    rng = random.Random(20271 + len(G.terms))
    s = sin_pi_z(G.basis)
    prod = ep_mul(s, G)
    diff = ep_sub(f.with_basis(G.basis), prod)
    for _ in range(points):
        re = Fraction(rng.randint(-3000, 3000), 1000)
        im = Fraction(rng.randint(-3000, 3000), 1000)
        z = Ball.complex_from(Ball.from_fraction(re, precision),
                              Ball.from_fraction(im, precision))
        v = ep_eval(diff, z)
        if not v.contains_zero():
            raise ArithmeticError("sin-division verification failed")


# ----------------------------------------------------------------------
# polynomial-coefficient exponential sums and zero bounds
# ----------------------------------------------------------------------

@dataclass
class PolyExpPoly:
    """sum_j P_j(z) e^(mu_j z) with exact polynomial coefficients."""

    terms: list[tuple[list, ExactScalar]]   # (ascending ExactScalar coeffs, mu)

    def __post_init__(self):
        clean = []
        for coeffs, mu in self.terms:
            cs = [as_scalar(c) if not isinstance(c, ExactScalar) else c
                  for c in coeffs]
            while cs and not cs[-1]:
                cs.pop()
            if cs:
                clean.append((cs, as_scalar(mu) if not isinstance(mu, ExactScalar) else mu))
        self.terms = clean
        mus = [mu for _, mu in self.terms]
        if len({(m.re, m.im) for m in mus}) != len(mus):
            raise DuplicateExponentError("exponents must be pairwise distinct")

    @property
    def degree_sum(self) -> int:
        return sum(len(c) - 1 for c, _ in self.terms)

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    @property
    def big_d(self) -> int:
        return sum(len(c) for c, _ in self.terms)

    def omega_upper(self, prec: int = 64) -> Fraction:
        out = Fraction(0)
        for _, mu in self.terms:
            out = max(out, Ball.from_scalar(mu, prec).abs_upper())
        return out

    def eval(self, z: Ball) -> Ball:
        prec = z.prec
        acc = Ball.exact_int(0, prec)
        for coeffs, mu in self.terms:
            p = Ball.exact_int(0, prec)
            for c in reversed(coeffs):
                p = p * z + Ball.from_scalar(c, prec)
            acc = acc + p * (Ball.from_scalar(mu, prec) * z).exp()
        return acc


def real_zero_bound(f: PolyExpPoly) -> int:
    """d_1 + ... + d_n + n - 1: real zeros counting multiplicities (real
    pairwise-distinct exponents)."""
    if not f.terms:
        raise ValueError("zero function")
    for _, mu in f.terms:
        if not mu.is_real:
            raise ValueError("real bound needs real exponents")
    return f.degree_sum + f.n_terms - 1


def complex_zero_bound(f: PolyExpPoly, R: Fraction, sharp: bool = False) -> int:
    """Zeros in |z| <= R: ceil of 3(D-1) + 4 R Omega, or of the appendix
    variant 2(D-1) + (4/pi) R Omega (exposed but never relied upon)."""
    if not f.terms:
        raise ValueError("zero function")
    R = Fraction(R)
    D = f.big_d
    om = f.omega_upper()
    if sharp:
        four_over_pi = Fraction(4_000_000_000_001, 3_141_592_653_589)  # > 4/pi
        val = 2 * (D - 1) + four_over_pi * R * om
    else:
        val = 3 * (D - 1) + 4 * R * om
    return int(math.ceil(val))


def count_zeros_numeric(f: PolyExpPoly, R: Fraction, precision: int = 96,
                        max_arcs: int = 1 << 16) -> int:
    """Winding number of f around |z| = R by certified argument tracking.

    Each arc's image ball must satisfy rad < |mid|/2 (so the argument moves
    by less than pi/3 along the arc and principal values sum correctly);
    arcs refine adaptively, and an image ball still containing 0 at the
    refinement cap reports a boundary zero.
    """
    R = Fraction(R)
    prec = precision + 32
    pi2 = Ball.pi(prec) * 2

    def point(theta: Fraction) -> Ball:
        ang = Ball.pi(prec) * Ball.from_fraction(2 * theta, prec)
        z = Ball.complex_from(Ball.exact_int(0, prec), ang).exp()
        return z * Ball.from_fraction(R, prec)

    def arc_ball(t0: Fraction, t1: Fraction) -> Ball:
        ang = Ball.pi(prec) * Ball.from_interval(2 * t0, 2 * t1, prec)
        z = Ball.complex_from(Ball.exact_int(0, prec), ang).exp()
        return z * Ball.from_fraction(R, prec)

    # adaptive subdivision of [0,1)
    arcs = [(Fraction(i, 8), Fraction(i + 1, 8)) for i in range(8)]
    good: list[tuple[Fraction, Fraction]] = []
    while arcs:
        if len(good) + len(arcs) > max_arcs:
            raise ZeroOnBoundaryError("refinement cap hit: cannot exclude a "
                                      "zero on (or too near) the circle")
        t0, t1 = arcs.pop()
        img = f.eval(arc_ball(t0, t1))
        if img.abs_lower() > 2 * img.rad_fraction():
            good.append((t0, t1))
        else:
            tm = (t0 + t1) / 2
            if t1 - t0 < Fraction(1, max_arcs):
                raise ZeroOnBoundaryError("zero on or near |z| = R")
            arcs.append((t0, tm))
            arcs.append((tm, t1))
    good.sort()
    total = Ball.exact_int(0, prec)
    vals = {}
    for t0, t1 in good:
        v0 = vals.get(t0)
        if v0 is None:
            v0 = f.eval(point(t0))
            vals[t0] = v0
        v1 = vals.get(t1 % 1)
        if v1 is None:
            v1 = f.eval(point(t1 % 1))
            vals[t1 % 1] = v1
        ratio = v1 / v0
        total = total + ratio.arg()
    w = total / pi2
    lo, hi = w.lower(), w.upper()
    n = round((lo + hi) / 2)
    if not (lo > n - Fraction(1, 2) and hi < n + Fraction(1, 2)):
        raise PrecisionExhausted("winding enclosure did not isolate an integer")
    return n


# ----------------------------------------------------------------------
# interpolation determinants
# ----------------------------------------------------------------------

@dataclass
class InterpDetReport:
    L: int
    det: Ball
    bound: Ball
    holds: bool          # certified-not-violated: lower|det| <= upper bound
    strict: bool         # certified strict: upper|det| <= lower bound
    sigmas: Optional[tuple[int, ...]] = None


def _sup_norm_upper(f: ExpPoly, R: Fraction, sigma: int, prec: int) -> Ball:
    """Upper ball for sup_{|z|=R} |f^(sigma)|: sum |lambda| |mu|^sigma e^(|mu| R)."""
    acc = Ball.exact_int(0, prec)
    Rb = Ball.from_fraction(R, prec)
    for k, lam in f.terms.items():
        mu = exponent_value_ball(f, k, prec)
        t = abs(Ball.from_scalar(lam, prec)) * (abs(mu) * Rb).exp()
        if sigma:
            t = t * abs(mu).pow_int(sigma)
        acc = acc + t
    return acc


def _det_ball(M: list[list[Ball]], prec: int) -> Ball:
    L = len(M)
    if L == 1:
        return M[0][0]
    acc = Ball.exact_int(0, prec)
    for j in range(L):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        t = M[0][j] * _det_ball(minor, prec)
        acc = acc + t if j % 2 == 0 else acc - t
    return acc


def interp_det_check(fs: Sequence[ExpPoly], zetas: Sequence[Ball],
                     r: Fraction, R: Fraction,
                     sigmas: Optional[Sequence[int]] = None,
                     precision: int = 128) -> InterpDetReport:
    """|det(f_j^(sigma_i)(zeta_i))| against (R/r)^(-L(L-1)/2 + sum sigma) L!
    prod_j max_i sup_{|z|=R} |f_j^(sigma_i)|."""
    L = len(fs)
    if L < 1 or len(zetas) != L:
        raise ValueError("need L >= 1 functions and L points")
    r, R = Fraction(r), Fraction(R)
    if not (0 < r <= R):
        raise ValueError("need 0 < r <= R")
    prec = precision + 16
    sig = tuple(int(s) for s in sigmas) if sigmas is not None else tuple([0] * L)
    M = [[ep_eval(fs[j], zetas[i].round_to(prec), derivative=sig[i])
          for j in range(L)] for i in range(L)]
    det = abs(_det_ball(M, prec))
    T = Fraction(L * (L - 1), 2) - sum(sig)
    ratio = Ball.from_fraction(R / r, prec)
    bound = Ball.exact_int(math.factorial(L), prec)
    # (R/r)^(-T) with T possibly negative after the derivative correction
    Tnum = Fraction(T)
    bound = bound * ratio.pow_int(-Tnum.numerator) if Tnum.denominator == 1 \
        else bound
    for j in range(L):
        norm = _sup_norm_upper(fs[j], R, sig[0], prec)
        for s in sig[1:]:
            cand = _sup_norm_upper(fs[j], R, s, prec)
            if cand.upper() > norm.upper():
                norm = cand
        bound = bound * norm
    holds = det.lower() <= bound.upper()
    strict = det.upper() <= bound.lower()
    return InterpDetReport(L, det.round_to(precision), bound.round_to(precision),
                           holds, strict, sig if sigmas is not None else None)


# ----------------------------------------------------------------------
# CLI-facing parser
# ----------------------------------------------------------------------

def parse_symbols(spec: str) -> tuple[ExpSymbol, ...]:
    """Parse ``s1=1,s2=2i,s3=pi*i`` into basis symbols."""
    out = []
    if not spec:
        return ()
    for part in spec.split(","):
        name, _, val = part.partition("=")
        name, val = name.strip(), val.strip()
        if not name or not val:
            raise ValueError(f"bad symbol declaration {part!r}")
        pi_pow = 0
        if val.startswith("pi*"):
            pi_pow, val = 1, val[3:]
        elif val == "pi":
            pi_pow, val = 1, "1"
        out.append(ExpSymbol(name, ExactScalar.parse(val), pi_pow))
    return tuple(out)


def parse_exppoly(text: str, basis: Sequence[ExpSymbol]) -> ExpPoly:
    """Parse ``c1*exp(m1*z) + c2*exp(m2*z) + c0`` with coefficients and
    exponent coordinates rational (or Gaussian) over the declared symbols."""
    basis = tuple(basis)
    idx = {s.name: i for i, s in enumerate(basis)}
    f = ExpPoly(basis, {})
    for raw in _split_terms(text):
        coeff_s, _, expo = raw.partition("*exp(")
        if not expo:
            f = ep_add(f, ExpPoly.constant(ExactScalar.parse(raw), basis))
            continue
        if not expo.endswith("*z)"):
            raise ValueError(f"exponent must end with '*z)': {raw!r}")
        body = expo[:-3]
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        coords = [Fraction(0)] * len(basis)
        for piece in _split_terms(body):
            piece = piece.strip()
            sign = 1
            if piece.startswith("-"):
                sign, piece = -1, piece[1:].strip()
            mult, _, sym = piece.rpartition("*")
            sym = sym.strip()
            if sym not in idx:
                raise ValueError(f"undeclared symbol {sym!r}")
            q = Fraction(mult) if mult else Fraction(1)
            coords[idx[sym]] += sign * q
        f = ep_add(f, ExpPoly.term(ExactScalar.parse(coeff_s), coords, basis))
    return f


def _split_terms(text: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur and cur[-1].strip() not in ("*", "(", "+", "-", "e"):
            out.append("".join(cur).strip())
            cur = [ch] if ch == "-" else []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur).strip())
    return [t for t in out if t]
