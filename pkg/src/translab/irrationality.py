"""Irrationality certificates: Beukers double integrals for zeta(2)/zeta(3),
Pade-type approximants to e^x, Liouville numbers and their transforms, and
the generic |q_n x - p_n| -> 0 evidence checker.

The Beukers coefficients are exact: the base integrals

    II x^r y^s / (1-xy)            = zeta(2) - H_r^(2)         (r = s)
                                   = (H_r - H_s)/(r - s)        (r > s)
    -II ln(xy) x^r y^s / (1-xy)    = 2 (zeta(3) - H_r^(3))      (r = s)
                                   = (H_r^(2) - H_s^(2))/(r-s)  (r > s)

are rationals plus a zeta multiple, so expanding the Legendre-type kernels
gives I_n = (A_n zeta + B_n)/d_n^e with certified integers; quadrature never
enters the certificate, only the independent test oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .balls import Ball, PrecisionExhausted
from .bernoulli import zeta_even_ball, zeta_ref_ball
from .combinatorics import binomial, harmonic, lcm_upto
from .polyops import degree, evaluate, trim


# ----------------------------------------------------------------------
# shifted Legendre polynomials and Beukers certificates
# ----------------------------------------------------------------------

def shifted_legendre(n: int) -> list[int]:
    """P_n(x) = (1/n!) d^n/dx^n (x^n (1-x)^n) = sum (-1)^k C(n,k)C(n+k,k)x^k."""
    return [(-1) ** k * binomial(n, k) * binomial(n + k, k) for k in range(n + 1)]


def _base_zeta2(r: int, s: int) -> tuple[Fraction, Fraction]:
    """(zeta2-part, rational part) of II x^r y^s/(1-xy) dx dy."""
    if r == s:
        return Fraction(1), -harmonic(r, 2)
    if r < s:
        r, s = s, r
    return Fraction(0), (harmonic(r, 1) - harmonic(s, 1)) / (r - s)


def _base_zeta3(r: int, s: int) -> tuple[Fraction, Fraction]:
    """(zeta3-part, rational part) of -II ln(xy) x^r y^s/(1-xy) dx dy."""
    if r == s:
        return Fraction(2), -2 * harmonic(r, 3)
    if r < s:
        r, s = s, r
    return Fraction(0), (harmonic(r, 2) - harmonic(s, 2)) / (r - s)


@dataclass(frozen=True)
class BeukersCertificate:
    """Exact integers A, B with I_n = (A zeta + B)/d_n^e, plus certified
    enclosures of the integral and of its shrinking upper bound."""

    target: str          # "zeta2" | "zeta3"
    n: int
    A: int
    B: int
    d: int
    I: Ball
    bound: Ball

    def to_json_dict(self) -> dict:
        return {
            "target": self.target,
            "n": self.n,
            "A": str(self.A),
            "B": str(self.B),
            "d": str(self.d),
            "I": {"mid": str(self.I.mid), "rad": str(self.I.rad)},
            "bound": {"mid": str(self.bound.mid), "rad": str(self.bound.rad)},
        }


def _exact_beukers_parts(target: str, n: int) -> tuple[Fraction, Fraction]:
    """Exact (a, b) with I_n = a*zeta + b."""
    P = shifted_legendre(n)
    a = b = Fraction(0)
    if target == "zeta2":
        Q = [binomial(n, s) * (-1) ** s for s in range(n + 1)]  # (1-y)^n
        for k, pk in enumerate(P):
            if not pk:
                continue
            for s, qs in enumerate(Q):
                if not qs:
                    continue
                za, rb = _base_zeta2(k, s)
                a += pk * qs * za
                b += pk * qs * rb
    elif target == "zeta3":
        for k, pk in enumerate(P):
            if not pk:
                continue
            for s, ps in enumerate(P):
                if not ps:
                    continue
                za, rb = _base_zeta3(k, s)
                a += pk * ps * za
                b += pk * ps * rb
    else:
        raise ValueError("target must be 'zeta2' or 'zeta3'")
    return a, b


def _needed_prec(target: str, n: int, precision: int) -> int:
    # |I_n| shrinks like 0.09^n (zeta2) / 0.03^n (zeta3) while A_n grows,
    # so resolving the cancellation needs ~ n log2(27 d^3) extra bits
    return precision + 12 * n + 64


def beukers_certificate(target: str, n: int, precision: int = 128) -> BeukersCertificate:
    e = 2 if target == "zeta2" else 3
    a, b = _exact_beukers_parts(target, n)
    d = lcm_upto(n)
    A, B = a * d**e, b * d**e
    if A.denominator != 1 or B.denominator != 1:
        raise ArithmeticError(f"d_n^{e} did not clear the denominators at n={n}")
    prec = _needed_prec(target, n, precision)
    zeta = zeta_even_ball(1, prec) if e == 2 else zeta_ref_ball(3, prec)
    I = (Ball.from_fraction(a, prec) * zeta + Ball.from_fraction(b, prec))
    if target == "zeta2":
        # ((sqrt5 - 1)/2)^(5n) * zeta(2),  cf. the max of x(1-x)y(1-y)/(1-xy)
        g = (Ball.exact_int(5, prec).sqrt() - 1) / 2
        bound = g.pow_int(5 * n) * zeta
    else:
        bound = Ball.from_fraction(Fraction(2, 27**n), prec) * zeta
    return BeukersCertificate(target, n, int(A), int(B), d,
                              I.round_to(precision), bound.round_to(precision))


beukers_zeta2 = lambda n, precision=128: beukers_certificate("zeta2", n, precision)
beukers_zeta3 = lambda n, precision=128: beukers_certificate("zeta3", n, precision)


@dataclass
class GapReport:
    """Tabulated contradiction engine: s_n = |I_n| d_n^e must shrink
    geometrically for the irrationality argument to close."""

    target: str
    rows: list[dict]
    rate: Ball                    # (s_N / s_1)^(1/(N-1))
    rate_in_unit_interval: bool   # certified 0 < rate < 0.95

    def __str__(self):
        lines = [f"gap report for {self.target}: rate in (0, 0.95): "
                 f"{self.rate_in_unit_interval}"]
        for r in self.rows:
            lines.append(f"  n={r['n']:3d} d_n={r['d']} |I_n|<={r['abs_I_upper']:.3e} "
                         f"s_n<={r['s_upper']:.3e} K_eff={r['K_eff']:.4f}")
        return "\n".join(lines)


def irrationality_gap_report(target: str, n_max: int, precision: int = 128) -> GapReport:
    if n_max < 1:
        raise ValueError("n_max >= 1")
    e = 2 if target == "zeta2" else 3
    rows = []
    s_balls = {}
    for n in range(1, n_max + 1):
        cert = beukers_certificate(target, n, precision + 8 * n)
        absI = abs(cert.I)
        s = absI * Ball.exact_int(cert.d ** e, absI.prec)
        s_balls[n] = s
        rows.append({
            "n": n, "d": cert.d,
            "abs_I_upper": float(absI.upper()),
            "s_upper": float(s.upper()),
            "K_eff": float(cert.d) ** (1.0 / n),
        })
    if n_max == 1:
        rate = s_balls[1]
        ok = rate.is_positive() and rate.certainly_lt(Fraction(95, 100))
        return GapReport(target, rows, rate, ok)
    ratio = s_balls[n_max] / s_balls[1]
    rate = (ratio.log() / (n_max - 1)).exp()
    ok = rate.is_positive() and rate.certainly_lt(Fraction(95, 100))
    return GapReport(target, rows, rate, ok)


# ----------------------------------------------------------------------
# Pade-type approximants to e^x
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PadePair:
    """Q_n(x) e^x = P_n(x) + R_n(x), |R_n(x)| <= n! |x|^(2n+1) e^|x| / (2n+1)!."""

    n: int
    P: tuple[int, ...]
    Q: tuple[int, ...]

    def remainder_bound(self, x: Fraction, precision: int = 128) -> Ball:
        n = self.n
        c = Fraction(math.factorial(n) * abs(Fraction(x)) ** (2 * n + 1),
                     math.factorial(2 * n + 1))
        return (Ball.from_fraction(abs(Fraction(x)), precision).exp()
                * Ball.from_fraction(c, precision))

    def defect(self, x: Fraction, precision: int = 128) -> Ball:
        """|Q_n(x) e^x - P_n(x)| as a ball."""
        xb = Ball.from_fraction(Fraction(x), precision)
        q = Ball.from_fraction(Fraction(evaluate(list(self.Q), Fraction(x))), precision)
        p = Ball.from_fraction(Fraction(evaluate(list(self.P), Fraction(x))), precision)
        return abs(q * xb.exp() - p)


def pade_exp(n: int) -> PadePair:
    """T_n(X) = prod_{j=n+1}^{2n} (X - j); Q_n from T_n(x d/dx) e^x via the
    Stirling expansion (x d/dx)^m e^x = e^x sum_l S(m,l) x^l, and
    P_n(x) = sum_{k<=n} T_n(k) x^k / k! (integral coefficients)."""
    from .combinatorics import stirling2
    if n < 1:
        raise ValueError("n >= 1")
    T = [1]
    for j in range(n + 1, 2 * n + 1):
        T = [a - j * b for a, b in zip([0] + T, T + [0])]
    # T built as prod (X - j): T holds ascending coefficients
    Q = [0] * (n + 1)
    for m, tm in enumerate(T):
        if not tm:
            continue
        for ell in range(m + 1):
            Q[ell] += tm * stirling2(m, ell)
    P = []
    for k in range(n + 1):
        tk = evaluate([Fraction(c) for c in T], Fraction(k))
        pk = Fraction(tk, math.factorial(k))
        assert pk.denominator == 1
        P.append(int(pk))
    assert Q[n] == 1  # monic-leading normalization (x^n + ...)
    return PadePair(n, tuple(P), tuple(trim(Q)))


def pade_T_poly(n: int) -> list[int]:
    T = [1]
    for j in range(n + 1, 2 * n + 1):
        T = [a - j * b for a, b in zip([0] + T, T + [0])]
    return T


# ----------------------------------------------------------------------
# Liouville numbers
# ----------------------------------------------------------------------

class AllZeroTailError(ValueError):
    """The digit rule is eventually zero: the sum is rational, not Liouville."""


@dataclass(frozen=True)
class DigitRule:
    """Eventually-periodic digit rule j -> m_j (j >= 1), or a bounded-lookahead
    generator carrying a nonzero-window certificate.

    For the periodic form the nonzero-infinitely-often certificate is simply
    a nonzero digit in the period.  For a generator, ``nonzero_stride`` is the
    caller's guarantee that every window of that length contains a nonzero
    digit (it is spot-checked whenever digits are materialized).
    """

    base: int
    preperiod: tuple[int, ...] = ()
    period: tuple[int, ...] = (1,)
    generator: Optional[Callable[[int], int]] = None
    nonzero_stride: Optional[int] = None

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base >= 2")
        if self.generator is None:
            digits = self.preperiod + self.period
            if any(not (0 <= d < self.base) for d in digits):
                raise ValueError("digits out of range")
            if not any(self.period):
                raise AllZeroTailError("period is all zero; the value is rational")
        elif self.nonzero_stride is None:
            raise ValueError("generator rules need a nonzero_stride certificate")

    def digit(self, j: int) -> int:
        if j < 1:
            raise IndexError("digit index starts at 1")
        if self.generator is not None:
            d = self.generator(j)
            if not (0 <= d < self.base):
                raise ValueError(f"generator digit out of range at {j}")
            return d
        if j <= len(self.preperiod):
            return self.preperiod[j - 1]
        return self.period[(j - len(self.preperiod) - 1) % len(self.period)]

    def first_nonzero_after(self, k: int) -> int:
        limit = (k + (self.nonzero_stride or 0) + len(self.preperiod)
                 + len(self.period) + 1)
        for j in range(k + 1, limit + 1):
            if self.digit(j):
                return j
        raise AllZeroTailError(f"no nonzero digit found in ({k}, {limit}]")


@dataclass(frozen=True)
class LiouvilleNumber:
    """x = sum_j m_j / b^(j!) with infinitely many nonzero digits."""

    rule: DigitRule

    @property
    def base(self) -> int:
        return self.rule.base

    def convergent(self, k: int) -> tuple[int, int]:
        """(p_k, q_k) with q_k = b^(k!), unreduced.

        Runs on gmpy2.mpz: the exponents reach k! and CPython's bignum pow
        is far too slow past k ~ 8.
        """
        import gmpy2
        b = gmpy2.mpz(self.base)
        kf = math.factorial(k)
        # Horner over the descending exponents k!-1!, k!-2!, ..., 0
        p = gmpy2.mpz(self.rule.digit(1))
        for j in range(2, k + 1):
            p = p * b ** (math.factorial(j) - math.factorial(j - 1)) \
                + self.rule.digit(j)
        return int(p), int(b**kf)

    def verify_definition(self, k: int) -> bool:
        """Exact check of 0 < x - p_k/q_k < q_k^(-k).

        Uses only exponent arithmetic: positivity from the first nonzero
        digit beyond k, and the strict geometric tail bound
        x - p_k/q_k < b^(1-(k+1)!) <= b^(-k k!) = q_k^(-k).
        """
        if k < 1:
            raise ValueError("k >= 1")
        self.rule.first_nonzero_after(k)  # raises if the tail were zero
        b = self.base
        # strictness: the factorial exponents j! (j > k) are a proper subset
        # of the integers >= (k+1)!, so tail < (b-1) sum_{l>=(k+1)!} b^-l
        return 1 - math.factorial(k + 1) <= -k * math.factorial(k)

    def value_ball(self, precision: int = 128) -> Ball:
        b = self.base
        K = 2
        while math.factorial(K + 1) * math.log2(b) < precision + 8:
            K += 1
        p, q = self.convergent(K)
        lo = Fraction(p, q)
        hi = lo + Fraction(b) ** (1 - math.factorial(K + 1))
        return Ball.from_interval(lo, hi, precision)

    def tail_interval(self, k: int) -> tuple[Fraction, Fraction]:
        """Exact bounds for x - p_k/q_k (positive, strict upper)."""
        b = self.base
        j = self.rule.first_nonzero_after(k)
        lo = Fraction(self.rule.digit(j), b ** math.factorial(j))
        hi = Fraction(b) ** (1 - math.factorial(k + 1))
        return lo, hi


def liouville_from_digits(base: int, rule, horizon: int = 6) -> LiouvilleNumber:
    """Build and validate a Liouville number from a digit rule.

    ``rule`` is a DigitRule, or a (preperiod, period) pair, or a plain
    period tuple.  The type invariant is verified exactly for k <= horizon.
    """
    if isinstance(rule, DigitRule):
        dr = rule
    elif isinstance(rule, tuple) and len(rule) == 2 and isinstance(rule[0], (tuple, list)):
        dr = DigitRule(base, tuple(rule[0]), tuple(rule[1]))
    else:
        dr = DigitRule(base, (), tuple(rule))
    x = LiouvilleNumber(dr)
    for k in range(1, horizon + 1):
        if not x.verify_definition(k):
            raise ArithmeticError(f"Liouville invariant failed at k={k}")
    return x


def liouville_constant(base: int = 10) -> LiouvilleNumber:
    return liouville_from_digits(base, (1,))


# ----------------------------------------------------------------------
# polynomial images of Liouville numbers
# ----------------------------------------------------------------------

@dataclass
class PolyImageWitness:
    """A certified instance of the Liouville inequality for f(x):
    0 < |f(x) - C/q^r| < (q^r)^(-k)."""

    k: int
    m: int
    K: int                 # convergent index used (q = b^(K!))
    C: int
    q: int                 # the convergent denominator b^(K!)
    r: int                 # deg f;  the approximant is C / q^r
    delta_log2: float      # certified lower bound log2(delta)
    M_log2: float          # certified upper bound log2(M)
    verified: bool


def _poly_f_ball(f: list[int], x: Ball) -> Ball:
    acc = Ball.exact_int(0, x.prec)
    for c in reversed(f):
        acc = acc * x + Ball.exact_int(c, x.prec)
    return acc


def _cofactor_ball_coeffs(f: list[int], x: Ball) -> list[Ball]:
    """g with f(X) - f(x) = (X - x) g(X), coefficients as balls."""
    prec = x.prec
    fx = _poly_f_ball(f, x)
    shifted = [Ball.exact_int(c, prec) for c in f]
    shifted[0] = shifted[0] - fx
    out = []
    carry = None
    for c in reversed(shifted):
        carry = c if carry is None else carry * x + c
        out.append(carry)
    return list(reversed(out[:-1]))


def liouville_poly_image(x: LiouvilleNumber, f: list[int], k: int,
                         precision: int = 192) -> PolyImageWitness:
    """Steps for showing f(x) is Liouville, instantiated at level k:
    certify delta and M, pick the minimal admissible m, extract the
    convergent, and verify the resulting strict inequality."""
    f = trim([int(c) for c in f])
    r = degree(f)
    if r < 1:
        raise ValueError("f must be nonconstant")
    if k < 1:
        raise ValueError("k >= 1")
    b = x.base
    prec = precision
    for _attempt in range(4):
        xb = x.value_ball(prec)
        g = _cofactor_ball_coeffs(f, xb)
        # delta: lower bound for the distance from x to the other points of
        # the f(X) = f(x) level set, i.e. to the roots of g:
        # min |x - rho| >= |g(x)| / (|lc(g)| R^(deg g - 1)) with R a Cauchy
        # bound for |x - rho| over all roots rho.
        if r == 1:
            delta = Fraction(1)
        else:
            acc = None
            for c in reversed(g):
                acc = c if acc is None else acc * xb + c
            gx = acc
            glead = g[-1]
            if gx.contains_zero() or glead.contains_zero():
                prec *= 2
                continue
            coef_bound = max(c.abs_upper() for c in g)
            root_bound = 1 + coef_bound / glead.abs_lower()
            R = xb.abs_upper() + root_bound
            delta = min(gx.abs_lower() / (glead.abs_upper() * R ** (r - 2)),
                        Fraction(1))
        if delta <= 0:
            prec *= 2
            continue
        # M: sup |g| on the closed delta-disc about x
        disc = xb.widen(delta)
        acc = None
        for c in reversed(g):
            acc = c if acc is None else acc * disc + c
        M = acc.abs_upper()
        M = max(M, Fraction(1))
        # minimal m with m > k r, delta 2^m > 1 and M 2^(k r) < 2^m
        m = k * r + 1
        while not (delta * 2**m > 1 and M * 2 ** (k * r) < 2**m):
            m += 1
        K = m
        p, q = x.convergent(K)
        x.rule.first_nonzero_after(K)   # positivity certificate for x - p/q
        # C/q^r = f(p/q); witness inequality via the factorization
        import gmpy2
        pz, qz = gmpy2.mpz(p), gmpy2.mpz(q)
        C = int(sum(c * pz**j * qz ** (r - j) for j, c in enumerate(f)))
        pq = Ball.from_ratio(p, q, prec)
        acc = None
        for c in reversed(g):
            acc = c if acc is None else acc * pq + c
        gpq = acc
        if gpq.contains_zero():
            prec *= 2
            continue
        # 0 < |f(x) - C/q^r| = (x - p/q) |g(p/q)| < b^(1-(K+1)!) |g(p/q)|,
        # against the threshold q^(-rk) = b^(-r k K!); compared in log2 with
        # a unit of slack (the margin is ~K! bits, float slop is irrelevant)
        lhs_log2_upper = (_log2_fraction(gpq.abs_upper()) +
                          (1 - math.factorial(K + 1)) * math.log2(b))
        rhs_log2 = -r * k * math.factorial(K) * math.log2(b)
        if lhs_log2_upper + 2 < rhs_log2:
            return PolyImageWitness(k=k, m=m, K=K, C=C, q=q, r=r,
                                    delta_log2=_log2_fraction(delta),
                                    M_log2=_log2_fraction(M), verified=True)
        prec *= 2
    raise PrecisionExhausted("could not certify the polynomial-image witness")


def _log2_fraction(q: Fraction) -> float:
    import gmpy2
    return (float(gmpy2.log2(gmpy2.mpfr(q.numerator))) -
            float(gmpy2.log2(gmpy2.mpfr(q.denominator))))


# ----------------------------------------------------------------------
# sum decomposition into two Liouville-type parts
# ----------------------------------------------------------------------

@dataclass
class SumSplit:
    """Factorial-block interleaving of a binary digit prefix: alpha takes the
    blocks [k!, (k+1)!) for odd k, beta the even ones; alpha + beta
    reconstructs the prefix exactly."""

    bits: tuple[int, ...]
    alpha_bits: tuple[int, ...]
    beta_bits: tuple[int, ...]

    def prefix_value(self, which: str) -> Fraction:
        src = {"x": self.bits, "alpha": self.alpha_bits, "beta": self.beta_bits}[which]
        return sum(Fraction(d, 2 ** (j + 1)) for j, d in enumerate(src))

    def step3_bound_holds(self, k: int) -> bool:
        """Exact check of 0 < alpha - sum_{j <= (2k)!-1} alpha_j 2^-j
        <= 2^(1-(2k+1)!) on the available prefix (alpha replaced by its
        prefix sum, which is a lower bound; the upper bound is still strict
        unless the prefix is exhausted)."""
        cut = math.factorial(2 * k) - 1
        if cut >= len(self.alpha_bits):
            raise ValueError(f"prefix too short for k={k}")
        head = sum(Fraction(d, 2**j)
                   for j, d in enumerate(self.alpha_bits[:cut], start=1))
        rest = sum(Fraction(d, 2**j)
                   for j, d in enumerate(self.alpha_bits[cut:], start=cut + 1))
        return 0 < rest <= Fraction(2) ** (1 - math.factorial(2 * k + 1))


def liouville_sum_split(bits) -> SumSplit:
    """Split a binary digit prefix of x in (0,1) into the alpha/beta
    factorial-block parts (alpha gets odd blocks: 1! <= j < 2!, 3! <= j < 4!...)."""
    bits = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in bits):
        raise ValueError("binary digits only")
    alpha, beta = [], []
    for idx, d in enumerate(bits):
        j = idx + 1
        k = 1
        while math.factorial(k + 1) <= j:
            k += 1
        if k % 2 == 1:
            alpha.append(d)
            beta.append(0)
        else:
            alpha.append(0)
            beta.append(d)
    return SumSplit(bits, tuple(alpha), tuple(beta))


# ----------------------------------------------------------------------
# generic irrationality evidence checker
# ----------------------------------------------------------------------

class UndecidedError(RuntimeError):
    """Balls overlapped zero ambiguously; raise precision and retry."""


@dataclass
class SequenceCheckReport:
    rows: list[dict]
    decreasing_tail_from: Optional[int]
    note: str = ("finite evidence, not a proof: q_n x - p_n -> 0 with "
                 "x != p_n/q_n would imply irrationality in the limit")


def irrationality_sequence_check(x_of_prec: Callable[[int], Ball],
                                 pq: list[tuple[int, int]],
                                 horizon: Optional[int] = None,
                                 precision: int = 192) -> SequenceCheckReport:
    """Tabulate certified |q_n x - p_n| for the first ``horizon`` pairs."""
    pairs = pq[:horizon] if horizon else pq
    rows = []
    for n, (p, q) in enumerate(pairs, start=1):
        if q <= 0:
            raise ValueError("q_n > 0 required")
        if math.gcd(p, q) != 1:
            raise ValueError(f"(p,q) not coprime at n={n}")
        prec = precision
        for _ in range(4):
            x = x_of_prec(prec)
            v = abs(x * q - p)
            if v.is_nonzero():
                break
            prec *= 2
        else:
            raise UndecidedError(f"|q x - p| ball contains 0 at n={n} "
                                 f"(x = p/q, or precision exhausted)")
        rows.append({"n": n, "p": p, "q": q,
                     "lower": v.lower(), "upper": v.upper()})
    tail_from = None
    for start in range(len(rows)):
        ok = all(rows[i + 1]["upper"] < rows[i]["lower"]
                 for i in range(start, len(rows) - 1))
        if ok:
            tail_from = start + 1
            break
    return SequenceCheckReport(rows, tail_from)
