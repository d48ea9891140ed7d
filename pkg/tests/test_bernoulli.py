import math
from fractions import Fraction

import mpmath
import pytest

from translab import bernoulli as bn
from translab.balls import Ball
from translab.closedform import enclose
from translab.quadrature import integrate_poly_cot


class TestBernoulliNumbers:
    def test_paper_values(self):
        assert bn.bernoulli_number(1, "plus") == Fraction(1, 2)
        assert bn.bernoulli_number(1, "minus") == Fraction(-1, 2)
        assert bn.bernoulli_number(2, "minus") == Fraction(1, 6)
        assert bn.bernoulli_number(5, "plus") == 0

    def test_odd_vanishing_and_sign_flip(self):
        for n in range(0, 42):
            bp = bn.bernoulli_number(n, "plus")
            bm = bn.bernoulli_number(n, "minus")
            assert bp == (-1) ** n * bm
            if n % 2 == 1 and n >= 3:
                assert bp == 0 == bm


class TestBernoulliPolys:
    def test_small_polys(self):
        assert bn.bernoulli_poly(0).coeffs == (Fraction(1),)
        assert bn.bernoulli_poly(1).coeffs == (Fraction(-1, 2), Fraction(1))
        assert bn.bernoulli_poly(2).coeffs == (Fraction(1, 6), Fraction(-1), Fraction(1))

    def test_monic(self):
        for n in range(1, 15):
            assert bn.bernoulli_poly(n).coeffs[-1] == 1

    def test_mean_zero(self):
        for n in range(1, 21):
            assert bn.bernoulli_poly(n).integral01() == 0

    def test_derivative_identity(self):
        for n in range(1, 21):
            d = bn.bernoulli_poly(n).derivative()
            expect = tuple(n * c for c in bn.bernoulli_poly(n - 1).coeffs)
            assert d.coeffs == expect

    def test_orthogonality(self):
        # integral_0^1 B_n B_m = (-1)^(n-1) m! n! / (m+n)! B_(m+n)^-
        for n in range(1, 11):
            for m in range(1, 11):
                p = bn.bernoulli_poly(n)
                q = bn.bernoulli_poly(m)
                prod = [Fraction(0)] * (n + m + 1)
                for i, a in enumerate(p.coeffs):
                    for j, b in enumerate(q.coeffs):
                        prod[i + j] += a * b
                integral = sum(c / (i + 1) for i, c in enumerate(prod))
                expect = ((-1) ** (n - 1) * Fraction(math.factorial(m)
                          * math.factorial(n), math.factorial(m + n))
                          * bn.bernoulli_minus(m + n))
                assert integral == expect

    def test_half_value(self):
        for n in range(1, 11):
            got = bn.bernoulli_poly(2 * n)(Fraction(1, 2))
            assert got == (Fraction(2) ** (1 - 2 * n) - 1) * bn.bernoulli_minus(2 * n)

    def test_periodic_function(self):
        assert bn.bernoulli_fn(2, Fraction(7, 3)) == bn.bernoulli_poly(2)(Fraction(1, 3))
        b = bn.bernoulli_fn(3, Ball.from_fraction(Fraction(5, 4), 96))
        assert b.contains_value(bn.bernoulli_poly(3)(Fraction(1, 4)))


class TestFourier:
    def test_zero_mode(self):
        assert str(bn.bernoulli_fourier(3, 0)) == "0"

    def test_first_modes(self, mp50):
        # oracle: direct numeric Fourier integral
        for n, k in [(1, 1), (2, 1), (2, -3), (3, 2)]:
            cf = bn.bernoulli_fourier(n, k)
            ball = enclose(cf, 160)
            poly = bn.bernoulli_poly(n)
            oracle = mpmath.quad(
                lambda x: (sum(float(c) * x**i for i, c in enumerate(poly.coeffs))
                           * mpmath.e ** (-2j * mpmath.pi * k * x)), [0, 1])
            mid = mpmath.mpc(str(ball.mid.real), str(ball.mid.imag)) \
                if ball.is_complex else mpmath.mpf(str(ball.mid))
            assert abs(mid - oracle) < 1e-20


class TestZetaEven:
    def test_rationals(self):
        assert bn.zeta_even_rational(1) == Fraction(1, 6)
        assert bn.zeta_even_rational(2) == Fraction(1, 90)
        assert bn.zeta_even_rational(3) == Fraction(1, 945)
        assert all(bn.zeta_even_rational(n) > 0 for n in range(1, 20))

    def test_against_truncated_series(self):
        for n in range(1, 9):
            ball = bn.zeta_even_ball(n, 192)
            lo, hi = bn.zeta_truncated_enclosure(2 * n, 100_000)
            assert lo <= ball.upper() and ball.lower() <= hi

    def test_cot_series_cross_check(self):
        # pi x cot(pi x) = 1 - 2 sum zeta(2n) x^(2n): the ODE-derived series
        # coefficients give an independent exact derivation of zeta(2n)/pi^(2n)
        from translab.quadrature import cot_series_rationals
        r = cot_series_rationals(8)
        for n in range(1, 6):
            assert bn.zeta_even_rational(n) == -r[n] / 2


class TestConjugateBernoulli:
    def test_b3_closed_form(self, mp50):
        b = bn.conj_bernoulli(3, 128)
        expect = -3 * mpmath.zeta(3) / (2 * mpmath.pi**3)
        assert abs(mpmath.mpf(str(b.mid)) - expect) < mpmath.mpf("1e-35")

    def test_b1_half_log_closed_form(self, mp50):
        b = bn.conj_bernoulli_fn(1, Fraction(1, 2), 128)
        expect = -mpmath.log(2) / mpmath.pi
        assert abs(mpmath.mpf(str(b.mid)) - expect) < mpmath.mpf("1e-35")

    def test_even_index_half_vanishes(self):
        for n in (2, 4):
            b = bn.conj_bernoulli_fn(n, Fraction(1, 2), 96)
            assert b.contains_zero()

    def test_half_value_identity(self):
        # open-question check: the literal PV shift at x=1/2 against
        # (2^(1-n) - 1) B~_n; both routes must agree
        for n in (3, 5):
            lhs = bn.conj_bernoulli_fn(n, Fraction(1, 2), 128)
            rhs = bn.conj_bernoulli(n, 128) * Ball.from_fraction(
                Fraction(2) ** (1 - n) - 1, 128)
            assert lhs.intersects(rhs)

    def test_fn_against_pv_quadrature_oracle(self, mp50):
        # direct PV quadrature of the paired integrand
        # (B_n((x-y) mod 1) - B_n((x+y) mod 1)) cot(pi y) on (0, 1/2)
        for n, x in [(3, Fraction(1, 3)), (2, Fraction(1, 5)),
                     (4, Fraction(2, 7))]:
            got = bn.conj_bernoulli_fn(n, x, 128)
            xf = mpmath.mpf(x.numerator) / x.denominator
            poly = bn.bernoulli_poly(n)

            def periodic(t):
                t = t - mpmath.floor(t)
                return sum(mpmath.mpf(c.numerator) / c.denominator * t**i
                           for i, c in enumerate(poly.coeffs))

            oracle = mpmath.quad(
                lambda y: (periodic(xf - y) - periodic(xf + y))
                * mpmath.cot(mpmath.pi * y),
                [0, min(xf, 1 - xf), mpmath.mpf(1) / 2])
            assert abs(mpmath.mpf(str(got.mid)) - oracle) < 1e-25

    def test_record_carries_rule_length(self):
        rec = bn.conj_bernoulli_record(5, 96)
        assert rec.n == 5 and rec.quadrature_nodes >= 32
        assert rec.value.intersects(bn.conj_bernoulli(5, 96))

    def test_rejects_even_or_small(self):
        with pytest.raises(ValueError):
            bn.conj_bernoulli(4)
        with pytest.raises(ValueError):
            bn.conj_bernoulli(1)


class TestOmega:
    def test_even_coefficients_vanish_exactly(self):
        for j in (0, 2, 6):
            b = bn.omega_coeff(j, 96)
            assert b.mid == 0 and b.rad == 0

    def test_omega1_positive_log2_over_pi(self, mp50):
        # the PV integrand y*cot(pi y) is even and positive, so Omega_1 > 0;
        # its value is ln(2)/pi (equivalently B~_1(1/2) = -Omega_1)
        b = bn.omega_coeff(1, 128)
        assert b.is_positive()
        assert abs(mpmath.mpf(str(b.mid)) - mpmath.log(2) / mpmath.pi) < 1e-30

    def test_omega_fn_oracle(self, mp50):
        # oracle: direct PV quadrature of e^{xy} cot(pi y) via the paired form
        x = Fraction(1, 5)
        b = bn.omega_fn(x, 128)
        oracle = mpmath.quad(
            lambda y: 2 * mpmath.sinh(y / mpmath.mpf(5)) * mpmath.cot(mpmath.pi * y),
            [0, mpmath.mpf(1) / 2])
        assert abs(mpmath.mpf(str(b.mid)) - oracle) < 1e-20

    def test_generating_identity_at_x_tenth(self):
        # -x e^(x/2)/(e^x - 1) Omega(x) = sum B~_k(1/2) x^k / k!
        x = Fraction(1, 10)
        prec = 160
        xb = Ball.from_fraction(x, prec)
        lhs = -xb * (xb / 2).exp() / (xb.exp() - 1) * bn.omega_fn(x, prec)
        rhs = Ball.exact_int(0, prec)
        K = 24
        for k in range(1, K + 1, 2):   # even k vanish
            if k == 1:
                btk = -bn.omega_coeff(1, prec)   # B~_1(1/2) = -Omega_1
            else:
                btk = bn.conj_bernoulli(k, prec) * Ball.from_fraction(
                    Fraction(2) ** (1 - k) - 1, prec)
            rhs = rhs + btk * Ball.from_fraction(
                x**k / math.factorial(k), prec)
        # certified tail: |B~_k(1/2)/k!| <= 7 (2 pi)^(-k) and 2 pi > 6, so the
        # omitted terms are below 7 (x/6)^(K+1) / (1 - x/6), exactly
        ratio = x / 6
        tail = 7 * ratio ** (K + 1) / (1 - ratio)
        assert lhs.widen(tail).intersects(rhs)


class TestZetaOdd:
    @pytest.mark.parametrize("n,ref", [(1, "1.2020569031595942854"),
                                       (2, "1.0369277551433699263"),
                                       (3, "1.0083492773819228268")])
    def test_values(self, n, ref, mp50):
        b = bn.zeta_odd_via_conj(n, 96)
        assert abs(mpmath.mpf(str(b.mid)) - mpmath.mpf(ref)) < 1e-18

    def test_intersects_series_band(self):
        for n in (1, 2):
            b = bn.zeta_odd_via_conj(n, 96)
            lo, hi = bn.zeta_truncated_enclosure(2 * n + 1, 50_000)
            assert lo <= b.upper() and b.lower() <= hi

    def test_zeta3_reference_ball(self, mp50):
        b = bn.zeta3_ball(256)
        assert abs(mpmath.mpf(str(b.mid)) - mpmath.zeta(3)) < mpmath.mpf("1e-45")
        assert b.rad_fraction() < Fraction(1, 2**200)


class TestQuadratureEngine:
    def test_against_mpmath_quad(self, mp50):
        # integral_0^(1/2) y^3 cot(pi y) dy, pole cancelled by the zero at 0
        got = integrate_poly_cot([Fraction(0), Fraction(0), Fraction(0),
                                  Fraction(1)], Fraction(0), Fraction(1, 2),
                                 128, Fraction(1, 2**100))
        oracle = mpmath.quad(lambda y: y**3 * mpmath.cot(mpmath.pi * y),
                             [0, mpmath.mpf(1) / 2])
        assert abs(mpmath.mpf(str(got.mid)) - oracle) < 1e-25

    def test_interior_interval_with_constant(self, mp50):
        # P(0) != 0 exercises the elementary log(sin) term
        got = integrate_poly_cot([Fraction(1), Fraction(2)], Fraction(1, 8),
                                 Fraction(3, 8), 128, Fraction(1, 2**100))
        oracle = mpmath.quad(lambda y: (1 + 2 * y) * mpmath.cot(mpmath.pi * y),
                             [mpmath.mpf(1) / 8, mpmath.mpf(3) / 8])
        assert abs(mpmath.mpf(str(got.mid)) - oracle) < 1e-25

    def test_uncancelled_pole_rejected(self):
        from translab.closedform import SingularArgumentError
        with pytest.raises(SingularArgumentError):
            integrate_poly_cot([Fraction(1)], Fraction(0), Fraction(1, 2),
                               64, Fraction(1, 2**40))
