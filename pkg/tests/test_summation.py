import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from translab import summation as sm
from translab.balls import Ball
from translab.combinatorics import stirling2
from translab.polyops import mul as pmul
from translab.scalars import ExactScalar


class TestCotDerivativeCoeffs:
    def test_base_case(self):
        # differentiating pi*i*(1 + 2/w) gives A_2 = (-1, -1)
        assert sm.cot_derivative_coeffs(2) == (-1, -1)

    def test_merge_pattern_k3(self):
        a21, a22 = sm.cot_derivative_coeffs(2)
        assert sm.cot_derivative_coeffs(3) == (-a21, -(a21 + 2 * a22), -2 * a22)

    def test_endpoints_nonzero(self):
        for k in range(2, 12):
            a = sm.cot_derivative_coeffs(k)
            assert a[0] != 0 and a[-1] != 0 and len(a) == k

    def test_symbolic_differentiation_oracle(self):
        # brute-force oracle: differentiate pi*cot(pi*z) symbolically and
        # compare both representations at a sample point
        import sympy
        z = sympy.symbols("z")
        expr = sympy.pi * sympy.cot(sympy.pi * z)
        for k in range(2, 7):
            dk = sympy.diff(expr, z, k - 1)
            a = sm.cot_derivative_coeffs(k)
            w = sympy.exp(2 * sympy.pi * sympy.I * z) - 1
            rhs = (2 * sympy.pi * sympy.I) ** k * sum(
                a[j - 1] / w**j for j in range(1, k + 1))
            at = sympy.Rational(1, 5)
            lhs_v = complex(sympy.N(dk.subs(z, at), 30))
            rhs_v = complex(sympy.N(rhs.subs(z, at), 30))
            assert abs(lhs_v - rhs_v) < 1e-20

    def test_stirling_fact_cross_check(self, mp50):
        # sum 1/(n+z)^k = ((-2 pi i)^k/(k-1)!) sum_l (l-1)! S(k,l)/(e^(-2 pi i z)-1)^l
        # must agree with the A_(k,j) form numerically
        z = mpmath.mpf(1) / 7
        for k in range(2, 7):
            a = sm.cot_derivative_coeffs(k)
            w = mpmath.e ** (2j * mpmath.pi * z) - 1
            lhs = ((-1) ** (k - 1) / mpmath.factorial(k - 1) *
                   (2j * mpmath.pi) ** k *
                   sum(a[j - 1] / w**j for j in range(1, k + 1)))
            wm = mpmath.e ** (-2j * mpmath.pi * z) - 1
            rhs = ((-2j * mpmath.pi) ** k / mpmath.factorial(k - 1) *
                   sum(mpmath.factorial(l - 1) * stirling2(k, l) / wm**l
                       for l in range(1, k + 1)))
            assert abs(lhs - rhs) < 1e-20


class TestBilateralPowerSum:
    def test_quarter_k1_is_pi(self, mp50):
        cf, ball = sm.bilateral_power_sum(Fraction(1, 4), 1, 128)
        assert str(cf) == "pi"
        # oracle: symmetric truncation
        oracle = sum(1 / (n + 0.25) for n in range(-200000, 200001))
        assert abs(float(ball.mid_fraction()) - oracle) < 1e-4

    def test_half_k2_is_pi_squared(self, mp50):
        cf, ball = sm.bilateral_power_sum(Fraction(1, 2), 2, 128)
        assert str(cf) == "pi^2"
        oracle = mpmath.nsum(lambda m: 2 * 4 / (2 * m + 1) ** 2, [0, mpmath.inf])
        assert abs(mpmath.mpf(str(ball.mid)) - oracle) < 1e-25

    @pytest.mark.parametrize("m", [-2, -1, 0, 1, 2])
    @pytest.mark.parametrize("j", [0, 1, 2])
    def test_half_integer_odd_vanishing(self, m, j):
        cf, ball = sm.bilateral_power_sum(Fraction(1, 2) + m, 2 * j + 1, 96)
        assert str(cf) == "0"
        assert ball.contains_zero()

    def test_integer_pole(self):
        with pytest.raises(sm.IntegerPoleError):
            sm.bilateral_power_sum(Fraction(3), 2)

    def test_reflection(self):
        # sum 1/(n+z)^k = (-1)^k sum 1/(n-z)^k
        for k in (1, 2, 3):
            _, a = sm.bilateral_power_sum(Fraction(2, 7), k, 96)
            _, b = sm.bilateral_power_sum(Fraction(-2, 7), k, 96)
            assert a.intersects(b * (-1) ** k)

    def test_derivative_consistency_vs_finite_differences(self):
        # (k-1)-th central difference of S_1 at step h, with a rigorous
        # truncation allowance from an S_(k+2) magnitude bound
        h = Fraction(1, 2**20)
        for z in (Fraction(1, 3), Fraction(2, 7)):
            for k in (2, 3):
                _, sk = sm.bilateral_power_sum(z, k, 160)
                if k == 2:
                    _, p = sm.bilateral_power_sum(z + h, 1, 160)
                    _, q = sm.bilateral_power_sum(z - h, 1, 160)
                    fd = (p - q) / (2 * Ball.from_fraction(h, 160))
                    # S_1' = -S_2; error h^2 |S_1'''|/6 = h^2 |6 S_4|/6
                    _, s4 = sm.bilateral_power_sum(
                        Ball.from_interval(z - h, z + h, 160), 4, 160)
                    allowance = h * h * s4.abs_upper()
                    assert (-fd).widen(allowance).intersects(sk)
                else:
                    _, p = sm.bilateral_power_sum(z + h, 1, 160)
                    _, m = sm.bilateral_power_sum(z, 1, 160)
                    _, q = sm.bilateral_power_sum(z - h, 1, 160)
                    hb = Ball.from_fraction(h, 160)
                    fd = (p - m * 2 + q) / (hb * hb)
                    # S_1'' = 2 S_3; error h^2 |S_1''''|/12 = h^2 |24 S_5|/12
                    _, s5 = sm.bilateral_power_sum(
                        Ball.from_interval(z - h, z + h, 160), 5, 160)
                    allowance = 2 * h * h * s5.abs_upper()
                    assert (fd / 2).widen(allowance).intersects(sk)


class TestBilateralRationalSum:
    def test_coth_example(self, mp50):
        spec = sm.RationalSeriesSpec([1], [1, 0, 1])
        cf, ball = sm.bilateral_rational_sum(spec, 128)
        assert str(cf) == "pi*coth(pi*1)"
        expect = mpmath.pi / mpmath.tanh(mpmath.pi)
        assert abs(mpmath.mpf(str(ball.mid)) - expect) < 1e-30

    def test_golden_ratio_vanishing(self):
        spec = sm.RationalSeriesSpec([-1, 2], [-1, -1, 1])
        cf, ball = sm.bilateral_rational_sum(spec, 128)
        assert cf is None          # irrational poles: ball only
        assert ball.contains_zero()
        assert ball.rad_fraction() < Fraction(1, 10**20)

    def test_double_pole_square(self, mp50):
        # sum 1/(n^2+1)^2 over Z: partial fractions with multiplicity 2
        spec = sm.RationalSeriesSpec([1], pmul([1, 0, 1], [1, 0, 1]))
        cf, ball = sm.bilateral_rational_sum(spec, 128)
        oracle = mpmath.nsum(lambda n: 1 / (n * n + 1) ** 2,
                             [-mpmath.inf, mpmath.inf])
        assert abs(mpmath.mpf(str(ball.mid)) - oracle) < 1e-25
        assert cf is not None

    def test_integer_pole_rejected(self):
        with pytest.raises(sm.IntegerPoleError):
            sm.RationalSeriesSpec([1], [0, 0, 1]).pole_data()
        with pytest.raises(sm.IntegerPoleError):
            sm.bilateral_rational_sum(sm.RationalSeriesSpec([1], [-4, 0, 1]), 96)

    def test_nonconvergent_rejected(self):
        with pytest.raises(sm.NonconvergentError):
            sm.RationalSeriesSpec([1, 2, 3], [1, 0, 1])

    @pytest.mark.parametrize("N", [1000, 10_000, 100_000])
    def test_truncation_consistency(self, N):
        spec = sm.RationalSeriesSpec([1], [1, 0, 1])
        _, ball = sm.bilateral_rational_sum(spec, 128)
        lo, hi = sm.truncated_bilateral([1], [1, 0, 1], N)
        assert lo <= ball.upper() and ball.lower() <= hi

    def test_cubic_mixed_rational_and_ball_poles(self):
        # 1/(8n^3+1): one rational pole at n = -1/2 plus a complex pair that
        # only has certified ball enclosures; ball output only
        cf, ball = sm.bilateral_rational_sum(
            sm.RationalSeriesSpec([1], [1, 0, 0, 8]), 128)
        assert cf is None
        lo, hi = sm.truncated_bilateral([1], [1, 0, 0, 8], 20_000)
        assert lo <= ball.upper() and ball.lower() <= hi

    def test_quartic_all_ball_poles(self):
        # 1/(n^4+1): four certified complex roots, no closed form emitted
        cf, ball = sm.bilateral_rational_sum(
            sm.RationalSeriesSpec([1], [1, 0, 0, 0, 1]), 128)
        assert cf is None
        lo, hi = sm.truncated_bilateral([1], [1, 0, 0, 0, 1], 10_000)
        assert lo <= ball.upper() and ball.lower() <= hi


class TestUnilateral:
    def test_lehmer(self):
        B = [1]
        for j in range(1, 7):
            B = pmul(B, [j, 6])
        cf, ball = sm.unilateral_rational_sum([1], [int(c) for c in B], 160)
        assert str(cf) == \
            "(1/4320)*((192*log(2))-(81*log(3))-((7*sqrt(3))*pi))"
        lo, hi = sm.truncated_unilateral([1], [int(c) for c in B], 50_000)
        assert lo <= ball.upper() and ball.lower() <= hi

    def test_simple_telescoping(self, mp50):
        # sum 1/((n+1)(n+2)) = 1
        cf, ball = sm.unilateral_rational_sum([1], [2, 3, 1], 128)
        assert ball.contains_value(1)

    def test_quadratic_family(self, mp50):
        for C in (Fraction(1), Fraction(2)):
            cf, ball = sm.unilateral_quadratic_sum(C, 128)
            expect = (mpmath.pi / (2 * C) / mpmath.tanh(mpmath.pi * C)
                      - mpmath.mpf(1) / (2 * C * C))
            assert abs(mpmath.mpf(str(ball.mid)) - expect) < 1e-30

    def test_quadratic_bilateral_consistency(self):
        # 2*unilateral + 1/C^2 = bilateral(1, n^2 + C^2)
        C = Fraction(2)
        _, uni = sm.unilateral_quadratic_sum(C, 128)
        _, bil = sm.bilateral_rational_sum(
            sm.RationalSeriesSpec([1], [4, 0, 1]), 128)
        assert (uni * 2 + Ball.from_fraction(1 / (C * C), 128)).intersects(bil)

    def test_divergent_residues_rejected(self):
        # sum 1/(2n+1) over n >= 0 diverges: single pole, residue sum != 0
        with pytest.raises((sm.NonconvergentError, ValueError)):
            sm.unilateral_rational_sum([1], [1, 2], 96)

    def test_negative_alpha_recurrence(self):
        # poles at n = 1/2, 3/2, 5/2: alpha = -1/2, -3/2, -5/2 walk the
        # digamma recurrence upward through negative territory
        from translab.polyops import mul as pmul
        B = pmul(pmul([-1, 2], [-3, 2]), [-5, 2])
        cf, ball = sm.unilateral_rational_sum([1], B, 128)
        lo, hi = sm.truncated_unilateral([1], B, 50_000)
        assert lo <= ball.upper() and ball.lower() <= hi


class TestClosedFormBallAgreement:
    """The symbolic route (ValueCombo -> ClosedForm -> enclose) and the
    direct ball route must land on intersecting enclosures."""

    @pytest.mark.parametrize("A,B", [
        ([1], [1, 0, 1]),
        ([1], [4, 0, 1]),
        ([1, 1], [4, 0, 5, 0, 1]),   # (n^2+1)(n^2+4): two coth pairs
        ([1], [3, 8, 4]),            # (2n+1)(2n+3): rational half-int poles
    ])
    def test_bilateral(self, A, B):
        from translab.closedform import enclose
        cf, ball = sm.bilateral_rational_sum(sm.RationalSeriesSpec(A, B), 160)
        if cf is not None:
            assert enclose(cf, 160).intersects(ball)

    def test_unilateral_lehmer(self):
        from translab.closedform import enclose
        from translab.polyops import mul as pmul
        B = [1]
        for j in range(1, 7):
            B = pmul(B, [j, 6])
        cf, ball = sm.unilateral_rational_sum([1], B, 160)
        assert enclose(cf, 160).intersects(ball)

    def test_symbolic_cot_power_vs_truncation(self):
        # non-special denominator leaves cot(pi/5) symbolic; the printed
        # closed form must still evaluate into the truncation band:
        # 25 * sum 1/(5n+1)^2 = sum 1/(n + 1/5)^2
        from translab.closedform import enclose
        cf, ball = sm.bilateral_power_sum(Fraction(1, 5), 2, 160)
        assert "cot(pi*(1/5))" in str(cf)
        lo, hi = sm.truncated_bilateral([25], [1, 10, 25], 20_000)
        got = enclose(cf, 160)
        assert lo <= got.upper() and got.lower() <= hi
        assert got.intersects(ball)

    def test_combo_dual_evaluation(self):
        # ValueCombo.enclose and enclose(ValueCombo.to_cf()) are independent
        # renderings of the same exact data and must agree
        import random
        from translab.closedform import enclose
        rng = random.Random(8)
        for _ in range(25):
            combo = sm.ValueCombo()
            for _ in range(rng.randint(1, 5)):
                kind = rng.choice(["rat", "log", "pi", "picot", "picoth"])
                coef = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                if kind == "rat":
                    combo.add_rational(coef)
                elif kind == "log":
                    combo.add(("log", rng.choice([2, 3, 5])), coef)
                elif kind == "pi":
                    combo.add(("pi", rng.randint(1, 3),
                               rng.choice([1, 2, 3])), coef)
                elif kind == "picot":
                    combo.add(("picot", rng.randint(1, 2),
                               Fraction(1, rng.choice([5, 7])),
                               rng.randint(1, 2)), coef)
                else:
                    combo.add(("picoth", rng.randint(1, 2),
                               Fraction(rng.randint(1, 3)),
                               rng.randint(1, 2)), coef)
            direct = combo.enclose(128)
            via_cf = enclose(combo.to_cf(), 128)
            assert direct.intersects(via_cf)


class TestGeometricPolySum:
    def test_examples(self):
        assert sm.geometric_poly_sum([0, 1], ExactScalar(Fraction(1, 2))) \
            == ExactScalar(2)
        assert sm.geometric_poly_sum([1], ExactScalar(Fraction(1, 3))) \
            == ExactScalar(Fraction(3, 2))
        assert sm.geometric_poly_sum([0, 0, 1], ExactScalar(Fraction(1, 2))) \
            == ExactScalar(6)

    def test_divergent(self):
        with pytest.raises(sm.DivergentSeriesError):
            sm.geometric_poly_sum([1], ExactScalar(1))
        with pytest.raises(sm.DivergentSeriesError):
            sm.geometric_poly_sum([1], ExactScalar(Fraction(3, 5), Fraction(4, 5)))

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=4),
           st.fractions(min_value=Fraction(-3, 4), max_value=Fraction(3, 4),
                        max_denominator=16))
    @settings(max_examples=40, deadline=None)
    def test_against_truncation(self, P, z):
        if z == 0:
            z = Fraction(1, 2)
        got = sm.geometric_poly_sum(P, ExactScalar(z))
        # truncated oracle with geometric tail bound
        N = 200
        partial = sum(z**n * sum(c * n**i for i, c in enumerate(P))
                      for n in range(N))
        degP = len(P) - 1
        tail = (abs(z) ** N * sum(abs(c) for c in P) * (2 * N) ** degP
                / (1 - abs(z)) * 2)
        assert abs(got.re - partial) <= tail and got.im == 0

    def test_gaussian_ratio(self):
        z = ExactScalar(Fraction(1, 3), Fraction(1, 3))
        got = sm.geometric_poly_sum([1], z)
        assert got == (ExactScalar(1) - z).inverse()


class TestPinVolumes:
    """The alternating odd-power series behind the unit-cube volumes."""

    def test_n1_pi_over_4(self, mp50):
        oracle = mpmath.nsum(lambda k: (-1) ** k / (2 * k + 1), [0, mpmath.inf])
        assert abs(oracle - mpmath.pi / 4) < 1e-40

    def test_n2_is_three_quarters_zeta2(self, mp50):
        from translab.bernoulli import zeta_even_ball
        series = mpmath.nsum(lambda k: 1 / (2 * k + 1) ** 2, [0, mpmath.inf])
        z2 = zeta_even_ball(1, 128)
        assert abs(series - (1 - mpmath.mpf(2) ** -2) * mpmath.mpf(str(z2.mid))) < 1e-30

    def test_n3_pi_cubed_over_32(self, mp50):
        series = mpmath.nsum(lambda k: (-1) ** k / (2 * k + 1) ** 3, [0, mpmath.inf])
        assert abs(series - mpmath.pi**3 / 32) < 1e-40
