from fractions import Fraction

import mpmath
import pytest

from translab.closedform import (CFCot, CFExp, CFLog, CFPow, CFProd, CFQuot,
                                 CFRat, CFSqrt, CFSum, PI, SingularArgumentError,
                                 cot_special, enclose, scaled_combination)


class TestCanonicalPrinting:
    def test_pinned_strings(self):
        zeta2 = CFProd([CFRat(Fraction(1, 6)), CFPow(PI, 2)])
        assert str(zeta2) == "(1/6)*pi^2"
        lehmer = scaled_combination(Fraction(1, 4320), [
            (Fraction(192), None, CFLog(CFRat(2))),
            (Fraction(-81), None, CFLog(CFRat(3))),
            (Fraction(-7), 3, PI),
        ])
        assert str(lehmer) == "(1/4320)*((192*log(2))-(81*log(3))-((7*sqrt(3))*pi))"

    def test_atoms(self):
        assert str(PI) == "pi"
        assert str(CFSqrt(3)) == "sqrt(3)"
        assert str(CFCot(CFRat(Fraction(1, 5)))) == "cot(pi*(1/5))"
        assert str(CFExp(CFRat(2))) == "exp(2)"

    def test_injectivity_on_samples(self):
        nodes = [CFRat(Fraction(1, 2)), CFRat(2), PI, CFSqrt(2),
                 CFSum([CFRat(1), PI]), CFProd([CFRat(2), PI]),
                 CFQuot(CFRat(1), PI), CFPow(PI, 3),
                 CFLog(CFRat(2)), CFCot(CFRat(Fraction(1, 3)))]
        strings = [str(n) for n in nodes]
        assert len(set(strings)) == len(strings)


class TestEnclose:
    def test_pi(self, mp50):
        b = enclose(PI, 256)
        assert abs(mpmath.mpf(str(b.mid)) - mpmath.pi) < mpmath.mpf(10) ** -45
        assert b.rad_fraction() <= Fraction(2) ** (1 - 256) * 4

    def test_pi_squared_over_six_vs_series(self):
        # independent truncated-series oracle with integral tail bound
        b = enclose(CFProd([CFRat(Fraction(1, 6)), CFPow(PI, 2)]), 128)
        N = 10**6
        partial = sum(Fraction(1, k * k) for k in range(1, 2001))
        # crude but exact: partial sums bracket with integral tails
        lo = partial + Fraction(1, 2001)
        hi = partial + Fraction(1, 2000)
        assert lo <= b.upper() and b.lower() <= hi

    def test_cot_pole_is_singular(self):
        with pytest.raises(SingularArgumentError):
            enclose(CFCot(CFRat(1)), 64)
        with pytest.raises(SingularArgumentError):
            enclose(CFCot(CFRat(0)), 64)

    def test_log_nonpositive_is_singular(self):
        with pytest.raises(SingularArgumentError):
            enclose(CFLog(CFRat(0)), 64)
        with pytest.raises(SingularArgumentError):
            enclose(CFLog(CFRat(-3)), 64)

    def test_doubling_shrinks(self):
        expr = CFSum([CFProd([CFRat(2), CFLog(CFRat(2))]), CFCot(CFRat(Fraction(1, 7)))])
        r1 = enclose(expr, 96).rad_fraction()
        r2 = enclose(expr, 192).rad_fraction()
        assert r2 * 2 <= r1

    def test_exp_of_gaussian_pi_multiple(self, mp50):
        # exp((2/3) pi i) is a primitive cube root of unity
        from translab.scalars import ExactScalar
        expr = CFExp(CFProd([CFRat(ExactScalar(0, Fraction(2, 3))), PI]))
        b = enclose(expr, 128)
        w = mpmath.exp(2j * mpmath.pi / 3)
        assert abs(mpmath.mpc(str(b.mid.real), str(b.mid.imag)) - w) < mpmath.mpf("1e-30")


class TestCotSpecialTable:
    @pytest.mark.parametrize("q", [Fraction(1, 2), Fraction(1, 3), Fraction(1, 4),
                                   Fraction(1, 6), Fraction(1, 12), Fraction(5, 12)])
    def test_table_against_mpmath(self, q, mp50):
        a, b, k = cot_special(q)
        val = float(a) + float(b) * mpmath.sqrt(k)
        assert abs(val - mpmath.cot(mpmath.pi * q.numerator / q.denominator)) < 1e-12

    def test_non_special_returns_none(self):
        assert cot_special(Fraction(1, 5)) is None

    def test_integer_is_singular(self):
        with pytest.raises(SingularArgumentError):
            cot_special(Fraction(3))
