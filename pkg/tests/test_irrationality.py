import math
from fractions import Fraction

import mpmath
import pytest

from translab import irrationality as ir
from translab.balls import Ball
from translab.combinatorics import lcm_upto


class TestShiftedLegendre:
    def test_examples(self):
        assert ir.shifted_legendre(0) == [1]
        assert ir.shifted_legendre(1) == [1, -2]
        assert ir.shifted_legendre(2) == [1, -6, 6]

    def test_rodrigues_oracle(self):
        # (1/n!) d^n/dx^n (x^n (1-x)^n) via sympy
        import sympy
        x = sympy.symbols("x")
        for n in range(0, 7):
            expr = sympy.diff((x**n * (1 - x) ** n), x, n) / sympy.factorial(n)
            expect = sympy.Poly(sympy.expand(expr), x).all_coeffs()[::-1]
            assert [int(c) for c in expect] == ir.shifted_legendre(n)


class TestBeukersZeta2:
    def test_first_certificates(self):
        c0 = ir.beukers_zeta2(0)
        assert (c0.A, c0.B, c0.d) == (1, 0, 1)
        c1 = ir.beukers_zeta2(1)
        assert (c1.A, c1.B, c1.d) == (3, -5, 1)

    def test_n1_against_2d_quadrature(self, mp50):
        # oracle: midpoint-grid double integral of P_1(x)(1-y)/(1-xy)
        c1 = ir.beukers_zeta2(1)
        grid = 400
        acc = mpmath.mpf(0)
        for i in range(grid):
            x = (mpmath.mpf(i) + mpmath.mpf(1) / 2) / grid
            for j in range(grid):
                y = (mpmath.mpf(j) + mpmath.mpf(1) / 2) / grid
                acc += (1 - 2 * x) * (1 - y) / (1 - x * y)
        acc /= grid * grid
        assert abs(mpmath.mpf(str(c1.I.mid)) - acc) < 5e-3

    def test_integrality_up_to_30(self):
        for n in range(31):
            a, b = ir._exact_beukers_parts("zeta2", n)
            d2 = lcm_upto(n) ** 2
            assert (a * d2).denominator == 1 and (b * d2).denominator == 1

    def test_zeta_coefficient_is_apery_sequence(self):
        # the zeta(2)-coefficient of I_n is sum_k C(n,k)^2 C(n+k,k); the
        # zeta(3)-coefficient is 2 sum_k C(n,k)^2 C(n+k,k)^2 (independent
        # combinatorial oracle for the base-integral bookkeeping)
        from translab.combinatorics import binomial
        for n in range(8):
            a2, _ = ir._exact_beukers_parts("zeta2", n)
            assert a2 == sum(binomial(n, k) ** 2 * binomial(n + k, k)
                             for k in range(n + 1))
            a3, _ = ir._exact_beukers_parts("zeta3", n)
            assert a3 == 2 * sum(binomial(n, k) ** 2 * binomial(n + k, k) ** 2
                                 for k in range(n + 1))

    def test_positivity_certified(self):
        for n in range(21):
            cert = ir.beukers_zeta2(n, 160)
            assert abs(cert.I).is_positive()

    def test_bound_certified(self):
        for n in range(1, 31):
            cert = ir.beukers_zeta2(n)
            assert abs(cert.I).upper() <= cert.bound.lower()

    def test_gap_report(self):
        rep = ir.irrationality_gap_report("zeta2", 12, 96)
        assert rep.rate_in_unit_interval
        assert len(rep.rows) == 12
        assert rep.rows[0]["d"] == 1

    def test_gap_report_single_row(self):
        rep = ir.irrationality_gap_report("zeta2", 1, 96)
        assert len(rep.rows) == 1
        assert rep.rate.is_positive()          # margin positive
        assert "rate" in str(rep)


class TestBeukersZeta3:
    def test_first_certificates(self):
        c0 = ir.beukers_zeta3(0)
        assert (c0.A, c0.B, c0.d) == (2, 0, 1)
        c1 = ir.beukers_zeta3(1)
        # I_1 = A zeta(3) + B with d_1 = 1; sanity via high-precision zeta(3)
        val = c1.A * mpmath.zeta(3) + c1.B
        assert abs(mpmath.mpf(str(c1.I.mid)) - val) < 1e-20

    def test_n1_against_3d_quadrature(self, mp50):
        c1 = ir.beukers_zeta3(1)
        grid = 60
        acc = mpmath.mpf(0)
        h = mpmath.mpf(1) / grid
        for i in range(grid):
            x = (i + mpmath.mpf(1) / 2) * h
            for j in range(grid):
                y = (j + mpmath.mpf(1) / 2) * h
                for k in range(grid):
                    z = (k + mpmath.mpf(1) / 2) * h
                    acc += ((1 - 2 * x) * (1 - 2 * y) / (1 - (1 - x * y) * z))
        acc *= h**3
        assert abs(abs(mpmath.mpf(str(c1.I.mid))) - abs(acc)) < 2e-2

    def test_integrality_and_bound(self):
        for n in range(31):
            a, b = ir._exact_beukers_parts("zeta3", n)
            d3 = lcm_upto(n) ** 3
            assert (a * d3).denominator == 1 and (b * d3).denominator == 1
            cert = ir.beukers_zeta3(n)
            if n:
                assert abs(cert.I).upper() <= cert.bound.lower()

    def test_gap_report(self):
        rep = ir.irrationality_gap_report("zeta3", 12, 96)
        assert rep.rate_in_unit_interval

    def test_json_schema(self):
        import json
        cert = ir.beukers_zeta3(5)
        doc = json.loads(json.dumps(cert.to_json_dict()))
        assert set(doc) == {"target", "n", "A", "B", "d", "I", "bound"}
        assert set(doc["I"]) == {"mid", "rad"}
        assert doc["A"].lstrip("-").isdigit()


class TestPade:
    def test_T_endpoint_identities(self):
        for n in range(1, 9):
            T = [Fraction(c) for c in ir.pade_T_poly(n)]
            t0 = sum(c * Fraction(0) ** i for i, c in enumerate(T))
            tn = sum(c * Fraction(n) ** i for i, c in enumerate(T))
            assert t0 == (-1) ** n * Fraction(math.factorial(2 * n),
                                              math.factorial(n))
            assert tn == (-1) ** n * math.factorial(n)

    def test_integer_coefficients_and_monic(self):
        for n in range(1, 9):
            pp = ir.pade_exp(n)
            assert all(isinstance(c, int) for c in pp.P)
            assert pp.Q[-1] == 1 and len(pp.Q) == n + 1

    def test_remainder_direct_series_oracle(self, mp50):
        # R_3(1) = sum_{k>=7} T_3(k)/k!  (tail of the defining series)
        pp = ir.pade_exp(3)
        T = ir.pade_T_poly(3)
        r3 = mpmath.nsum(
            lambda k: sum(c * k**i for i, c in enumerate(T)) / mpmath.factorial(k),
            [7, mpmath.inf])
        d = pp.defect(Fraction(1), 160)
        assert abs(mpmath.mpf(str(d.mid)) - abs(r3)) < 1e-30
        assert d.upper() <= pp.remainder_bound(Fraction(1), 160).lower()

    @pytest.mark.parametrize("x", [Fraction(1), Fraction(-1),
                                   Fraction(2), Fraction(-2)])
    def test_bound_all_n(self, x):
        for n in range(1, 9):
            pp = ir.pade_exp(n)
            assert pp.defect(x, 160).upper() <= \
                pp.remainder_bound(x, 160).lower()


class TestLiouville:
    def test_constants_verify(self):
        for base in (10, 2):
            x = ir.liouville_constant(base)
            for k in range(1, 11):
                assert x.verify_definition(k)

    def test_convergent_values(self):
        x = ir.liouville_constant(10)
        p, q = x.convergent(2)
        assert q == 100 and Fraction(p, q) == Fraction(11, 100)
        p3, q3 = x.convergent(3)
        assert q3 == 10**6 and Fraction(p3, q3) == Fraction(110001, 10**6)

    def test_all_zero_tail_rejected(self):
        with pytest.raises(ir.AllZeroTailError):
            ir.liouville_from_digits(10, ((1, 1), (0,)))

    def test_digit_range_validated(self):
        with pytest.raises(ValueError):
            ir.liouville_from_digits(2, (3,))

    def test_generator_rule(self):
        # bounded-lookahead generator with its nonzero-window certificate
        rule = ir.DigitRule(10, generator=lambda j: 1 if j % 2 else 2,
                            nonzero_stride=2)
        x = ir.liouville_from_digits(10, rule)
        assert x.verify_definition(5)
        p, q = x.convergent(2)
        assert Fraction(p, q) == Fraction(12, 100)

    def test_generator_needs_certificate(self):
        with pytest.raises(ValueError):
            ir.DigitRule(10, generator=lambda j: 1)

    def test_preperiod_plus_period(self):
        x = ir.liouville_from_digits(10, ((0, 3), (2,)))
        assert x.verify_definition(4)
        p, q = x.convergent(3)
        assert Fraction(p, q) == (Fraction(3, 100) + Fraction(2, 10**6))

    def test_value_ball(self, mp50):
        x = ir.liouville_constant(10)
        b = x.value_ball(128)
        oracle = mpmath.nsum(lambda j: mpmath.mpf(10) ** -mpmath.factorial(j),
                             [1, 8])
        assert abs(mpmath.mpf(str(b.mid)) - oracle) < 1e-30

    def test_poly_image_identity(self):
        x = ir.liouville_constant(10)
        w = ir.liouville_poly_image(x, [0, 1], 2)
        assert w.verified and w.r == 1

    @pytest.mark.parametrize("f,k", [([3, 5], 3), ([0, 0, 1], 2),
                                     ([0, 0, 0, 1], 2)])
    def test_poly_image_witnesses(self, f, k):
        x = ir.liouville_constant(10)
        w = ir.liouville_poly_image(x, f, k)
        assert w.verified
        assert w.m > k * (len(f) - 1)

    def test_poly_image_witness_numeric_sanity(self):
        # a small certificate (f = 1 + 2X, k = 1 gives K = 3, q = 10^6) can
        # be cross-checked in exact rational arithmetic against a truncation
        x = ir.liouville_constant(10)
        w = ir.liouville_poly_image(x, [1, 2], 1)
        assert w.verified and w.K <= 4
        xv = sum(Fraction(1, 10 ** math.factorial(j)) for j in range(1, 8))
        diff = abs((1 + 2 * xv) - Fraction(w.C, w.q ** w.r))
        # xv is below x by under 10^-5039, far inside the witness margin
        assert 0 < diff < Fraction(w.q) ** (-w.r * w.k)


class TestSumSplit:
    def test_prefix_resum_exact(self):
        bits = [1, 0, 1, 1, 0, 1, 0, 0, 1] * 600
        s = ir.liouville_sum_split(bits)
        assert s.prefix_value("alpha") + s.prefix_value("beta") == \
            s.prefix_value("x")

    def test_block_bookkeeping_all_ones(self):
        s = ir.liouville_sum_split([1] * 130)
        # alpha collects blocks [1,2) and [6,24) and [120,720): indices 1,
        # 6..23, 120.. (0-based: 0, 5..22, 119..)
        assert s.alpha_bits[0] == 1
        assert all(b == 0 for b in s.alpha_bits[1:5])
        assert all(b == 1 for b in s.alpha_bits[5:23])
        assert all(b == 0 for b in s.alpha_bits[23:119])
        assert all(b == 1 for b in s.alpha_bits[119:])

    def test_step3_bounds_on_pi_bits(self, mp50):
        mpmath.mp.prec = 5200
        x = 1 / mpmath.pi
        bits = []
        v = x
        for _ in range(5000):
            v = v * 2
            b = int(v)
            bits.append(b)
            v -= b
        s = ir.liouville_sum_split(bits)
        assert s.prefix_value("alpha") + s.prefix_value("beta") == \
            s.prefix_value("x")
        assert s.step3_bound_holds(1)
        assert s.step3_bound_holds(2)
        mpmath.mp.dps = 50

    def test_binary_digits_only(self):
        with pytest.raises(ValueError):
            ir.liouville_sum_split([0, 2, 1])


class TestSequenceCheck:
    def test_e_factorial_convergents(self):
        def e_ball(prec):
            return Ball.exact_int(1, prec).exp()
        pq = []
        for n in range(1, 13):
            p = sum(Fraction(1, math.factorial(k)) for k in range(n + 1))
            num = p.numerator * (math.factorial(n) // p.denominator)
            g = math.gcd(num, math.factorial(n))
            pq.append((num // g, math.factorial(n) // g))
        rep = ir.irrationality_sequence_check(e_ball, pq)
        assert rep.decreasing_tail_from is not None
        assert "not a proof" in rep.note
        for row, n in zip(rep.rows, range(1, 13)):
            assert row["upper"] < Fraction(1, n)

    def test_rational_target_rejected(self):
        def x_ball(prec):
            return Ball.from_fraction(Fraction(3, 2), prec)
        with pytest.raises(ir.UndecidedError):
            ir.irrationality_sequence_check(x_ball, [(3, 2)])

    def test_zeta3_beukers_tail(self):
        from translab.bernoulli import zeta3_ball
        pq = []
        for n in range(1, 9):
            c = ir.beukers_zeta3(n)
            q = c.A
            p = -c.B
            g = math.gcd(p, q)
            pq.append((p // g, q // g))
        rep = ir.irrationality_sequence_check(zeta3_ball, pq, precision=384)
        assert rep.decreasing_tail_from is not None
