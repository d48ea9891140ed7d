"""Shared oracle helpers.

The oracles here are deliberately independent of the library's own
evaluation paths: mpmath at high working precision, sympy for symbolic
differentiation, and brute-force enumeration/truncation in exact rationals.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest

from translab.balls import Ball


@pytest.fixture(scope="session")
def mp50():
    mpmath.mp.dps = 50
    return mpmath


def ball_close_to_mpf(ball: Ball, value, tol=None) -> bool:
    """Does the ball contain the high-precision mpmath value (to tolerance)?"""
    v = mpmath.mpf(value) if not isinstance(value, (mpmath.mpf, mpmath.mpc)) else value
    tol = tol if tol is not None else mpmath.mpf(10) ** (-25)
    if ball.is_complex:
        mid = mpmath.mpc(str(ball.mid.real), str(ball.mid.imag))
    else:
        mid = mpmath.mpf(str(ball.mid))
    return abs(mid - v) <= tol + mpmath.mpf(str(ball.rad))


def fraction_to_mpf(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


def brute_zeta(s: int, N: int = 100_000):
    mpmath.mp.dps = 40
    return mpmath.nsum(lambda k: 1 / k**s, [1, mpmath.inf])
