"""translab: exact and certified-numeric computations from constructive
transcendence theory.

Subpackages cover ball arithmetic over MPFR, Bernoulli/zeta machinery,
closed-form summation of rational series, Beukers irrationality
certificates, Liouville numbers, exponential polynomials with certified
zero counting, the free E-ring, and exact Q-linear-algebra criteria.
"""

__version__ = "0.1.0"

from .balls import Ball, BallDomainError, PrecisionExhausted
from .scalars import ExactScalar

__all__ = ["Ball", "BallDomainError", "PrecisionExhausted", "ExactScalar",
           "__version__"]
