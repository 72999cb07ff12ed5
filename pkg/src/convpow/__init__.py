"""Exact convolution powers of the unit-interval indicator function.

The n-th convolution power of the indicator of [0, 1] is the cardinal
B-spline of degree n-1.  This package constructs it, and all of its
function-derivatives, as piecewise polynomials with exact rational
coefficients, provides exact piecewise calculus (integrals, translates,
rescalings, convolution with interval indicators), generates spline bases
over arbitrary rational partitions, and cross-checks everything against an
independent grid-convolution oracle.
"""

from .kernel import CoeffMatrix, SplineKernel, alternating_binomial
from .oracle import SampledFunction, compare, numeric_convolution_power
from .piecewise import PiecewisePoly, box, continuity_order
from .polynomial import Poly, divided_power, format_poly, format_rational, parse_rational
from .selfcheck import CheckResult, run_invariant_checks
from .splinespace import (
    IndependenceReport,
    Partition,
    SplineBasis,
    basis_to_json,
    build_basis,
    check_independence,
    gram_matrix,
    partition_of_unity,
    product_integral,
)

__version__ = "0.1.0"

__all__ = [
    "CoeffMatrix",
    "SplineKernel",
    "alternating_binomial",
    "SampledFunction",
    "compare",
    "numeric_convolution_power",
    "PiecewisePoly",
    "box",
    "continuity_order",
    "Poly",
    "divided_power",
    "format_poly",
    "format_rational",
    "parse_rational",
    "CheckResult",
    "run_invariant_checks",
    "IndependenceReport",
    "Partition",
    "SplineBasis",
    "basis_to_json",
    "build_basis",
    "check_independence",
    "gram_matrix",
    "partition_of_unity",
    "product_integral",
    "__version__",
]
