"""Invariant self-check behind the ``check`` CLI command.

Each check re-derives a mathematical property of the n-th convolution power
from its exact representation: unit integral, symmetry, smoothness, the
derivative/translate identity between consecutive powers, the alternating
binomial top derivative, the partition-of-unity identity, and (for small n)
agreement with the independent numerical oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .kernel import SplineKernel, alternating_binomial
from .piecewise import continuity_order
from .polynomial import Poly
from .splinespace import partition_of_unity, plateau_pieces

ORACLE_MAX_POWER = 8
ORACLE_STEP = Fraction(1, 256)
ORACLE_TOLERANCE = 1e-2


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool | None  # None means skipped
    note: str = ""

    @property
    def failed(self) -> bool:
        return self.passed is False


def run_invariant_checks(n: int, with_oracle: bool = True) -> list[CheckResult]:
    """Verify the invariant suite for power n; returns one result per check."""
    if n < 1:
        raise ValueError("power must be positive")
    kernel = SplineKernel.of_power(n)
    f = kernel.to_piecewise(0)
    results: list[CheckResult] = []

    def add(name: str, passed: bool) -> None:
        results.append(CheckResult(name, passed))

    def skip(name: str, note: str) -> None:
        results.append(CheckResult(name, None, note))

    rows = kernel.matrix.rows
    add(
        "matrix boundary values",
        all(rows[0][k] == alternating_binomial(n - 1, k) for k in range(n))
        and all(rows[i][0] == 1 for i in range(n))
        and all(rows[i][1] == Fraction(1, factorial(i)) for i in range(1, n)),
    )

    add(
        "support confined to [0, n]",
        f.support == (Fraction(0), Fraction(n))
        and f(Fraction(-1, 7)) == 0
        and f(n + Fraction(1, 7)) == 0,
    )

    add("integral equals one", f.mass() == 1)

    grid = [Fraction(j, 16) for j in range(16 * n + 1)]
    add("nonnegative on sample grid", all(f(x) >= 0 for x in grid))

    add("symmetric about the midpoint", f.reflect(n) == f)

    if n >= 2:
        add(
            "derivatives continuous through order n-2",
            continuity_order(f, n - 2, include_ends=True) == n - 2,
        )
        previous = SplineKernel.of_power(n - 1).to_piecewise(0)
        add(
            "derivative is difference of translates of the previous power",
            kernel.to_piecewise(1) == previous - previous.translate(1),
        )
        add(
            "derivative pieces consistent between orders",
            all(
                kernel.piece(m, d).derivative() == kernel.piece(m, d + 1)
                for d in range(n - 1)
                for m in range(n)
            ),
        )
    else:
        skip("derivatives continuous through order n-2", "no derivatives for n=1")
        skip(
            "derivative is difference of translates of the previous power",
            "no derivatives for n=1",
        )
        skip("derivative pieces consistent between orders", "no derivatives for n=1")

    top = kernel.to_piecewise(n - 1)
    add(
        "top derivative is the alternating binomial steps",
        top.pieces == tuple(Poly.of(alternating_binomial(n - 1, k)) for k in range(n)),
    )

    unity = partition_of_unity(kernel, n + 2)
    add(
        "integer translates sum to one on the plateau",
        all(p == Poly.of(1) for p in plateau_pieces(unity, n - 1, n + 2))
        and len(plateau_pieces(unity, n - 1, n + 2)) == 3,
    )

    if with_oracle and 2 <= n <= ORACLE_MAX_POWER:
        from .oracle import compare, numeric_convolution_power

        deviation = compare(f, numeric_convolution_power(n, ORACLE_STEP))
        add("agrees with the numerical convolution oracle", deviation <= ORACLE_TOLERANCE)
    elif with_oracle and n == 1:
        skip(
            "agrees with the numerical convolution oracle",
            "jumps are sampled at half height for n=1",
        )
    else:
        skip(
            "agrees with the numerical convolution oracle",
            f"oracle comparison limited to n <= {ORACLE_MAX_POWER}"
            if with_oracle
            else "oracle disabled",
        )

    return results
