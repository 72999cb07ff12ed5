"""Convolution powers of the unit-interval indicator as exact piecewise polynomials.

The n-th convolution power of the indicator of [0, 1] is a degree-(n-1)
piecewise polynomial supported on [0, n] (the cardinal B-spline of degree
n-1).  It and all of its n-1 function-derivatives are reconstructed from a
single n-by-n rational coefficient matrix:

* row 0 holds the alternating binomial numbers (-1)**k * C(n-1, k);
* each further row is obtained by one more exact integration step, with the
  running total of each piece carried over as the next piece's constant term;
* row i, read against the divided powers t**k / k!, gives the pieces of the
  (n-1-i)-th derivative, piece j living on [j, j+1] in the local variable
  t = x - j.

Concretely, with P_k(1) = 1/k!:

    a[0][k] = (-1)**k * C(n-1, k)
    a[i][0] = 1
    a[i][1] = 1/i!                                     (i >= 1)
    a[i][j] = sum_{k=0..i} a[i-k][j-1] * P_k(1)        (j >= 2)

and the d-th derivative on [m, m+1], with r = n-1-d, is

    piece 0:      a[r][0] * P_r(t)
    piece m >= 1: sum_{k=0..r} a[r-k][m] * P_k(t).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, floor

from .piecewise import PiecewisePoly
from .polynomial import Poly, RationalLike


def alternating_binomial(m: int, k: int) -> Fraction:
    """(-1)**k * C(m, k), the sign-alternating binomial coefficient."""
    if k < 0 or k > m:
        raise ValueError("index out of binomial range")
    return Fraction((-1) ** k * comb(m, k))


@dataclass(frozen=True)
class CoeffMatrix:
    """The n-by-n matrix of piece coefficients of the n-th convolution power."""

    n: int
    rows: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def build(cls, n: int) -> CoeffMatrix:
        """Run the integration recursion for the n-th power.

        Internally row i is scaled by the common denominator i!, which keeps
        the whole recursion in integer arithmetic; the scaled recursion is
        b[i][j] = sum_{k=0..i} C(i, k) * b[i-k][j-1].
        """
        if n <= 0:
            raise ValueError("power must be positive")
        scaled: list[list[int]] = [[(-1) ** k * comb(n - 1, k) for k in range(n)]]
        for i in range(1, n):
            binomials = [comb(i, k) for k in range(i + 1)]
            row = [factorial(i), 1]
            for j in range(2, n):
                acc = row[j - 1]
                for k in range(1, i + 1):
                    acc += binomials[k] * scaled[i - k][j - 1]
                row.append(acc)
            scaled.append(row[:n])
        rows = tuple(
            tuple(Fraction(v, factorial(i)) for v in scaled[i]) for i in range(n)
        )
        return cls(n, rows)

    def __getitem__(self, index: int) -> tuple[Fraction, ...]:
        return self.rows[index]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "rows": [[str(v) for v in row] for row in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> CoeffMatrix:
        data = json.loads(text)
        rows = tuple(tuple(Fraction(v) for v in row) for row in data["rows"])
        return cls(int(data["n"]), rows)

    def to_csv(self) -> str:
        return "\n".join(",".join(str(v) for v in row) for row in self.rows)

    @classmethod
    def from_csv(cls, text: str) -> CoeffMatrix:
        rows = tuple(
            tuple(Fraction(v) for v in line.split(","))
            for line in text.strip().splitlines()
        )
        return cls(len(rows), rows)

    def pretty(self) -> str:
        cells = [[str(v) for v in row] for row in self.rows]
        widths = [max(len(cells[i][j]) for i in range(self.n)) for j in range(self.n)]
        return "\n".join(
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells
        )


@dataclass(frozen=True)
class SplineKernel:
    """The n-th convolution power together with all its function-derivatives."""

    n: int
    matrix: CoeffMatrix

    @classmethod
    def of_power(cls, n: int) -> SplineKernel:
        return cls(n, CoeffMatrix.build(n))

    def _check_orders(self, d: int, m: int | None = None) -> None:
        if not 0 <= d <= self.n - 1:
            raise ValueError(f"derivative order {d} out of range 0..{self.n - 1}")
        if m is not None and not 0 <= m <= self.n - 1:
            raise ValueError(f"piece index {m} out of range 0..{self.n - 1}")

    def piece(self, m: int, d: int = 0) -> Poly:
        """Polynomial of the d-th derivative on [m, m+1], in t = x - m."""
        self._check_orders(d, m)
        a = self.matrix.rows
        r = self.n - 1 - d
        if m == 0:
            return Poly((Fraction(0),) * r + (a[r][0] / factorial(r),))
        return Poly(tuple(a[r - k][m] / factorial(k) for k in range(r + 1)))

    def to_piecewise(self, d: int = 0) -> PiecewisePoly:
        """The d-th derivative as a piecewise polynomial on breakpoints 0..n."""
        self._check_orders(d)
        bps = tuple(Fraction(i) for i in range(self.n + 1))
        return PiecewisePoly(bps, tuple(self.piece(m, d) for m in range(self.n)))

    def value(self, x: RationalLike, d: int = 0) -> Fraction:
        """Exact value of the d-th derivative at x.

        Zero outside [0, n].  The piece index is floor(x) clamped to n-1, so
        at interior integer knots the right-limit piece is used (this only
        matters for the discontinuous derivative of order n-1), and the value
        at x = n is the last piece's closure value.
        """
        self._check_orders(d)
        x = Fraction(x)
        if x < 0 or x > self.n:
            return Fraction(0)
        m = min(floor(x), self.n - 1)
        return self.piece(m, d)(x - m)

    def __call__(self, x: RationalLike, d: int = 0) -> Fraction:
        return self.value(x, d)
