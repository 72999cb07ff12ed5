"""Spline bases generated by convolving a kernel with partition indicators.

Convolving the n-th convolution power with the indicator of each interval of
a partition yields one smooth bump per interval.  These bumps span a spline
space of dimension equal to the interval count; linear independence is
certified exactly through the determinant of their Gram matrix.  Summing
consecutive integer translates of the kernel instead produces a partition of
unity: a function that is the constant 1 on an interior plateau.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import pairwise

from .kernel import SplineKernel
from .piecewise import PiecewisePoly
from .polynomial import Poly, RationalLike

#: Above this basis size the exact Gram determinant gets expensive; callers
#: should fall back to a sampled rank check instead.
MAX_EXACT_GRAM_SIZE = 12


@dataclass(frozen=True)
class Partition:
    """Finitely many strictly increasing knots; cuts an interval into at
    least one piece.  Infinite (whole-line) partitions are not supported."""

    knots: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        knots = tuple(Fraction(k) for k in self.knots)
        if len(knots) < 2:
            raise ValueError("invalid partition: need at least two knots")
        if any(a >= b for a, b in pairwise(knots)):
            raise ValueError("invalid partition: knots must be strictly increasing")
        object.__setattr__(self, "knots", knots)

    @classmethod
    def of(cls, knots) -> Partition:
        return cls(tuple(Fraction(k) for k in knots))

    def intervals(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple(pairwise(self.knots))

    def __len__(self) -> int:
        return len(self.knots) - 1


@dataclass(frozen=True)
class SplineBasis:
    kernel_n: int
    partition: Partition
    elements: tuple[PiecewisePoly, ...]

    def __post_init__(self) -> None:
        if len(self.elements) != len(self.partition):
            raise ValueError("need exactly one basis element per partition interval")


@dataclass(frozen=True)
class IndependenceReport:
    independent: bool
    gram_determinant: Fraction


def build_basis(partition: Partition, kernel: SplineKernel) -> SplineBasis:
    """One basis element per interval: the kernel convolved with its indicator."""
    if kernel.n < 2:
        warnings.warn(
            "kernel power 1 produces discontinuous basis elements", stacklevel=2
        )
    f = kernel.to_piecewise(0)
    elements = tuple(f.convolve_with_box(a, b) for a, b in partition.intervals())
    return SplineBasis(kernel.n, partition, elements)


def product_integral(f: PiecewisePoly, g: PiecewisePoly) -> Fraction:
    """Exact integral of f*g over the overlap of their supports."""
    if f.is_zero or g.is_zero:
        return Fraction(0)
    lo = max(f.breakpoints[0], g.breakpoints[0])
    hi = min(f.breakpoints[-1], g.breakpoints[-1])
    if lo >= hi:
        return Fraction(0)
    cuts = sorted(b for b in set(f.breakpoints) | set(g.breakpoints) if lo <= b <= hi)
    total = Fraction(0)
    for a, b in pairwise(cuts):
        prim = (f.local_poly(a) * g.local_poly(a)).antiderivative()
        total += prim(b - a)
    return total


def gram_matrix(basis: SplineBasis) -> tuple[tuple[Fraction, ...], ...]:
    """Exact matrix of pairwise product integrals of the basis elements."""
    els = basis.elements
    size = len(els)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            rows[i][j] = rows[j][i] = product_integral(els[i], els[j])
    return tuple(tuple(row) for row in rows)


def _determinant(rows: tuple[tuple[Fraction, ...], ...]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    size = len(rows)
    m = [list(row) for row in rows]
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] / m[col][col]
            if factor == 0:
                continue
            for c in range(col, size):
                m[r][c] -= factor * m[col][c]
    return det


def check_independence(basis: SplineBasis) -> IndependenceReport:
    """Certify linear independence via the exact Gram determinant."""
    if len(basis.elements) > MAX_EXACT_GRAM_SIZE:
        raise ValueError("use sampled rank check")
    det = _determinant(gram_matrix(basis))
    return IndependenceReport(det != 0, det)


def partition_of_unity(kernel: SplineKernel, count: int) -> PiecewisePoly:
    """Sum of ``count`` consecutive integer translates of the kernel.

    For count >= n the sum is the constant 1 on the plateau [n-1, count],
    exactly, piece by piece.
    """
    if count < kernel.n:
        raise ValueError("no interior plateau")
    f = kernel.to_piecewise(0)
    total = f
    for k in range(1, count):
        total = total + f.translate(k)
    return total


def plateau_pieces(f: PiecewisePoly, lo: RationalLike, hi: RationalLike) -> tuple[Poly, ...]:
    """The pieces of f whose intervals lie inside [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    return tuple(
        p
        for i, p in enumerate(f.pieces)
        if f.breakpoints[i] >= lo and f.breakpoints[i + 1] <= hi
    )


def basis_to_json(basis: SplineBasis) -> str:
    """Basis elements as a JSON list of piecewise functions."""
    return json.dumps([e.as_json_dict() for e in basis.elements])
