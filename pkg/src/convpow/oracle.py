"""Brute-force numerical cross-check of the exact construction.

Convolution powers are recomputed here by repeated discrete trapezoid
convolution of grid samples, sharing no code with the exact piecewise
machinery.  Everything in this module is double precision on purpose: it is
a verification harness, not part of the exact library.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .piecewise import PiecewisePoly

_MAX_GRID_EXPONENT = 12  # memory guard: step no finer than 1/4096


@dataclass(frozen=True)
class SampledFunction:
    """Grid samples of a function on [0, n] with spacing ``step``."""

    step: Fraction
    samples: np.ndarray

    def __post_init__(self) -> None:
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 1 or samples.size < 2:
            raise ValueError("need a one-dimensional grid of at least two samples")
        if not np.all(np.isfinite(samples)):
            raise ValueError("samples must be finite")
        object.__setattr__(self, "step", Fraction(self.step))
        object.__setattr__(self, "samples", samples)

    @property
    def support_end(self) -> Fraction:
        return self.step * (len(self.samples) - 1)

    def grid(self) -> np.ndarray:
        return np.arange(len(self.samples)) * float(self.step)


def numeric_convolution_power(n: int, step) -> SampledFunction:
    """Sample the n-th convolution power of the unit box on a dyadic grid.

    Starts from the sampled box (endpoint samples 1/2, the trapezoid-
    consistent value at the jumps) and convolves n-1 times with the trapezoid
    quadrature window for integration over a sliding unit interval.
    """
    if n < 1:
        raise ValueError("power must be positive")
    step = Fraction(step)
    per_unit = step.denominator
    if step.numerator != 1 or per_unit & (per_unit - 1):
        raise ValueError("step must be 1/2**k")
    if per_unit > 2**_MAX_GRID_EXPONENT:
        raise ValueError("grid too fine")

    h = 1.0 / per_unit
    samples = np.ones(per_unit + 1)
    samples[0] = samples[-1] = 0.5
    window = np.full(per_unit + 1, h)
    window[0] = window[-1] = h / 2
    for _ in range(n - 1):
        samples = np.convolve(samples, window)
    return SampledFunction(step, samples)


def compare(exact: PiecewisePoly, approx: SampledFunction) -> float:
    """Max absolute deviation between an exact function and grid samples."""
    if exact.support is None or exact.support != (Fraction(0), approx.support_end):
        raise ValueError("support mismatch")
    deviation = 0.0
    for i, sampled in enumerate(approx.samples):
        x = approx.step * i
        deviation = max(deviation, abs(float(exact(x)) - float(sampled)))
    return deviation
