"""Piecewise polynomials with exact rational breakpoints, and their calculus.

A ``PiecewisePoly`` is a strictly increasing tuple of breakpoints plus one
polynomial per interval, where piece ``i`` is expressed in the local variable
``t = x - breakpoints[i]``.  The function is identically zero outside
``[breakpoints[0], breakpoints[-1]]``.  The canonical zero function has no
breakpoints and no pieces; identically-zero pieces at either end are trimmed
on construction so that structural equality is mathematical equality.

Breakpoints are exact rationals, so breakpoint merging deduplicates by exact
equality; there is no tolerance anywhere in this module.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import Poly, RationalLike, format_poly


@dataclass(frozen=True)
class PiecewisePoly:
    breakpoints: tuple[Fraction, ...]
    pieces: tuple[Poly, ...]

    def __post_init__(self) -> None:
        bps = tuple(Fraction(b) for b in self.breakpoints)
        pcs = tuple(self.pieces)
        if len(pcs) != max(len(bps) - 1, 0):
            raise ValueError("need exactly one piece per breakpoint interval")
        if any(bps[i] >= bps[i + 1] for i in range(len(bps) - 1)):
            raise ValueError("breakpoints must be strictly increasing")
        while pcs and pcs[0].is_zero:
            bps, pcs = bps[1:], pcs[1:]
        while pcs and pcs[-1].is_zero:
            bps, pcs = bps[:-1], pcs[:-1]
        if not pcs:
            bps = ()
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", pcs)

    @classmethod
    def from_pieces(cls, breakpoints, pieces) -> PiecewisePoly:
        return cls(tuple(Fraction(b) for b in breakpoints), tuple(pieces))

    @classmethod
    def zero(cls) -> PiecewisePoly:
        return cls((), ())

    @property
    def is_zero(self) -> bool:
        return not self.pieces

    @property
    def support(self) -> tuple[Fraction, Fraction] | None:
        """Closed interval outside which the function vanishes; None if zero."""
        if self.is_zero:
            return None
        return self.breakpoints[0], self.breakpoints[-1]

    def widths(self) -> tuple[Fraction, ...]:
        return tuple(
            self.breakpoints[i + 1] - self.breakpoints[i] for i in range(len(self.pieces))
        )

    def __call__(self, x: RationalLike) -> Fraction:
        """Exact evaluation; right-continuous at interior breakpoints.

        Outside the support the value is 0.  At the right end of the support
        the last piece is evaluated at its full width (support closure).
        """
        if self.is_zero:
            return Fraction(0)
        x = Fraction(x)
        if x < self.breakpoints[0] or x > self.breakpoints[-1]:
            return Fraction(0)
        i = min(bisect_right(self.breakpoints, x) - 1, len(self.pieces) - 1)
        return self.pieces[i](x - self.breakpoints[i])

    def local_poly(self, c: Fraction) -> Poly:
        """Polynomial valid on the interval of the support containing ``c``,
        re-expressed in the local variable ``t = x - c``.

        Returns the zero polynomial when ``c`` lies left of the support or at
        or beyond its right end.
        """
        if self.is_zero or c < self.breakpoints[0] or c >= self.breakpoints[-1]:
            return Poly(())
        i = bisect_right(self.breakpoints, c) - 1
        return self.pieces[i].translate(self.breakpoints[i] - c)

    def translate(self, a: RationalLike) -> PiecewisePoly:
        """The function x -> f(x - a)."""
        a = Fraction(a)
        return PiecewisePoly(tuple(b + a for b in self.breakpoints), self.pieces)

    def scale_arg(self, factor: RationalLike) -> PiecewisePoly:
        """Mass-preserving reparametrization x -> factor * f(factor * x)."""
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        bps = tuple(b / factor for b in self.breakpoints)
        pcs = tuple(factor * p.dilate(factor) for p in self.pieces)
        return PiecewisePoly(bps, pcs)

    def reflect(self, c: RationalLike) -> PiecewisePoly:
        """The function x -> f(c - x)."""
        c = Fraction(c)
        if self.is_zero:
            return self
        bps = tuple(c - b for b in reversed(self.breakpoints))
        widths = self.widths()
        # piece on [b_i, b_{i+1}] with poly p maps to q(s) = p(width - s)
        pcs = tuple(
            self.pieces[i].dilate(-1).translate(widths[i])
            for i in range(len(self.pieces) - 1, -1, -1)
        )
        return PiecewisePoly(bps, pcs)

    def piecewise_derivative(self) -> PiecewisePoly:
        """Derivative taken piece by piece (jumps at breakpoints are ignored)."""
        return PiecewisePoly(self.breakpoints, tuple(p.derivative() for p in self.pieces))

    def antiderivative(self) -> PiecewisePoly:
        """Continuous antiderivative F with F = 0 at the left end of the support.

        The constant term of each piece is the accumulated total of all the
        previous pieces, which makes F exactly continuous at every breakpoint.
        """
        acc = Fraction(0)
        out = []
        for p, w in zip(self.pieces, self.widths()):
            prim = p.antiderivative()
            out.append(prim + Poly.of(acc))
            acc += prim(w)
        return PiecewisePoly(self.breakpoints, tuple(out))

    def mass(self) -> Fraction:
        """Exact integral over the whole support."""
        if self.is_zero:
            return Fraction(0)
        return self.integral(self.breakpoints[0], self.breakpoints[-1])

    def integral(self, a: RationalLike, b: RationalLike) -> Fraction:
        """Exact integral over [a, b], computed as F(b) - F(a)."""
        a, b = Fraction(a), Fraction(b)
        if a > b:
            raise ValueError("empty interval")
        if self.is_zero:
            return Fraction(0)
        lo, hi = self.breakpoints[0], self.breakpoints[-1]
        a, b = max(a, lo), min(b, hi)  # f vanishes outside [lo, hi]
        if a >= b:
            return Fraction(0)
        prim = self.antiderivative()
        return prim(b) - prim(a)

    def _combined(self, other: PiecewisePoly, sign: int) -> PiecewisePoly:
        if self.is_zero:
            return other if sign > 0 else -other
        if other.is_zero:
            return self
        bps = sorted(set(self.breakpoints) | set(other.breakpoints))
        pcs = []
        for c in bps[:-1]:
            p, q = self.local_poly(c), other.local_poly(c)
            pcs.append(p + q if sign > 0 else p - q)
        return PiecewisePoly(tuple(bps), tuple(pcs))

    def __add__(self, other: PiecewisePoly) -> PiecewisePoly:
        if not isinstance(other, PiecewisePoly):
            return NotImplemented
        return self._combined(other, +1)

    def __sub__(self, other: PiecewisePoly) -> PiecewisePoly:
        if not isinstance(other, PiecewisePoly):
            return NotImplemented
        return self._combined(other, -1)

    def __neg__(self) -> PiecewisePoly:
        return PiecewisePoly(self.breakpoints, tuple(-p for p in self.pieces))

    def convolve_with_box(self, a: RationalLike, b: RationalLike) -> PiecewisePoly:
        """Exact convolution with the indicator of the interval [a, b].

        The result is x -> F(x - a) - F(x - b) where F is the antiderivative
        of this function extended by 0 to the left of the support and by the
        total mass to the right of it.  Its breakpoints are the shifted-by-a
        and shifted-by-b copies of this function's breakpoints, merged.
        """
        a, b = Fraction(a), Fraction(b)
        if a >= b:
            raise ValueError("empty interval")
        if self.is_zero:
            return self
        prim = self.antiderivative()
        total = prim(self.breakpoints[-1])
        lo, hi = self.breakpoints[0], self.breakpoints[-1]

        def prim_local(c: Fraction, shift: Fraction) -> Poly:
            # F(x - shift) on the output interval starting at c, in t = x - c.
            # The merged breakpoints guarantee [c - shift, ...) does not
            # straddle any breakpoint of F, its left end or its right end.
            y0 = c - shift
            if y0 < lo:
                return Poly(())
            if y0 >= hi:
                return Poly.of(total)
            i = bisect_right(prim.breakpoints, y0) - 1
            return prim.pieces[i].translate(prim.breakpoints[i] - y0)

        bps = sorted({p + a for p in self.breakpoints} | {p + b for p in self.breakpoints})
        pcs = tuple(prim_local(c, a) - prim_local(c, b) for c in bps[:-1])
        return PiecewisePoly(tuple(bps), pcs)

    def as_json_dict(self) -> dict:
        """JSON-ready form: breakpoints and coefficients as "p/q" strings."""
        return {
            "breakpoints": [str(b) for b in self.breakpoints],
            "pieces": [[str(c) for c in p.coeffs] for p in self.pieces],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> PiecewisePoly:
        return cls(
            tuple(Fraction(b) for b in data["breakpoints"]),
            tuple(Poly.of(*cs) for cs in data["pieces"]),
        )

    def describe(self, var: str = "t") -> str:
        """One line per interval: ``[a, b]: <polynomial in t>``."""
        lines = [
            f"[{self.breakpoints[i]}, {self.breakpoints[i + 1]}]: {format_poly(p, var)}"
            for i, p in enumerate(self.pieces)
        ]
        return "\n".join(lines)


def box(a: RationalLike, b: RationalLike) -> PiecewisePoly:
    """Indicator function of the interval [a, b] as a one-piece function."""
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise ValueError("empty interval")
    return PiecewisePoly((a, b), (Poly.of(1),))


def continuity_order(f: PiecewisePoly, cap: int, include_ends: bool = False) -> int:
    """Highest order k <= cap such that derivatives 0..k match exactly at
    every interior breakpoint (and vanish at the support ends when
    ``include_ends``).  Returns -1 when even the values already mismatch.
    """
    if f.is_zero:
        return cap
    polys = list(f.pieces)
    widths = f.widths()
    order = -1
    for d in range(cap + 1):
        interior_ok = all(
            polys[i](widths[i]) == polys[i + 1](0) for i in range(len(polys) - 1)
        )
        ends_ok = (not include_ends) or (polys[0](0) == 0 and polys[-1](widths[-1]) == 0)
        if not (interior_ok and ends_ok):
            break
        order = d
        polys = [p.derivative() for p in polys]
    return order
