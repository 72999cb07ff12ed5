"""Exact univariate polynomial arithmetic over the rationals.

A polynomial is a dense tuple of ``fractions.Fraction`` coefficients, lowest
degree first.  The zero polynomial is the empty tuple.  Trailing zero
coefficients are stripped on construction, so structural equality of two
``Poly`` values is exactly mathematical equality; every test in this package
leans on that.

Scalars are ``Fraction`` throughout (arbitrary precision, always reduced,
denominator positive).  The text form for scalars is ``"p/q"`` (or ``"p"``
when the denominator is 1), which is ``str(Fraction)`` verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial


RationalLike = Fraction | int | str


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into an exact rational."""
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Render a rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(value)


@dataclass(frozen=True)
class Poly:
    """Dense rational polynomial; ``coeffs[k]`` is the degree-k coefficient."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cs = tuple(Fraction(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def of(cls, *coeffs: RationalLike) -> Poly:
        """Build a polynomial from coefficients, lowest degree first."""
        return cls(tuple(Fraction(c) for c in coeffs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x: RationalLike) -> Fraction:
        """Exact Horner evaluation."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return Poly(tuple(merged))

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Poly | RationalLike) -> Poly:
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly(())
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(tuple(out))
        c = Fraction(other)
        return Poly(tuple(c * v for v in self.coeffs))

    def __rmul__(self, other: RationalLike) -> Poly:
        return self.__mul__(other)

    def translate(self, a: RationalLike) -> Poly:
        """Return q with q(x) = p(x - a), by exact binomial expansion."""
        a = Fraction(a)
        if a == 0 or self.is_zero:
            return self
        out = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = Fraction(1)  # (-a)**(k-j), built up as j descends
            for j in range(k, -1, -1):
                out[j] += c * comb(k, j) * power
                power *= -a
        return Poly(tuple(out))

    def dilate(self, factor: RationalLike) -> Poly:
        """Return q with q(x) = p(factor * x)."""
        factor = Fraction(factor)
        power = Fraction(1)
        out = []
        for c in self.coeffs:
            out.append(c * power)
            power *= factor
        return Poly(tuple(out))

    def derivative(self) -> Poly:
        return Poly(tuple(c * k for k, c in enumerate(self.coeffs) if k >= 1))

    def antiderivative(self) -> Poly:
        """Antiderivative with zero constant term."""
        return Poly((Fraction(0),) + tuple(c / (k + 1) for k, c in enumerate(self.coeffs)))

    def __str__(self) -> str:
        return format_poly(self)


def divided_power(k: int) -> Poly:
    """The monomial x**k / k! (the k-th divided power)."""
    if k < 0:
        raise ValueError("divided power index must be nonnegative")
    return Poly((Fraction(0),) * k + (Fraction(1, factorial(k)),))


def format_poly(p: Poly, var: str = "t") -> str:
    """Explicit monomial sum, lowest degree first, e.g. ``"1/6 + 1/2*t - t^3"``."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)
