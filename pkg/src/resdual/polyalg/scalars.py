"""Exact Gaussian-rational arithmetic.

All commutative-algebra routines in this package run over Q(i) so that
Groebner bases, syzygies and membership certificates are exact.  A scalar
is a pair of :class:`fractions.Fraction` objects (real and imaginary part).
"""

from __future__ import annotations

from fractions import Fraction


class GaussRat:
    """A Gaussian rational a + b*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def from_value(cls, v) -> "GaussRat":
        if isinstance(v, GaussRat):
            return v
        if isinstance(v, complex):
            raise TypeError("float complex is not exact; build GaussRat from rationals")
        return cls(v, 0)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = GaussRat.from_value(other)
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        other = GaussRat.from_value(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussRat.from_value(other))

    def __rsub__(self, other):
        return GaussRat.from_value(other) + (-self)

    def __mul__(self, other):
        other = GaussRat.from_value(other)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussRat":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussRat")
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussRat.from_value(other).inverse()

    def __rtruediv__(self, other):
        return GaussRat.from_value(other) * self.inverse()

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*i)"


ZERO = GaussRat(0)
ONE = GaussRat(1)
I_UNIT = GaussRat(0, 1)
