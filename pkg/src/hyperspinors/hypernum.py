"""Hyperbolic (split-complex) numbers ``a + b j`` with ``j**2 = +1``.

The scalar ring is whatever the coefficients are: ``int`` for sequence work,
``Fraction`` where an inverse is needed, ``float``/``complex`` for closed
forms over the characteristic roots.  Nothing here forces a type; results
stay exact as long as the inputs are exact.

The unit ``j`` of this module is *not* the split-quaternion unit ``j``;
see :data:`HYPER_J` versus :data:`hyperspinors.splitquat.J`.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number

from .errors import NonInvertible

DEFAULT_REL_TOL = 1e-9

_EXACT = (int, Fraction)


def is_exact(x) -> bool:
    return isinstance(x, _EXACT)


def exact_div(a, b):
    """``a / b`` that stays rational when both operands are exact."""
    if is_exact(a) and is_exact(b):
        q = Fraction(a) / b
        return q.numerator if q.denominator == 1 else q
    return a / b


def _allow_long_ints() -> None:
    # CPython caps int -> str conversion at 4300 digits by default
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


def format_scalar(x) -> str:
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, int):
        if x.bit_length() > 14000:
            _allow_long_ints()
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, complex):
        if x.imag == 0:
            return format_scalar(x.real)
        return f"({x.real:.12g}{x.imag:+.12g}i)"
    if isinstance(x, float):
        if x == 0:
            return "0"
        return f"{x:.12g}"
    return str(x)


def parse_scalar(text: str):
    """Inverse of :func:`format_scalar` for exact values; floats otherwise."""
    text = text.strip()
    if len(text) > 4000:
        _allow_long_ints()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        q = Fraction(text)
    except ValueError:
        return complex(text.replace("i", "j")) if "i" in text else float(text)
    if "." in text or "e" in text.lower():
        return float(text)
    return q.numerator if q.denominator == 1 else q


def _is_negative(x) -> bool:
    if isinstance(x, complex):
        return x.imag == 0 and x.real < 0
    return x < 0


def _scalar_isclose(a, b, rel_tol: float, abs_tol: float) -> bool:
    if isinstance(a, complex) or isinstance(b, complex):
        return cmath.isclose(a, b, rel_tol=rel_tol, abs_tol=abs_tol)
    return math.isclose(a, b, rel_tol=rel_tol, abs_tol=abs_tol)


@dataclass(frozen=True)
class HyperNumber:
    re: object = 0
    hy: object = 0

    # --- ring structure -------------------------------------------------
    def __add__(self, other):
        if isinstance(other, HyperNumber):
            return HyperNumber(self.re + other.re, self.hy + other.hy)
        if isinstance(other, Number):
            return HyperNumber(self.re + other, self.hy)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> HyperNumber:
        return HyperNumber(-self.re, -self.hy)

    def __sub__(self, other):
        if isinstance(other, HyperNumber):
            return HyperNumber(self.re - other.re, self.hy - other.hy)
        if isinstance(other, Number):
            return HyperNumber(self.re - other, self.hy)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Number):
            return HyperNumber(other - self.re, -self.hy)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, HyperNumber):
            a0, a1 = self.re, self.hy
            b0, b1 = other.re, other.hy
            return HyperNumber(a0 * b0 + a1 * b1, a0 * b1 + a1 * b0)
        if isinstance(other, Number):
            return HyperNumber(self.re * other, self.hy * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return HyperNumber(other * self.re, other * self.hy)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, HyperNumber):
            return self * other.inverse()
        if isinstance(other, Number):
            return HyperNumber(exact_div(self.re, other), exact_div(self.hy, other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Number):
            return other * self.inverse()
        return NotImplemented

    # --- involutions and norms -------------------------------------------
    def conjugate(self) -> HyperNumber:
        return HyperNumber(self.re, -self.hy)

    def norm(self):
        """``a * conj(a) = re**2 - hy**2``; negative or zero values are normal."""
        return self.re * self.re - self.hy * self.hy

    def is_null(self) -> bool:
        return self.norm() == 0

    def inverse(self) -> HyperNumber:
        n = self.norm()
        if n == 0:
            raise NonInvertible(self)
        c = self.conjugate()
        return HyperNumber(exact_div(c.re, n), exact_div(c.hy, n))

    def channels(self) -> tuple:
        """Coordinates in the idempotent basis ``e± = (1 ± j)/2``.

        Multiplication is componentwise in these coordinates.
        """
        return self.re + self.hy, self.re - self.hy

    @classmethod
    def from_channels(cls, plus, minus) -> HyperNumber:
        return cls(exact_div(plus + minus, 2), exact_div(plus - minus, 2))

    # --- numerics ---------------------------------------------------------
    def map(self, fn) -> HyperNumber:
        return HyperNumber(fn(self.re), fn(self.hy))

    def isclose(self, other: HyperNumber, rel_tol: float = DEFAULT_REL_TOL, abs_tol: float = 0.0) -> bool:
        return _scalar_isclose(self.re, other.re, rel_tol, abs_tol) and _scalar_isclose(
            self.hy, other.hy, rel_tol, abs_tol
        )

    # --- rendering --------------------------------------------------------
    def __str__(self) -> str:
        if self.hy == 0:
            return format_scalar(self.re)
        sign = "-" if _is_negative(self.hy) else "+"
        mag = -self.hy if sign == "-" else self.hy
        return f"{format_scalar(self.re)}{sign}{format_scalar(mag)}j"

    def to_json(self) -> dict:
        return {"re": format_scalar(self.re), "hy": format_scalar(self.hy)}

    @classmethod
    def from_json(cls, data: dict) -> HyperNumber:
        return cls(parse_scalar(data["re"]), parse_scalar(data["hy"]))


ZERO = HyperNumber(0, 0)
ONE = HyperNumber(1, 0)
HYPER_J = HyperNumber(0, 1)
