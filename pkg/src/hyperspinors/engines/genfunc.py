"""Ordinary, exponential and Poisson generating functions of spinor sequences."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import PrecisionExceeded
from ..hypernum import DEFAULT_REL_TOL
from ..sequences import SequenceSpec, binet_weights, char_roots
from ..spinors import ZERO_SPINOR, Spinor, binet_constants, seed_spinors, spinor_range

EGF_MAX_ABS_Y = 20.0


@dataclass(frozen=True)
class GenFunction:
    """``N(x) / (1 - s x^2 - t x^3)`` with a spinor numerator of degree <= 2."""

    numerator: tuple
    s: object = 1
    t: object = 1

    @property
    def denominator(self) -> tuple:
        return (1, 0, -self.s, -self.t)

    def coefficients(self, count: int) -> list:
        """First ``count`` power-series coefficients, by long division."""
        if count < 1:
            raise ValueError("count must be >= 1")
        den = self.denominator
        out = []
        for n in range(count):
            c = self.numerator[n] if n < len(self.numerator) else ZERO_SPINOR
            for k in range(1, len(den)):
                if n - k >= 0 and den[k] != 0:
                    c = c - den[k] * out[n - k]
            out.append(c)
        return out

    def numerator_polynomials(self) -> dict:
        """Coefficient lists (constant term first) of each scalar slot of the numerator."""
        slots = ("c1.re", "c1.hy", "c2.re", "c2.hy")
        return {name: [x.coefficients()[i] for x in self.numerator] for i, name in enumerate(slots)}


def generating_function(spec: SequenceSpec) -> GenFunction:
    x0, x1, x2 = seed_spinors(spec)
    return GenFunction((x0, x1, x2 - spec.s * x0), spec.s, spec.t)


def gf_coefficients(spec: SequenceSpec, count: int) -> list:
    return generating_function(spec).coefficients(count)


# --- exponential / Poisson ------------------------------------------------------


@dataclass(frozen=True)
class EgfResult:
    y: float
    terms: int
    poisson: bool
    closed: Spinor  # complex-valued
    series: Spinor  # float-valued
    deviation: float
    tail_bound: float

    def agrees(self, tol: float = DEFAULT_REL_TOL) -> bool:
        scale = max(1.0, max(abs(v) for v in self.series.coefficients()))
        return self.deviation <= self.tail_bound + tol * scale


def _check_y(y: float) -> None:
    if not math.isfinite(y) or abs(y) > EGF_MAX_ABS_Y:
        raise ValueError(f"|y| must be <= {EGF_MAX_ABS_Y}, got {y}")


def egf_closed_form(spec: SequenceSpec, y: float, poisson: bool = False) -> Spinor:
    _check_y(y)
    total = ZERO_SPINOR.map(complex)
    for w, r, const in zip(binet_weights(spec), char_roots().roots, binet_constants()):
        total = total + const * (w * cmath.exp(complex(r) * y))
    if poisson:
        total = total * math.exp(-y)
    return total


def egf_series(spec: SequenceSpec, y: float, terms: int, poisson: bool = False) -> Spinor:
    """``sum_{n < terms} psi_n y^n / n!`` summed in exact rationals, then rounded to floats."""
    _check_y(y)
    if terms < 1:
        raise ValueError("terms must be >= 1")
    yq = Fraction(y)
    weight = Fraction(1)
    total = ZERO_SPINOR
    for n, x in enumerate(spinor_range(spec, 0, terms)):
        if n:
            weight = weight * yq / n
        total = total + x * weight
    out = total.map(float)
    if poisson:
        out = out * math.exp(-y)
    return out


def egf_tail_bound(spec: SequenceSpec, y: float, terms: int, poisson: bool = False) -> float:
    """Bound on every component of ``sum_{n >= terms} psi_n y^n / n!``.

    Spinor coefficients are terms ``a_{n..n+3}`` and ``|a_m| <= W alpha^m`` with
    ``W`` the sum of the absolute Binet weights (the complex roots have modulus
    below one), so the tail is at most ``W alpha^3 sum_{k >= terms} (alpha |y|)^k / k!``.
    """
    weights = binet_weights(spec)
    alpha = char_roots().alpha
    w = sum(abs(x) for x in weights)
    z = alpha * abs(y)
    if z == 0:
        return 0.0
    log_term = terms * math.log(z) - math.lgamma(terms + 1)
    if log_term < -745:
        return 0.0
    term = math.exp(log_term)
    total = 0.0
    k = terms
    while term > 0:
        total += term
        k += 1
        term *= z / k
        if k > 2 * z and term < 1e-18 * total:
            break
    bound = w * alpha**3 * total
    if poisson:
        bound *= math.exp(-y)
    return bound


def egf_eval(
    spec: SequenceSpec, y: float, poisson: bool = False, terms: int = 60, tol: float = DEFAULT_REL_TOL
) -> EgfResult:
    _check_y(y)
    tail = egf_tail_bound(spec, y, terms, poisson)
    if tail > tol:
        raise PrecisionExceeded(f"truncation tail bound {tail:.3g} at y={y}, terms={terms} exceeds {tol:g}")
    closed = egf_closed_form(spec, y, poisson)
    series = egf_series(spec, y, terms, poisson)
    deviation = max(abs(a - b) for a, b in zip(closed.coefficients(), series.coefficients()))
    return EgfResult(float(y), terms, poisson, closed, series, deviation, tail)
