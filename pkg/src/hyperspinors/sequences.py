"""Scalar Padovan, Perrin and (s,t) sequences.

Every family obeys ``a_{n+3} = s a_{n+1} + t a_n``.  Padovan seeds are
``(1, 1, 1)``, Perrin seeds ``(3, 0, 2)``; ``s = t = 1`` gives the classical
sequences.  Indices are non-negative throughout.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DivisibilityViolation, IndexOutOfRange, PrecisionExceeded
from .hypernum import DEFAULT_REL_TOL


class Kind(str, enum.Enum):
    PADOVAN = "padovan"
    PERRIN = "perrin"
    CUSTOM = "custom"


DEFAULT_SEEDS = {Kind.PADOVAN: (1, 1, 1), Kind.PERRIN: (3, 0, 2)}


def _exact(x):
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"sequence parameters must be int or Fraction, got {x!r}")
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class SequenceSpec:
    kind: Kind = Kind.PADOVAN
    s: object = 1
    t: object = 1
    seeds: tuple | None = None

    def __post_init__(self):
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "s", _exact(self.s))
        object.__setattr__(self, "t", _exact(self.t))
        seeds = self.seeds
        if seeds is None:
            if kind is Kind.CUSTOM:
                raise ValueError("custom sequences need three seeds")
            seeds = DEFAULT_SEEDS[kind]
        seeds = tuple(_exact(x) for x in seeds)
        if len(seeds) != 3:
            raise ValueError(f"expected three seeds, got {len(seeds)}")
        object.__setattr__(self, "seeds", seeds)

    @classmethod
    def padovan(cls, s=1, t=1) -> SequenceSpec:
        return cls(Kind.PADOVAN, s, t)

    @classmethod
    def perrin(cls, s=1, t=1) -> SequenceSpec:
        return cls(Kind.PERRIN, s, t)

    @classmethod
    def custom(cls, seeds, s=1, t=1) -> SequenceSpec:
        return cls(Kind.CUSTOM, s, t, tuple(seeds))

    @property
    def classical(self) -> bool:
        """True when the recurrence is the plain ``a_{n+3} = a_{n+1} + a_n``."""
        return self.s == 1 and self.t == 1

    @property
    def named(self) -> bool:
        return self.kind is not Kind.CUSTOM and self.seeds == DEFAULT_SEEDS[self.kind]

    def label(self) -> str:
        text = self.kind.value
        if not self.classical:
            text += f"(s={self.s},t={self.t})"
        if self.kind is Kind.CUSTOM:
            text += "[" + ",".join(str(x) for x in self.seeds) + "]"
        return text


PADOVAN = SequenceSpec.padovan()
PERRIN = SequenceSpec.perrin()


def check_index(n: int, lowest: int = 0, what: str = "index") -> None:
    if n < lowest:
        raise IndexOutOfRange(f"{what} must be >= {lowest}, got {n}")


def seq_terms(spec: SequenceSpec, start: int, count: int) -> list:
    """Terms ``a_start, ..., a_{start+count-1}`` by plain iteration."""
    check_index(start)
    s, t = spec.s, spec.t
    a, b, c = spec.seeds
    out = []
    for k in range(start + count):
        if k >= start:
            out.append(a)
        a, b, c = b, c, s * b + t * a
    return out


def seq_term_iter(spec: SequenceSpec, n: int):
    check_index(n)
    s, t = spec.s, spec.t
    a, b, c = spec.seeds
    if spec.classical:
        for _ in range(n):
            a, b, c = b, c, a + b
    else:
        for _ in range(n):
            a, b, c = b, c, s * b + t * a
    return a


# --- characteristic roots --------------------------------------------------


@dataclass(frozen=True)
class CharRoots:
    """Roots of ``x**3 - x - 1`` and the Padovan Binet weights."""

    alpha: float
    beta: complex
    gamma: complex
    sigma1: float
    sigma2: complex
    sigma3: complex

    @property
    def roots(self) -> tuple:
        return (self.alpha, self.beta, self.gamma)

    @property
    def sigmas(self) -> tuple:
        return (self.sigma1, self.sigma2, self.sigma3)


def _newton_polish(z: complex, steps: int = 8) -> complex:
    for _ in range(steps):
        f = z * z * z - z - 1
        df = 3 * z * z - 1
        step = f / df
        z -= step
        if abs(step) <= 1e-17 * abs(z):
            break
    return z


@lru_cache(maxsize=None)
def char_roots() -> CharRoots:
    # Cardano's radicals, then Newton polishing; the radicals lose a few ulps.
    r = math.sqrt(23 / 3) / 6
    u = (0.5 + r) ** (1 / 3)
    v = (0.5 - r) ** (1 / 3)  # 0.5 - r > 0, so the real cube root is safe
    alpha = _newton_polish(complex(u + v, 0.0)).real
    beta = _newton_polish(complex(-(u + v) / 2, math.sqrt(3) / 2 * (u - v)))
    gamma = beta.conjugate()
    sigma1 = ((beta - 1) * (gamma - 1) / ((alpha - beta) * (alpha - gamma))).real
    sigma2 = (alpha - 1) * (gamma - 1) / ((beta - alpha) * (beta - gamma))
    sigma3 = sigma2.conjugate()
    return CharRoots(alpha, beta, gamma, sigma1, sigma2, sigma3)


def binet_weights(spec: SequenceSpec) -> tuple:
    """Per-root weights: the sigmas for Padovan, all ones for Perrin."""
    if not (spec.named and spec.classical):
        raise ValueError(f"closed forms cover only the classical Padovan and Perrin sequences, not {spec.label()}")
    if spec.kind is Kind.PADOVAN:
        return char_roots().sigmas
    return (1.0, 1.0, 1.0)


def round_real(value: complex, n: int, rel_tol: float = DEFAULT_REL_TOL) -> int:
    """Round a closed-form value of index ``n`` to the integer it represents.

    Raises PrecisionExceeded when the imaginary residual is above tolerance or
    when the accumulated rounding error of ``root**n`` (about ``n`` ulps of
    the result) could reach 1/4, i.e. the nearest integer is no longer
    guaranteed to be the exact term.
    """
    scale = max(1.0, abs(value))
    if abs(value.imag) > rel_tol * scale:
        raise PrecisionExceeded(f"imaginary residual {value.imag:.3g} on {value.real:.6g}")
    if 4 * (n + 4) * sys.float_info.epsilon * scale >= 0.25:
        raise PrecisionExceeded(f"n={n}: double precision cannot pin down a value of size {scale:.3g}")
    return int(round(value.real))


def seq_term_binet_value(spec: SequenceSpec, n: int) -> complex:
    check_index(n)
    roots = char_roots()
    return sum(w * r**n for w, r in zip(binet_weights(spec), roots.roots))


def seq_term_binet(spec: SequenceSpec, n: int, rel_tol: float = DEFAULT_REL_TOL) -> tuple:
    """Closed-form term as ``(float value, rounded int)``."""
    value = complex(seq_term_binet_value(spec, n))
    return value.real, round_real(value, n, rel_tol)


# --- Q-matrix ---------------------------------------------------------------


@dataclass(frozen=True)
class QMatrix:
    rows: tuple

    @classmethod
    def identity(cls, size: int = 3) -> QMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    @classmethod
    def companion(cls, spec: SequenceSpec) -> QMatrix:
        return cls(((0, 1, 0), (0, 0, 1), (spec.t, spec.s, 0)))

    def __matmul__(self, other: QMatrix) -> QMatrix:
        cols = list(zip(*other.rows))
        return QMatrix(tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows))

    def apply(self, vector):
        """Matrix times a column whose entries may be spinors or scalars."""
        out = []
        for row in self.rows:
            acc = None
            for coef, x in zip(row, vector):
                if coef == 0:
                    continue
                term = x if coef == 1 else coef * x
                acc = term if acc is None else acc + term
            out.append(acc if acc is not None else 0 * vector[0])
        return tuple(out)

    def __getitem__(self, idx):
        return self.rows[idx]


def qmatrix_power(spec: SequenceSpec, n: int) -> QMatrix:
    check_index(n)
    result = QMatrix.identity()
    base = QMatrix.companion(spec)
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


# --- Padovan <-> Perrin -----------------------------------------------------


def perrin_from_padovan(n: int) -> int:
    check_index(n, 5, "n")
    p5, p4 = seq_terms(PADOVAN, n - 5, 2)
    return 3 * p5 + 2 * p4


def padovan_from_perrin(n: int) -> int:
    """``P_{n-1}`` recovered as ``(R_{n-3} + 8 R_{n-2} + 10 R_{n-1}) / 23``."""
    check_index(n, 3, "n")
    r3, r2, r1 = seq_terms(PERRIN, n - 3, 3)
    total = r3 + 8 * r2 + 10 * r1
    q, rem = divmod(total, 23)
    if rem:
        raise DivisibilityViolation(f"{total} is not divisible by 23 (n={n})")
    return q
