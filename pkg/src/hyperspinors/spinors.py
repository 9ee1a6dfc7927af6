"""Hyperbolic spinors and the Padovan/Perrin spinor sequences.

A spinor is a column of two hyperbolic numbers.  Split quaternions map to
spinors through ``f(q0 + q1 i + q2 j + q3 k) = [q0 + q3 j; -q1 + q2 j]``, and
the n-th sequence spinor is the image of ``a_n + a_{n+1} i + a_{n+2} j +
a_{n+3} k``.

The four conjugations are built from their defining pieces (quaternion
conjugation pulled back through ``f``, componentwise hyperbolic conjugation,
the matrix ``C = [[0, 1], [-1, 0]]`` and the hyperbolic unit ``j``), never
from expanded component formulas.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from numbers import Number

from .errors import DivisibilityViolation, IndexOutOfRange
from .hypernum import DEFAULT_REL_TOL, HYPER_J, HyperNumber
from .sequences import (
    PADOVAN,
    PERRIN,
    SequenceSpec,
    binet_weights,
    char_roots,
    check_index,
    round_real,
    seq_terms,
)
from .splitquat import SplitQuaternion, quat_conjugate, seq_quaternion_materialize

# Largest spinor index whose closed form is guaranteed to round exactly in
# double precision (components reach a_{n+3}; the scalar guard trips at 102).
BINET_EXACT_BOUND = 96


@dataclass(frozen=True)
class Spinor:
    c1: HyperNumber
    c2: HyperNumber

    def components(self) -> tuple:
        return (self.c1, self.c2)

    def __add__(self, other):
        if not isinstance(other, Spinor):
            return NotImplemented
        return Spinor(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other):
        if not isinstance(other, Spinor):
            return NotImplemented
        return Spinor(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> Spinor:
        return Spinor(-self.c1, -self.c2)

    def __mul__(self, other):
        if isinstance(other, (Number, HyperNumber)):
            return Spinor(self.c1 * other, self.c2 * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Number, HyperNumber)):
            return Spinor(other * self.c1, other * self.c2)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number):
            return Spinor(self.c1 / other, self.c2 / other)
        return NotImplemented

    def map(self, fn) -> Spinor:
        return Spinor(self.c1.map(fn), self.c2.map(fn))

    def isclose(self, other: Spinor, rel_tol: float = DEFAULT_REL_TOL, abs_tol: float = 0.0) -> bool:
        return self.c1.isclose(other.c1, rel_tol, abs_tol) and self.c2.isclose(other.c2, rel_tol, abs_tol)

    def coefficients(self) -> tuple:
        return (self.c1.re, self.c1.hy, self.c2.re, self.c2.hy)

    def __str__(self) -> str:
        return f"[{self.c1}; {self.c2}]"

    def to_json(self) -> dict:
        return {"c1": self.c1.to_json(), "c2": self.c2.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> Spinor:
        return cls(HyperNumber.from_json(data["c1"]), HyperNumber.from_json(data["c2"]))


def spinor(a, b, c, d) -> Spinor:
    """Shorthand for ``[a + b j; c + d j]``."""
    return Spinor(HyperNumber(a, b), HyperNumber(c, d))


ZERO_SPINOR = spinor(0, 0, 0, 0)

C_MATRIX = ((0, 1), (-1, 0))


def apply_matrix(matrix, x: Spinor) -> Spinor:
    (a, b), (c, d) = matrix
    return Spinor(a * x.c1 + b * x.c2, c * x.c1 + d * x.c2)


# --- the map f ---------------------------------------------------------------


def to_spinor(q: SplitQuaternion) -> Spinor:
    return Spinor(HyperNumber(q.q0, q.q3), HyperNumber(-q.q1, q.q2))


def from_spinor(x: Spinor) -> SplitQuaternion:
    """Inverse of :func:`to_spinor` (``f`` is injective)."""
    return SplitQuaternion(x.c1.re, -x.c2.re, x.c2.hy, x.c1.hy)


def spinor_from_terms(a0, a1, a2, a3) -> Spinor:
    return Spinor(HyperNumber(a0, a3), HyperNumber(-a1, a2))


# --- conjugations ----------------------------------------------------------------


class Conj(str, enum.Enum):
    STAR = "star"
    BAR = "bar"
    TILDE = "tilde"
    CHECK = "check"


def star(x: Spinor) -> Spinor:
    return to_spinor(quat_conjugate(from_spinor(x)))


def bar(x: Spinor) -> Spinor:
    return Spinor(x.c1.conjugate(), x.c2.conjugate())


def tilde(x: Spinor) -> Spinor:
    return HYPER_J * apply_matrix(C_MATRIX, bar(x))


def check(x: Spinor) -> Spinor:
    return -apply_matrix(C_MATRIX, bar(x))


_CONJUGATIONS = {Conj.STAR: star, Conj.BAR: bar, Conj.TILDE: tilde, Conj.CHECK: check}


def spinor_conjugate(x: Spinor, kind: Conj | str) -> Spinor:
    return _CONJUGATIONS[Conj(kind)](x)


# --- sequence spinors ----------------------------------------------------------


def seed_spinors(spec: SequenceSpec) -> tuple:
    a = seq_terms(spec, 0, 6)
    return tuple(spinor_from_terms(*a[k : k + 4]) for k in range(3))


def spinor_iter(spec: SequenceSpec, n: int) -> Spinor:
    """n-th spinor by stepping the recurrence forward from the seeds.

    Only a window of three scalars is carried; the spinor is assembled from
    ``a_n .. a_{n+3}`` at the end.
    """
    check_index(n)
    a, b, c = spec.seeds
    s, t = spec.s, spec.t
    if spec.classical:
        for _ in range(n):
            a, b, c = b, c, b + a
    else:
        for _ in range(n):
            a, b, c = b, c, s * b + t * a
    return spinor_from_terms(a, b, c, s * b + t * a)


def spinor_range(spec: SequenceSpec, start: int, stop: int) -> list:
    """Spinors ``start .. stop - 1`` from a single pass over the scalars."""
    a = seq_terms(spec, start, max(stop - start, 0) + 3)
    return [spinor_from_terms(*a[k : k + 4]) for k in range(stop - start)]


def spinor_term(spec: SequenceSpec, n: int, backend: str = "iter") -> Spinor:
    from .engines.backends import term

    return term(spec, n, backend)


# --- norm ----------------------------------------------------------------------


def hyper_inner(x: Spinor, y: Spinor) -> HyperNumber:
    """``x^t y`` for columns of hyperbolic numbers."""
    return x.c1 * y.c1 + x.c2 * y.c2


def norm_of(x: Spinor):
    value = hyper_inner(bar(x), x)
    if value.hy != 0:
        raise ArithmeticError(f"spinor norm of {x} has a nonzero j-part {value.hy}")
    return value.re


def spinor_norm(spec: SequenceSpec, n: int):
    return norm_of(spinor_range(spec, n, n + 1)[0])


def quaternion_norm_path(spec: SequenceSpec, n: int):
    """The same norm read off the split quaternion, for cross-checking."""
    return seq_quaternion_materialize(spec, n).norm()


# --- closed forms ----------------------------------------------------------------


def binet_constants() -> tuple:
    """Spinors ``[1 + r^3 j; r(-1 + r j)]`` for the three roots ``r``."""
    out = []
    for r in char_roots().roots:
        r = complex(r)
        out.append(Spinor(HyperNumber(1 + 0j, r**3), HyperNumber(-r, r * r)))
    return tuple(out)


def spinor_binet(spec: SequenceSpec, n: int) -> Spinor:
    """Closed-form spinor over complex doubles (Padovan or Perrin only)."""
    check_index(n)
    weights = binet_weights(spec)
    total = ZERO_SPINOR.map(complex)
    for w, r, const in zip(weights, char_roots().roots, binet_constants()):
        total = total + const * (w * complex(r) ** n)
    return total


def round_spinor(x: Spinor, n: int, rel_tol: float = DEFAULT_REL_TOL) -> Spinor:
    """Round a complex spinor of index ``n`` to the exact integer spinor."""
    # components carry a_n .. a_{n+3}, so the error budget is that of index n+3
    return x.map(lambda v: round_real(complex(v), n + 3, rel_tol))


# --- sums and relations --------------------------------------------------------


class Stride(str, enum.Enum):
    ALL = "all"
    EVEN = "even"
    ODD = "odd"


def _require_classical(spec: SequenceSpec, what: str) -> None:
    if not spec.classical:
        raise ValueError(f"{what} closed forms hold only for s = t = 1, got {spec.label()}")


def spinor_partial_sum(spec: SequenceSpec, m: int, stride: Stride | str = Stride.ALL) -> Spinor:
    """Closed form of ``sum_{n=0}^{m}`` of the chosen sub-sequence."""
    check_index(m, 0, "m")
    _require_classical(spec, "partial-sum")
    stride = Stride(stride)
    if stride is Stride.ALL:
        hi, lo = m + 5, 4
    elif stride is Stride.EVEN:
        hi, lo = 2 * m + 3, 1
    else:
        hi, lo = 2 * m + 4, 2
    return spinor_iter(spec, hi) - spinor_iter(spec, lo)


def direct_partial_sum(spec: SequenceSpec, m: int, stride: Stride | str = Stride.ALL) -> Spinor:
    stride = Stride(stride)
    if stride is Stride.ALL:
        idx = range(0, m + 1)
    elif stride is Stride.EVEN:
        idx = range(0, 2 * m + 1, 2)
    else:
        idx = range(1, 2 * m + 2, 2)
    terms = spinor_range(spec, 0, idx[-1] + 1)
    total = ZERO_SPINOR
    for k in idx:
        total = total + terms[k]
    return total


class Relation(str, enum.Enum):
    PERRIN_FROM_PADOVAN = "perrin_from_padovan"
    PADOVAN_FROM_PERRIN = "padovan_from_perrin"


def _divide_exact(x: Spinor, d: int) -> Spinor:
    out = []
    for v in x.coefficients():
        q, r = divmod(v, d)
        if r:
            raise DivisibilityViolation(f"coefficient {v} of {x} is not divisible by {d}")
        out.append(q)
    return spinor(*out)


def spinor_relation(kind: Relation | str, n: int) -> Spinor:
    """``3 psi_{n-5} + 2 psi_{n-4}`` (= phi_n) or ``(phi_{n-3} + 8 phi_{n-2} + 10 phi_{n-1}) / 23`` (= psi_{n-1})."""
    kind = Relation(kind)
    if kind is Relation.PERRIN_FROM_PADOVAN:
        if n < 5:
            raise IndexOutOfRange(f"n must be >= 5, got {n}")
        p5, p4 = spinor_range(PADOVAN, n - 5, n - 3)
        return 3 * p5 + 2 * p4
    if n < 3:
        raise IndexOutOfRange(f"n must be >= 3, got {n}")
    r3, r2, r1 = spinor_range(PERRIN, n - 3, n)
    return _divide_exact(r3 + 8 * r2 + 10 * r1, 23)

