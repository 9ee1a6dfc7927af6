"""Split quaternions and the split Padovan/Perrin quaternion constructors.

Units obey ``i² = -1``, ``j² = k² = +1``, ``ij = -ji = k``, ``jk = -kj = -i``,
``ki = -ik = j``.  The norm ``q0² + q1² - q2² - q3²`` is indefinite.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Number

from .hypernum import _is_negative, format_scalar, parse_scalar
from .sequences import SequenceSpec, seq_terms


@dataclass(frozen=True)
class SplitQuaternion:
    q0: object = 0
    q1: object = 0
    q2: object = 0
    q3: object = 0

    @classmethod
    def unit(cls, name: str) -> SplitQuaternion:
        coeffs = [0, 0, 0, 0]
        coeffs["1ijk".index(name)] = 1
        return cls(*coeffs)

    def coeffs(self) -> tuple:
        return (self.q0, self.q1, self.q2, self.q3)

    def scalar_part(self):
        return self.q0

    def vector_part(self) -> tuple:
        return (self.q1, self.q2, self.q3)

    def __add__(self, other):
        if not isinstance(other, SplitQuaternion):
            return NotImplemented
        return SplitQuaternion(*(a + b for a, b in zip(self.coeffs(), other.coeffs())))

    def __sub__(self, other):
        if not isinstance(other, SplitQuaternion):
            return NotImplemented
        return SplitQuaternion(*(a - b for a, b in zip(self.coeffs(), other.coeffs())))

    def __neg__(self) -> SplitQuaternion:
        return SplitQuaternion(*(-a for a in self.coeffs()))

    def __mul__(self, other):
        if isinstance(other, Number):
            return SplitQuaternion(*(a * other for a in self.coeffs()))
        if not isinstance(other, SplitQuaternion):
            return NotImplemented
        return quat_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, Number):
            return SplitQuaternion(*(other * a for a in self.coeffs()))
        return NotImplemented

    def conjugate(self) -> SplitQuaternion:
        return quat_conjugate(self)

    def norm(self):
        return quat_norm(self)

    def __str__(self) -> str:
        parts = [format_scalar(self.q0)]
        for coef, unit in zip(self.vector_part(), "ijk"):
            if _is_negative(coef):
                parts.append(f"- {format_scalar(-coef)}{unit}")
            else:
                parts.append(f"+ {format_scalar(coef)}{unit}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {f"q{i}": format_scalar(c) for i, c in enumerate(self.coeffs())}

    @classmethod
    def from_json(cls, data: dict) -> SplitQuaternion:
        return cls(*(parse_scalar(data[f"q{i}"]) for i in range(4)))


def quat_mul(a: SplitQuaternion, b: SplitQuaternion) -> SplitQuaternion:
    q0, q1, q2, q3 = a.coeffs()
    p0, p1, p2, p3 = b.coeffs()
    return SplitQuaternion(
        q0 * p0 - q1 * p1 + q2 * p2 + q3 * p3,
        q0 * p1 + q1 * p0 - q2 * p3 + q3 * p2,
        q0 * p2 + q2 * p0 - q1 * p3 + q3 * p1,
        q0 * p3 + q3 * p0 + q1 * p2 - q2 * p1,
    )


def quat_conjugate(a: SplitQuaternion) -> SplitQuaternion:
    return SplitQuaternion(a.q0, -a.q1, -a.q2, -a.q3)


def quat_norm(a: SplitQuaternion):
    return a.q0 * a.q0 + a.q1 * a.q1 - a.q2 * a.q2 - a.q3 * a.q3


I = SplitQuaternion.unit("i")
J = SplitQuaternion.unit("j")
K = SplitQuaternion.unit("k")


@dataclass(frozen=True)
class SeqQuaternion:
    """Lazy handle on the split quaternion ``a_n + a_{n+1} i + a_{n+2} j + a_{n+3} k``."""

    base: SequenceSpec
    n: int

    def materialize(self) -> SplitQuaternion:
        return seq_quaternion_materialize(self.base, self.n)


def seq_quaternion_materialize(spec: SequenceSpec, n: int) -> SplitQuaternion:
    return SplitQuaternion(*seq_terms(spec, n, 4))
