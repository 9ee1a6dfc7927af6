"""Exception types raised across the package."""

from __future__ import annotations


class HyperSpinorError(Exception):
    """Base class for every error this package raises on purpose."""


class NonInvertible(HyperSpinorError, ZeroDivisionError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"{value} lies on the null cone and has no inverse")


class IndexOutOfRange(HyperSpinorError, ValueError):
    pass


class DivisibilityViolation(HyperSpinorError, ArithmeticError):
    pass


class PrecisionExceeded(HyperSpinorError, ArithmeticError):
    pass


class UnsupportedInstance(HyperSpinorError):
    """A construction needs an inverse that the given seeds do not have."""


class BackendDisagreement(HyperSpinorError):
    def __init__(self, first: str, second: str, n: int, lhs, rhs):
        self.first = first
        self.second = second
        self.n = n
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"backends {first} and {second} disagree at n={n}: {lhs} != {rhs}")
