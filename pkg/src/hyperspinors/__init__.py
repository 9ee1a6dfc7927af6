"""Padovan and Perrin hyperbolic spinors over split quaternions and hyperbolic numbers."""

from .hypernum import HYPER_J, HyperNumber
from .sequences import PADOVAN, PERRIN, SequenceSpec
from .spinors import Spinor, bar, check, spinor, spinor_term, star, tilde
from .splitquat import SplitQuaternion

__version__ = "0.1.0"

__all__ = [
    "HYPER_J",
    "HyperNumber",
    "PADOVAN",
    "PERRIN",
    "SequenceSpec",
    "Spinor",
    "SplitQuaternion",
    "bar",
    "check",
    "spinor",
    "spinor_term",
    "star",
    "tilde",
]
