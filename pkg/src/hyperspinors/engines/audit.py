"""Exact audit of the printed identity corpus for Padovan (psi) and Perrin (phi) spinors.

Every identity is a pair of callables ``(env, n) -> Spinor``.  Left-hand sides
are evaluated structurally (conjugations from their definitions, sequence
spinors from the recurrence); right-hand sides transcribe the printed
component formulas term by term, typos included.  Identities whose id ends in
``/corrected`` (or ``/as-difference``) are derived variants, kept apart from
the printed text so that a mismatch in the original is never hidden.

Comparisons are exact; there is no tolerance anywhere in this module.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from ..errors import IndexOutOfRange
from ..hypernum import HYPER_J, HyperNumber
from ..sequences import PADOVAN, PERRIN, SequenceSpec, qmatrix_power, seq_terms
from ..spinors import (
    C_MATRIX,
    Spinor,
    apply_matrix,
    bar,
    check,
    norm_of,
    seed_spinors,
    spinor,
    spinor_from_terms,
    star,
    tilde,
)
from ..splitquat import SplitQuaternion
from .determinants import term_det_banded
from .genfunc import generating_function

EXACT = "exact"
MISMATCH = "mismatch"


class SeqContext:
    """Precomputed scalar terms and spinors of one sequence."""

    def __init__(self, spec: SequenceSpec, top: int):
        self.spec = spec
        self.terms = seq_terms(spec, 0, top + 4)
        self.top = top

    def a(self, k: int):
        if k < 0:
            raise IndexOutOfRange(f"negative index {k}")
        return self.terms[k]

    def x(self, k: int) -> Spinor:
        return spinor_from_terms(*(self.a(k + i) for i in range(4)))


@dataclass
class Env:
    P: SeqContext
    R: SeqContext


@dataclass(frozen=True)
class Identity:
    id: str
    lo: int
    lhs: Callable
    rhs: Callable
    # "n" for term identities, "m" for summation bounds, "k" for numerator coefficients
    var: str = "n"
    hi: int | None = None  # fixed upper index, for finite families


def h(re, hy=0) -> HyperNumber:
    return HyperNumber(re, hy)


def col(c1: HyperNumber, c2: HyperNumber) -> Spinor:
    return Spinor(c1, c2)


def _pair(family: str, letters: str, lo: int, lhs, rhs, **kw) -> list:
    """Instantiate one printed template for psi (Padovan) and phi (Perrin)."""
    first, second = letters
    return [
        Identity(f"{family}({first})", lo, lambda e, n: lhs(e.P, n), lambda e, n: rhs(e.P, n), **kw),
        Identity(f"{family}({second})", lo, lambda e, n: lhs(e.R, n), lambda e, n: rhs(e.R, n), **kw),
    ]


def _c(x: Spinor) -> Spinor:
    return apply_matrix(C_MATRIX, x)


def _j(x: Spinor) -> Spinor:
    return HYPER_J * x


# --- the corpus -----------------------------------------------------------------


def _definitions() -> list:
    out = []
    out += _pair(
        "recurrence", "ab", 0, lambda s, n: s.x(n + 3), lambda s, n: s.x(n + 1) + s.x(n)
    )
    out += _pair(
        "def-star", "ab", 0,
        lambda s, n: star(s.x(n)),
        lambda s, n: col(h(s.a(n), -s.a(n + 3)), h(s.a(n + 1), -s.a(n + 2))),
    )
    out += _pair(
        "def-bar", "ab", 0,
        lambda s, n: bar(s.x(n)),
        lambda s, n: col(h(s.a(n), -s.a(n + 3)), h(-s.a(n + 1), -s.a(n + 2))),
    )
    out += _pair(
        "def-tilde", "ab", 0,
        lambda s, n: tilde(s.x(n)),
        lambda s, n: col(h(-s.a(n + 2), -s.a(n + 1)), h(s.a(n + 3), -s.a(n))),
    )
    out += _pair(
        "def-check", "ab", 0,
        lambda s, n: check(s.x(n)),
        lambda s, n: col(h(s.a(n + 1), s.a(n + 2)), h(s.a(n), -s.a(n + 3))),
    )
    out += _pair(
        "norm", "ab", 0,
        lambda s, n: spinor(SplitQuaternion(*(s.a(n + i) for i in range(4))).norm(), 0, 0, 0),
        lambda s, n: spinor(norm_of(s.x(n)), 0, 0, 0),
    )
    return out


def _initial_values() -> list:
    printed = {
        "psi": [spinor(1, 2, -1, 1), spinor(1, 2, -1, 2), spinor(1, 3, -2, 2)],
        "phi": [spinor(3, 3, 0, 2), spinor(0, 2, -2, 3), spinor(2, 5, -3, 2)],
    }
    return [
        Identity("initial(psi)", 0, lambda e, k: e.P.x(k), lambda e, k: printed["psi"][k], var="k", hi=2),
        Identity("initial(phi)", 0, lambda e, k: e.R.x(k), lambda e, k: printed["phi"][k], var="k", hi=2),
    ]


def _family_th2() -> list:
    out = []
    out += _pair("th-2", "ab", 0, lambda s, n: bar(s.x(n)), lambda s, n: _c(check(s.x(n))))
    out += _pair("th-2", "cd", 0, lambda s, n: check(s.x(n)), lambda s, n: -_j(tilde(s.x(n))))
    out += _pair("th-2", "ef", 0, lambda s, n: bar(s.x(n)), lambda s, n: -_j(_c(tilde(s.x(n)))))
    return out


def _family_th3_4() -> list:
    out = []
    out += _pair(
        "th-3", "ab", 0, lambda s, n: s.x(n) + star(s.x(n)), lambda s, n: col(h(2 * s.a(n)), h(0))
    )
    out += _pair(
        "th-3", "cd", 0,
        lambda s, n: s.x(n) - star(s.x(n)),
        lambda s, n: 2 * col(h(0, s.a(n + 3)), h(-s.a(n + 1), s.a(n + 2))),
    )
    out += _pair(
        "th-4", "ab", 0, lambda s, n: s.x(n) + bar(s.x(n)), lambda s, n: 2 * col(h(s.a(n)), h(-s.a(n + 1)))
    )
    out += _pair(
        "th-4", "cd", 0,
        lambda s, n: s.x(n) - bar(s.x(n)),
        lambda s, n: _j(2 * col(h(s.a(n + 3)), h(s.a(n + 2)))),
    )
    return out


def _family_th5_1() -> list:
    out = []
    out += _pair(
        "th-5-1", "ab", 1,
        lambda s, n: s.x(n) + tilde(s.x(n)),
        lambda s, n: col(h(-s.a(n - 1), s.a(n)), h(s.a(n), s.a(n - 1))),
    )

    def rhs_cd(s, n):
        return col(
            h(s.a(n) + s.a(n + 2), s.a(n + 3) + s.a(n + 1)),
            h(-s.a(n + 1) - s.a(n + 3), s.a(n + 2) + s.a(n)),
        )

    out += _pair("th-5-1", "cd", 0, lambda s, n: s.x(n) + tilde(s.x(n)), rhs_cd)
    out += _corrected(_pair("th-5-1", "cd", 0, lambda s, n: s.x(n) - tilde(s.x(n)), rhs_cd))
    return out


def _family_th5() -> list:
    out = []
    out += _pair(
        "th-5", "ab", 0,
        lambda s, n: s.x(n) + check(s.x(n)),
        lambda s, n: col(h(s.a(n + 3), s.a(n + 5)), h(-s.a(n + 1) + s.a(n), s.a(n + 2) - s.a(n + 3))),
    )
    out += _pair(
        "th-5", "cd", 0,
        lambda s, n: s.x(n) - check(s.x(n)),
        lambda s, n: col(h(s.a(n) - s.a(n + 1), s.a(n + 3) - s.a(n + 2)), h(-s.a(n + 3), s.a(n + 5))),
    )
    return out


def _family_th6() -> list:
    out = []
    out += _pair(
        "th-6", "ab", 0,
        lambda s, n: star(s.x(n)) + bar(s.x(n)),
        lambda s, n: 2 * col(h(s.a(n), -s.a(n + 3)), h(0, s.a(n + 2))),
    )
    out += _corrected(
        _pair(
            "th-6", "ab", 0,
            lambda s, n: star(s.x(n)) + bar(s.x(n)),
            lambda s, n: 2 * col(h(s.a(n), -s.a(n + 3)), h(0, -s.a(n + 2))),
        )
    )
    out += _pair(
        "th-6", "cd", 0,
        lambda s, n: star(s.x(n)) - bar(s.x(n)),
        lambda s, n: 2 * col(h(0), h(s.a(n + 1))),
    )
    return out


def _family_th6_1() -> list:
    def rhs_ab(s, n):
        return col(
            h(s.a(n) - s.a(n + 2), -(s.a(n + 3) + s.a(n + 1))),
            h(s.a(n + 1) + s.a(n + 3), -(s.a(n + 2) + s.a(n))),
        )

    def rhs_cd(s, n):
        return col(
            h(s.a(n) + s.a(n + 2), -(s.a(n + 3) - s.a(n + 1))),
            h(s.a(n + 1) - s.a(n + 3), -(s.a(n + 2) - s.a(n))),
        )

    def plus(s, n):
        return star(s.x(n)) + tilde(s.x(n))

    def minus(s, n):
        return star(s.x(n)) - tilde(s.x(n))

    out = _pair("th-6-1", "ab", 0, plus, rhs_ab)
    # (c) is printed with a minus sign, (d) with a plus sign over the same right-hand side
    out.append(Identity("th-6-1(c)", 0, lambda e, n: minus(e.P, n), lambda e, n: rhs_cd(e.P, n)))
    out.append(Identity("th-6-1(d)", 0, lambda e, n: plus(e.R, n), lambda e, n: rhs_cd(e.R, n)))
    out.append(Identity("th-6-1(d)/as-difference", 0, lambda e, n: minus(e.R, n), lambda e, n: rhs_cd(e.R, n)))
    return out


def _family_th7() -> list:
    out = []

    def plus(s, n):
        return star(s.x(n)) + check(s.x(n))

    def minus(s, n):
        return star(s.x(n)) - check(s.x(n))

    out += _pair("th-7", "ab", 0, plus, lambda s, n: col(h(s.a(n + 3), s.a(n + 5)), h(s.a(n + 3), -s.a(n + 5))))
    out += _corrected(
        _pair(
            "th-7", "ab", 0, plus,
            lambda s, n: col(h(s.a(n + 3), s.a(n + 2) - s.a(n + 3)), h(s.a(n + 3), -s.a(n + 5))),
        )
    )
    out += _pair(
        "th-7", "cd", 0, minus,
        lambda s, n: col(
            h(s.a(n) - s.a(n + 1), -(s.a(n + 3) + s.a(n + 2))),
            h(s.a(n + 1) - s.a(n), -(s.a(n + 3) - s.a(n + 2))),
        ),
    )
    out += _corrected(
        _pair(
            "th-7", "cd", 0, minus,
            lambda s, n: col(
                h(s.a(n) - s.a(n + 1), -(s.a(n + 3) + s.a(n + 2))),
                h(s.a(n + 1) - s.a(n), s.a(n + 3) - s.a(n + 2)),
            ),
        )
    )
    return out


def _family_th8_1() -> list:
    def plus(s, n):
        return bar(s.x(n)) + tilde(s.x(n))

    out = []
    out += _pair(
        "th-8-1", "ab", 1, plus,
        lambda s, n: col(h(-s.a(n - 1), -(s.a(n + 3) + s.a(n + 1))), h(-s.a(n), -(s.a(n + 2) + s.a(n)))),
    )
    out += _corrected(
        _pair(
            "th-8-1", "ab", 1, plus,
            lambda s, n: col(h(-s.a(n - 1), -(s.a(n + 3) + s.a(n + 1))), h(s.a(n), -(s.a(n + 2) + s.a(n)))),
        )
    )
    out += _pair(
        "th-8-1", "cd", 1, plus,
        lambda s, n: col(h(s.a(n) + s.a(n + 2), -s.a(n)), h(-s.a(n + 1) - s.a(n + 3), -s.a(n - 1))),
    )
    return out


def _family_th8_2() -> list:
    def plus(s, n):
        return tilde(s.x(n)) + check(s.x(n))

    out = []
    out += _pair(
        "th-8-2", "ab", 0, plus,
        lambda s, n: col(
            h(s.a(n + 1) - s.a(n + 2), s.a(n + 2) - s.a(n + 1)),
            h(s.a(n + 3) + s.a(n), -s.a(n + 1)),
        ),
    )
    out += _corrected(
        _pair(
            "th-8-2", "ab", 0, plus,
            lambda s, n: col(
                h(s.a(n + 1) - s.a(n + 2), s.a(n + 2) - s.a(n + 1)),
                h(s.a(n + 3) + s.a(n), -(s.a(n) + s.a(n + 3))),
            ),
        )
    )
    out += _pair(
        "th-8-2", "cd", 0, plus,
        lambda s, n: col(h(-s.a(n + 4), -s.a(n + 4)), h(s.a(n + 1), -s.a(n + 1))),
    )
    return out


def _family_th8() -> list:
    def minus(s, n):
        return bar(s.x(n)) - check(s.x(n))

    def plus(s, n):
        return bar(s.x(n)) + check(s.x(n))

    out = []
    out += _pair(
        "th-8", "ab", 0, minus,
        lambda s, n: col(h(-s.a(n + 4), -s.a(n + 4)), h(s.a(n + 1), -s.a(n + 1))),
    )
    out += _corrected(
        _pair(
            "th-8", "ab", 0, minus,
            lambda s, n: col(h(s.a(n) - s.a(n + 1), -s.a(n + 5)), h(-s.a(n + 3), s.a(n + 3) - s.a(n + 2))),
        )
    )
    out += _pair(
        "th-8", "cd", 0, plus,
        lambda s, n: col(
            h(-s.a(n + 2) + s.a(n + 1), s.a(n + 2) - s.a(n + 1)),
            h(s.a(n + 3) + s.a(n), -(s.a(n) + s.a(n + 3))),
        ),
    )
    out += _corrected(
        _pair(
            "th-8", "cd", 0, plus,
            lambda s, n: col(h(s.a(n + 3), s.a(n + 2) - s.a(n + 3)), h(s.a(n) - s.a(n + 1), -s.a(n + 5))),
        )
    )
    return out


def _generating_functions() -> list:
    printed = {
        # coefficients of x^0, x^1, x^2 in each numerator slot: (c1.re, c1.hy, c2.re, c2.hy)
        "psi": [(1, 2, -1, 1), (1, 2, -1, 2), (0, 1, -1, 1)],
        "phi": [(3, 3, 0, 2), (0, 2, -2, 3), (-1, 2, -3, 0)],
    }
    return [
        Identity(
            "gf(psi)", 0,
            lambda e, k: generating_function(e.P.spec).numerator[k],
            lambda e, k: spinor(*printed["psi"][k]),
            var="k", hi=2,
        ),
        Identity(
            "gf(phi)", 0,
            lambda e, k: generating_function(e.R.spec).numerator[k],
            lambda e, k: spinor(*printed["phi"][k]),
            var="k", hi=2,
        ),
    ]


def _matrix_and_determinant() -> list:
    def matrix(s, n):
        return qmatrix_power(s.spec, n).apply(seed_spinors(s.spec))[0]

    out = []
    out += _pair("matrix", "ab", 0, lambda s, n: s.x(n), matrix)
    out += _pair("det-banded", "ab", 0, lambda s, n: s.x(n), lambda s, n: term_det_banded(s.spec, n))
    return out


def _direct_sum(s: SeqContext, indices) -> Spinor:
    total = spinor(0, 0, 0, 0)
    for k in indices:
        total = total + s.x(k)
    return total


def _bracket(s: SeqContext, k: int) -> Spinor:
    """The printed expansion ``[a_k + a_{k+3} j; -a_{k+1} + a_{k+2} j]``."""
    return col(h(s.a(k), s.a(k + 3)), h(-s.a(k + 1), s.a(k + 2)))


def _summation() -> list:
    const = {
        ("a", "P"): spinor(2, 5, -3, 4), ("a", "R"): spinor(2, 7, -5, 5),
        ("b", "P"): spinor(1, 2, -1, 2), ("b", "R"): spinor(0, 2, -2, 3),
        ("c", "P"): spinor(1, 3, -2, 2), ("c", "R"): spinor(2, 5, -3, 2),
    }
    idx = {
        "a": lambda m: range(0, m + 1),
        "b": lambda m: range(0, 2 * m + 1, 2),
        "c": lambda m: range(1, 2 * m + 2, 2),
    }
    closed = {
        "a": (lambda m: m + 5, 4),
        "b": (lambda m: 2 * m + 3, 1),
        "c": (lambda m: 2 * m + 4, 2),
    }
    # index of the expanded bracket exactly as printed; the psi line of (c) shows 2m+2
    expanded = {
        ("a", "P"): lambda m: m + 5, ("a", "R"): lambda m: m + 5,
        ("b", "P"): lambda m: 2 * m + 3, ("b", "R"): lambda m: 2 * m + 3,
        ("c", "P"): lambda m: 2 * m + 2, ("c", "R"): lambda m: 2 * m + 4,
    }
    out = []
    for item in "abc":
        for letter, name in (("P", "psi"), ("R", "phi")):
            def ctx(e, letter=letter):
                return getattr(e, letter)

            def lhs(e, m, item=item, ctx=ctx):
                return _direct_sum(ctx(e), idx[item](m))

            def rhs_closed(e, m, item=item, ctx=ctx):
                top, low = closed[item]
                return ctx(e).x(top(m)) - ctx(e).x(low)

            def rhs_expanded(e, m, item=item, letter=letter, ctx=ctx):
                return _bracket(ctx(e), expanded[item, letter](m)) - const[item, letter]

            out.append(Identity(f"sum({item})-{name}", 0, lhs, rhs_closed, var="m"))
            out.append(Identity(f"sum({item})-{name}/expanded", 0, lhs, rhs_expanded, var="m"))
    out.append(
        Identity(
            "sum(c)-psi/expanded/corrected", 0,
            lambda e, m: _direct_sum(e.P, idx["c"](m)),
            lambda e, m: _bracket(e.P, 2 * m + 4) - const["c", "P"],
            var="m",
        )
    )
    return out


def _relations() -> list:
    return [
        Identity("relation(a)", 5, lambda e, n: e.R.x(n), lambda e, n: 3 * e.P.x(n - 5) + 2 * e.P.x(n - 4)),
        Identity(
            "relation(b)", 3,
            lambda e, n: e.P.x(n - 1),
            lambda e, n: (e.R.x(n - 3) + 8 * e.R.x(n - 2) + 10 * e.R.x(n - 1)) / 23,
        ),
    ]


def _corrected(identities: list) -> list:
    return [Identity(i.id + "/corrected", i.lo, i.lhs, i.rhs, i.var, i.hi) for i in identities]


def build_corpus() -> list:
    corpus = (
        _initial_values()
        + _definitions()
        + _family_th2()
        + _family_th3_4()
        + _family_th5_1()
        + _family_th5()
        + _family_th6()
        + _family_th6_1()
        + _family_th7()
        + _family_th8_1()
        + _family_th8_2()
        + _family_th8()
        + _generating_functions()
        + _matrix_and_determinant()
        + _summation()
        + _relations()
    )
    ids = [i.id for i in corpus]
    duplicates = {x for x in ids if ids.count(x) > 1}
    if duplicates:
        raise RuntimeError(f"duplicate identity ids: {sorted(duplicates)}")
    return corpus


def is_derived(identity_id: str) -> bool:
    return "/corrected" in identity_id or "/as-difference" in identity_id


# --- report -----------------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    n: int
    lhs: Spinor
    rhs: Spinor

    def to_json(self) -> dict:
        return {"n": self.n, "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> Counterexample:
        return cls(data["n"], Spinor.from_json(data["lhs"]), Spinor.from_json(data["rhs"]))


@dataclass(frozen=True)
class AuditEntry:
    id: str
    lo: int
    hi: int
    verdict: str
    counterexample: Counterexample | None = None

    @property
    def exact(self) -> bool:
        return self.verdict == EXACT

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "range": [self.lo, self.hi],
            "verdict": self.verdict,
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
        }

    @classmethod
    def from_json(cls, data: dict) -> AuditEntry:
        ce = data.get("counterexample")
        lo, hi = data["range"]
        return cls(data["id"], lo, hi, data["verdict"], Counterexample.from_json(ce) if ce else None)


@dataclass
class AuditReport:
    entries: list = field(default_factory=list)

    def __getitem__(self, identity_id: str) -> AuditEntry:
        for entry in self.entries:
            if entry.id == identity_id:
                return entry
        raise KeyError(identity_id)

    def ids(self) -> list:
        return [e.id for e in self.entries]

    def mismatches(self, printed_only: bool = False) -> list:
        return [e for e in self.entries if not e.exact and not (printed_only and is_derived(e.id))]

    def to_json(self) -> dict:
        return {"identities": [e.to_json() for e in self.entries]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: dict) -> AuditReport:
        return cls([AuditEntry.from_json(e) for e in data["identities"]])

    def summary_lines(self) -> list:
        lines = []
        for e in self.entries:
            tag = "EXACT   " if e.exact else "MISMATCH"
            line = f"{tag} {e.id:<34} [{e.lo}, {e.hi}]"
            if e.counterexample:
                ce = e.counterexample
                line += f"  first n={ce.n}: {ce.lhs} != {ce.rhs}"
            lines.append(line)
        return lines


def identity_audit(n_max: int, padovan: SequenceSpec = PADOVAN, perrin: SequenceSpec = PERRIN) -> AuditReport:
    """Evaluate every identity for each valid index up to ``n_max``."""
    if n_max < 5:
        raise IndexOutOfRange(f"n_max must be >= 5, got {n_max}")
    top = 2 * n_max + 12
    env = Env(SeqContext(padovan, top), SeqContext(perrin, top))
    report = AuditReport()
    for identity in build_corpus():
        lo = identity.lo
        hi = n_max if identity.hi is None else identity.hi
        counterexample = None
        for n in range(lo, hi + 1):
            lhs = identity.lhs(env, n)
            rhs = identity.rhs(env, n)
            if lhs != rhs:
                counterexample = Counterexample(n, lhs, rhs)
                break
        verdict = EXACT if counterexample is None else MISMATCH
        report.entries.append(AuditEntry(identity.id, lo, hi, verdict, counterexample))
    return report
