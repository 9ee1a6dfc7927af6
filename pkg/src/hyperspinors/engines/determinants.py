"""Determinant constructions for the n-th spinor.

Both matrices are lower Hessenberg (nothing above the first superdiagonal),
so they are stored as sparse rows ``{column: entry}`` and evaluated by
expanding along the last row:

    D_k = sum_r h[k][r] * prod_{i=r}^{k-1} (-h[i][i+1]) * D_{r-1},   D_{-1} = 1

which needs only ring operations and costs O(size * bandwidth**2) for the
banded matrices used here.

``banded`` is the matrix with the seed spinors down the first column,
``-1`` on the superdiagonal and ``t, s`` under the diagonal.  Its only
non-scalar column is the first one, so it is expanded along that column with
integer cofactors.

``det_cereceda`` carries ``1/x0`` on its second row and is evaluated separately
for each spinor component over rational hyperbolic numbers; a null seed
component has no inverse and the construction is refused.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import UnsupportedInstance
from ..hypernum import HyperNumber
from ..sequences import SequenceSpec, check_index
from ..spinors import Spinor, seed_spinors


def hessenberg_det(rows: list, one=1):
    """Determinant of a lower Hessenberg matrix given as sparse rows."""
    size = len(rows)
    zero = one - one
    dets = [one]  # dets[r] holds D_{r-1}
    for k in range(size):
        acc = zero
        for r, h in rows[k].items():
            if r > k + 1 or r >= size:
                raise ValueError(f"entry ({k}, {r}) is outside a lower Hessenberg {size}x{size} matrix")
            if r == k + 1:
                continue
            coef = h
            for i in range(r, k):
                coef = coef * -rows[i].get(i + 1, 0)
                if coef == 0:
                    break
            if coef != 0:
                acc = acc + coef * dets[r]
        dets.append(acc)
    return dets[-1]


def to_dense(rows: list, zero=0) -> list:
    size = len(rows)
    return [[row.get(c, zero) for c in range(size)] for row in rows]


def _clip(row: dict, size: int) -> dict:
    return {c: v for c, v in row.items() if c < size and not (isinstance(v, int) and v == 0)}


# --- banded construction -----------------------------------------------------


def banded_rows(spec: SequenceSpec, n: int, first_column=None) -> list:
    """The (n+1)x(n+1) banded matrix; ``first_column`` defaults to the seed spinors."""
    check_index(n)
    size = n + 1
    seeds = seed_spinors(spec) if first_column is None else first_column
    rows = []
    for i in range(size):
        row = {0: seeds[i]} if i < 3 else {i - 2: spec.t, i - 1: spec.s}
        row[i + 1] = -1
        rows.append(_clip(row, size))
    return rows


def first_column_cofactors(spec: SequenceSpec, n: int) -> tuple:
    """Cofactors of the three seed positions (0 where the row does not exist)."""
    rows = banded_rows(spec, n, first_column=(1, 1, 1))
    cofactors = []
    for i in range(3):
        if i >= len(rows):
            cofactors.append(0)
            continue
        minor = [{c - 1: v for c, v in row.items() if c != 0} for r, row in enumerate(rows) if r != i]
        cofactors.append((-1) ** i * hessenberg_det(minor))
    return tuple(cofactors)


def term_det_banded(spec: SequenceSpec, n: int) -> Spinor:
    seeds = seed_spinors(spec)
    total = None
    for seed, cof in zip(seeds, first_column_cofactors(spec, n)):
        if cof == 0:
            continue
        term = cof * seed
        total = term if total is None else total + term
    return total if total is not None else 0 * seeds[0]


# --- inverse-seed construction ---------------------------------------------------


def cereceda_rows(spec: SequenceSpec, n: int, x: tuple) -> list:
    """Rows for one spinor component; ``x`` are that component of the three seeds."""
    check_index(n)
    size = n + 1
    x0, x1, x2 = x
    inv_x0 = x0.inverse() if isinstance(x0, HyperNumber) else Fraction(1, x0)
    s, t = spec.s, spec.t
    rows = []
    for k in range(size):
        if k == 0:
            row = {0: x0, 1: 1}
        elif k == 1:
            row = {0: -x1, 2: inv_x0}
        elif k == 2:
            row = {1: -x2, 3: 1}
        elif k == 3:
            row = {1: t * x0, 2: -s, 4: 1}
        else:
            row = {k - 2: t, k - 1: -s, k + 1: 1}
        rows.append(_clip(row, size))
    return rows


def _as_rational(h: HyperNumber) -> HyperNumber:
    return HyperNumber(Fraction(h.re), Fraction(h.hy))


def _tidy(h: HyperNumber) -> HyperNumber:
    def tidy(v):
        if isinstance(v, Fraction) and v.denominator == 1:
            return v.numerator
        return v

    return HyperNumber(tidy(h.re), tidy(h.hy))


def term_det_cereceda(spec: SequenceSpec, n: int) -> Spinor:
    check_index(n)
    seeds = seed_spinors(spec)
    for name, comp in zip(("first", "second"), seeds[0].components()):
        if comp.is_null():
            raise UnsupportedInstance(
                f"{spec.label()}: {name} component {comp} of the initial spinor is a zero divisor, so 1/x0 does not exist"
            )
    one = HyperNumber(Fraction(1), Fraction(0))
    out = []
    for c in range(2):
        x = tuple(_as_rational(seed.components()[c]) for seed in seeds)
        value = hessenberg_det(cereceda_rows(spec, n, x), one=one)
        out.append(_tidy(value))
    return Spinor(*out)
