import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperspinors.errors import IndexOutOfRange, PrecisionExceeded
from hyperspinors.sequences import (
    PADOVAN,
    PERRIN,
    Kind,
    QMatrix,
    SequenceSpec,
    binet_weights,
    char_roots,
    padovan_from_perrin,
    perrin_from_padovan,
    qmatrix_power,
    round_real,
    seq_term_binet,
    seq_term_iter,
    seq_terms,
)

# OEIS A000931 (offset shifted so that P_0 = P_1 = P_2 = 1) and A001608.
PADOVAN_HEAD = [1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21, 28, 37, 49, 65, 86, 114, 151]
PERRIN_HEAD = [3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17, 22, 29, 39, 51, 68, 90, 119, 158, 209]


def test_known_prefixes():
    assert seq_terms(PADOVAN, 0, 20) == PADOVAN_HEAD
    assert seq_terms(PERRIN, 0, 20) == PERRIN_HEAD


@pytest.mark.parametrize("spec, n, value", [(PADOVAN, 7, 5), (PERRIN, 7, 7), (PADOVAN, 0, 1)])
def test_iter_examples(spec, n, value):
    assert seq_term_iter(spec, n) == value


def test_negative_index_rejected():
    with pytest.raises(IndexOutOfRange):
        seq_term_iter(PADOVAN, -1)


def test_spec_validation():
    with pytest.raises(ValueError):
        SequenceSpec(Kind.CUSTOM)
    with pytest.raises(TypeError):
        SequenceSpec.padovan(s=0.5)
    spec = SequenceSpec.custom((1, Fraction(1, 2), 3), s=Fraction(4, 2))
    assert spec.s == 2 and type(spec.s) is int
    assert not spec.named and not spec.classical
    assert SequenceSpec.padovan(2, 1).label() == "padovan(s=2,t=1)"


@given(
    st.integers(-4, 4),
    st.integers(-4, 4),
    st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)),
)
def test_recurrence_holds(s, t, seeds):
    spec = SequenceSpec.custom(seeds, s, t)
    a = seq_terms(spec, 0, 60)
    assert all(a[n + 3] == s * a[n + 1] + t * a[n] for n in range(57))
    assert seq_term_iter(spec, 37) == a[37]


def test_recurrence_first_thousand():
    for spec in (PADOVAN, PERRIN, SequenceSpec.padovan(3, -2)):
        a = seq_terms(spec, 0, 1004)
        assert all(a[n + 3] == spec.s * a[n + 1] + spec.t * a[n] for n in range(1001))


def test_root_invariants():
    r = char_roots()
    a, b, g = r.alpha, r.beta, r.gamma
    assert abs(a - 1.3247) < 5e-5
    assert abs(a**3 - a - 1) < 1e-12
    assert abs(a + b + g) < 1e-12
    assert abs(a * b + a * g + b * g + 1) < 1e-12
    assert abs(a * b * g - 1) < 1e-12
    assert abs(b - g.conjugate()) < 1e-12
    assert abs(r.sigma2 - r.sigma3.conjugate()) < 1e-12
    assert abs(r.sigma1 + r.sigma2 + r.sigma3 - 1) < 1e-12


def test_ratio_converges_to_alpha():
    alpha = char_roots().alpha
    for spec in (PADOVAN, PERRIN):
        a = seq_terms(spec, 0, 200)
        assert all(abs(a[n + 1] / a[n] - alpha) < 1e-9 for n in range(60, 199))


@pytest.mark.parametrize("spec, n, value", [(PADOVAN, 10, 12), (PERRIN, 10, 17)])
def test_binet_examples(spec, n, value):
    approx, rounded = seq_term_binet(spec, n)
    assert rounded == value
    assert math.isclose(approx, value, rel_tol=1e-12)


def test_binet_perrin_zero_is_three():
    approx, rounded = seq_term_binet(PERRIN, 0)
    assert rounded == 3 and abs(approx - 3.0) < 1e-12


def test_binet_matches_iteration_up_to_bound():
    for spec in (PADOVAN, PERRIN):
        a = seq_terms(spec, 0, 100)
        assert [seq_term_binet(spec, n)[1] for n in range(100)] == a


def test_binet_refuses_beyond_double_precision():
    with pytest.raises(PrecisionExceeded):
        seq_term_binet(PADOVAN, 400)


def test_round_real_rejects_imaginary_residual():
    with pytest.raises(PrecisionExceeded):
        round_real(complex(5.0, 0.25), 5)


def test_binet_only_for_named_kinds():
    with pytest.raises(ValueError):
        binet_weights(SequenceSpec.padovan(2, 1))
    with pytest.raises(ValueError):
        binet_weights(SequenceSpec.custom((1, 2, 3)))


def test_qmatrix_small_powers():
    assert qmatrix_power(PADOVAN, 0) == QMatrix.identity()
    assert qmatrix_power(PADOVAN, 1) == QMatrix(((0, 1, 0), (0, 0, 1), (1, 1, 0)))
    assert qmatrix_power(SequenceSpec.perrin(2, 5), 1) == QMatrix(((0, 1, 0), (0, 0, 1), (5, 2, 0)))
    assert qmatrix_power(PADOVAN, 5).apply((1, 1, 1)) == (3, 4, 5)


@given(st.integers(0, 300), st.integers(0, 300), st.integers(-3, 3), st.integers(-3, 3))
def test_qmatrix_semigroup(m, n, s, t):
    spec = SequenceSpec.padovan(s, t)
    assert qmatrix_power(spec, m + n) == qmatrix_power(spec, m) @ qmatrix_power(spec, n)


@given(st.integers(0, 200))
def test_qmatrix_shifts_window(n):
    a = seq_terms(PERRIN, 0, n + 3)
    assert qmatrix_power(PERRIN, n).apply(tuple(a[:3])) == tuple(a[n : n + 3])


@pytest.mark.parametrize("n, value", [(5, 5), (7, 7)])
def test_perrin_from_padovan_examples(n, value):
    assert perrin_from_padovan(n) == value


@pytest.mark.parametrize("n, value", [(4, 2), (3, 1), (10, 9)])
def test_padovan_from_perrin_examples(n, value):
    assert padovan_from_perrin(n) == value


def test_relations_over_range():
    p = seq_terms(PADOVAN, 0, 501)
    r = seq_terms(PERRIN, 0, 501)
    assert all(perrin_from_padovan(n) == r[n] for n in range(5, 501))
    assert all(padovan_from_perrin(n) == p[n - 1] for n in range(3, 501))


def test_relation_preconditions():
    with pytest.raises(IndexOutOfRange):
        perrin_from_padovan(4)
    with pytest.raises(IndexOutOfRange):
        padovan_from_perrin(2)
