import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import quaternions, small_ints
from hyperspinors.errors import IndexOutOfRange
from hyperspinors.hypernum import HYPER_J, HyperNumber
from hyperspinors.sequences import PADOVAN, PERRIN, SequenceSpec, char_roots, seq_terms
from hyperspinors.spinors import (
    BINET_EXACT_BOUND,
    C_MATRIX,
    Conj,
    Relation,
    Spinor,
    Stride,
    apply_matrix,
    bar,
    binet_constants,
    check,
    direct_partial_sum,
    from_spinor,
    quaternion_norm_path,
    round_spinor,
    spinor,
    spinor_binet,
    spinor_conjugate,
    spinor_iter,
    spinor_norm,
    spinor_partial_sum,
    spinor_range,
    spinor_relation,
    spinor_term,
    star,
    tilde,
    to_spinor,
)
from hyperspinors.splitquat import SplitQuaternion, quat_norm, seq_quaternion_materialize

PSI = {0: spinor(1, 2, -1, 1), 1: spinor(1, 2, -1, 2), 2: spinor(1, 3, -2, 2), 4: spinor(2, 5, -3, 4)}
PHI = {0: spinor(3, 3, 0, 2), 1: spinor(0, 2, -2, 3), 2: spinor(2, 5, -3, 2), 4: spinor(2, 7, -5, 5)}

spinors = st.builds(spinor, small_ints, small_ints, small_ints, small_ints)


def test_map_examples():
    assert to_spinor(SplitQuaternion(1, 1, 1, 2)) == PSI[0]
    assert to_spinor(SplitQuaternion(3, 0, 2, 3)) == PHI[0]
    assert to_spinor(SplitQuaternion(0, 0, 0, 0)) == spinor(0, 0, 0, 0)


@given(quaternions, quaternions, small_ints)
def test_map_is_linear_and_injective(q, p, w):
    assert to_spinor(q + p) == to_spinor(q) + to_spinor(p)
    assert to_spinor(w * q) == w * to_spinor(q)
    assert from_spinor(to_spinor(q)) == q
    if q != p:
        assert to_spinor(q) != to_spinor(p)


@pytest.mark.parametrize("n", [0, 1, 2, 4])
def test_printed_initial_spinors(n):
    assert spinor_term(PADOVAN, n) == PSI[n]
    assert spinor_term(PERRIN, n) == PHI[n]


def test_sequence_spinor_layout():
    a = seq_terms(PADOVAN, 0, 20)
    for n in range(16):
        x = spinor_iter(PADOVAN, n)
        assert x.c1 == HyperNumber(a[n], a[n + 3])
        assert x.c2 == HyperNumber(-a[n + 1], a[n + 2])


def test_c_squared_is_minus_identity():
    x = spinor(1, 2, 3, 4)
    assert apply_matrix(C_MATRIX, apply_matrix(C_MATRIX, x)) == -x


def test_conjugation_examples():
    psi0 = PSI[0]
    assert bar(psi0) == spinor(1, -2, -1, -1)
    assert tilde(psi0) == spinor(-1, -1, 2, -1)
    assert check(psi0) == spinor(1, 1, 1, -2)
    assert star(psi0) == to_spinor(SplitQuaternion(1, -1, -1, -2))
    assert spinor_conjugate(psi0, "tilde") == tilde(psi0)
    assert spinor_conjugate(psi0, Conj.CHECK) == check(psi0)


@given(spinors)
def test_conjugations_are_involutions_where_expected(x):
    assert star(star(x)) == x
    assert bar(bar(x)) == x
    # Bar(j y) = -j Bar(y) cancels the sign of C^2 = -1 for Tilde but not for Check
    assert tilde(tilde(x)) == x
    assert check(check(x)) == -x


@given(spinors)
def test_th2_relations_hold_structurally(x):
    assert bar(x) == apply_matrix(C_MATRIX, check(x))
    assert check(x) == -(HYPER_J * tilde(x))
    assert bar(x) == -(HYPER_J * apply_matrix(C_MATRIX, tilde(x)))


def test_th3_th4_th5_th51_over_range():
    for spec in (PADOVAN, PERRIN):
        a = seq_terms(spec, 0, 215)
        xs = spinor_range(spec, 0, 201)
        for n, x in enumerate(xs):
            assert x + star(x) == spinor(2 * a[n], 0, 0, 0)
            assert x - star(x) == 2 * spinor(0, a[n + 3], -a[n + 1], a[n + 2])
            assert x + bar(x) == 2 * spinor(a[n], 0, -a[n + 1], 0)
            assert x - bar(x) == HYPER_J * (2 * spinor(a[n + 3], 0, a[n + 2], 0))
            assert (x + check(x)).c1 == HyperNumber(a[n + 3], a[n + 5])
            if n >= 1:
                assert x + tilde(x) == spinor(-a[n - 1], a[n], a[n], a[n - 1])


def test_recurrence_general_parameters():
    for spec in (PADOVAN, PERRIN, SequenceSpec.perrin(2, -3), SequenceSpec.custom((2, 1, 3), Fraction(1, 2), 5)):
        xs = spinor_range(spec, 0, 504)
        assert all(xs[n + 3] == spec.s * xs[n + 1] + spec.t * xs[n] for n in range(501))
        assert spinor_iter(spec, 123) == xs[123]


def test_norm_examples_and_dual_path():
    assert spinor_norm(PADOVAN, 0) == -3
    assert spinor_norm(PERRIN, 0) == -4
    for spec in (PADOVAN, PERRIN):
        for n in range(51):
            assert spinor_norm(spec, n) == quat_norm(seq_quaternion_materialize(spec, n))
            assert quaternion_norm_path(spec, n) == spinor_norm(spec, n)


def test_binet_examples():
    assert round_spinor(spinor_binet(PERRIN, 0), 0) == PHI[0]
    assert round_spinor(spinor_binet(PADOVAN, 5), 5) == spinor(3, 7, -4, 5)
    alpha = char_roots().alpha
    first = binet_constants()[0].c1
    assert abs(first.re - 1) < 1e-12
    assert abs(first.hy - (alpha + 1)) < 1e-12


def test_binet_rounds_exactly_up_to_bound():
    for spec in (PADOVAN, PERRIN):
        xs = spinor_range(spec, 0, BINET_EXACT_BOUND + 1)
        for n, x in enumerate(xs):
            assert round_spinor(spinor_binet(spec, n), n) == x


def test_binet_imaginary_parts_vanish():
    for n in range(40):
        for v in spinor_binet(PADOVAN, n).coefficients():
            assert abs(v.imag) < 1e-9 * max(1.0, abs(v.real))


def test_partial_sum_examples():
    assert spinor_partial_sum(PADOVAN, 0, Stride.ALL) == PSI[0]
    assert spinor_partial_sum(PERRIN, 0, Stride.EVEN) == PHI[0]
    odd = spinor_partial_sum(PADOVAN, 3, Stride.ODD)
    xs = spinor_range(PADOVAN, 0, 11)
    assert odd == xs[10] - xs[2] == xs[1] + xs[3] + xs[5] + xs[7]


@given(st.integers(0, 120), st.sampled_from(list(Stride)), st.sampled_from([PADOVAN, PERRIN]))
def test_partial_sums_match_direct_summation(m, stride, spec):
    assert spinor_partial_sum(spec, m, stride) == direct_partial_sum(spec, m, stride)


@given(st.integers(0, 40), st.tuples(small_ints, small_ints, small_ints))
def test_partial_sums_hold_for_any_seeds(m, seeds):
    spec = SequenceSpec.custom(seeds)
    for stride in Stride:
        assert spinor_partial_sum(spec, m, stride) == direct_partial_sum(spec, m, stride)


def test_partial_sum_needs_classical_recurrence():
    with pytest.raises(ValueError):
        spinor_partial_sum(SequenceSpec.padovan(2, 1), 3)


def test_relation_examples():
    psi = spinor_range(PADOVAN, 0, 10)
    phi = spinor_range(PERRIN, 0, 10)
    assert spinor_relation(Relation.PERRIN_FROM_PADOVAN, 5) == 3 * psi[0] + 2 * psi[1] == phi[5]
    assert phi[5] == spinor(5, 10, -5, 7)
    assert phi[3] == spinor(3, 5, -2, 5)
    assert spinor_relation(Relation.PADOVAN_FROM_PERRIN, 4) == psi[3]
    with pytest.raises(IndexOutOfRange):
        spinor_relation(Relation.PERRIN_FROM_PADOVAN, 4)
    with pytest.raises(IndexOutOfRange):
        spinor_relation(Relation.PADOVAN_FROM_PERRIN, 2)


def test_relations_over_range():
    psi = spinor_range(PADOVAN, 0, 501)
    phi = spinor_range(PERRIN, 0, 501)
    for n in range(5, 501):
        assert spinor_relation("perrin_from_padovan", n) == phi[n]
    for n in range(3, 501):
        assert spinor_relation("padovan_from_perrin", n) == psi[n - 1]


def test_rendering_and_json():
    assert str(PSI[2]) == "[1+3j; -2+2j]"
    assert str(PHI[0]) == "[3+3j; 0+2j]"
    data = PHI[0].to_json()
    assert json.dumps(data, separators=(",", ":")) == '{"c1":{"re":"3","hy":"3"},"c2":{"re":"0","hy":"2"}}'
    assert Spinor.from_json(data) == PHI[0]


@given(spinors)
def test_json_round_trip(x):
    assert Spinor.from_json(json.loads(json.dumps(x.to_json()))) == x


def test_large_index_renders():
    x = spinor_iter(PADOVAN, 60000)
    assert len(str(x)) > 4 * 7000
    assert Spinor.from_json(x.to_json()) == x
