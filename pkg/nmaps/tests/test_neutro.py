"""Tests for nmaps.neutro.py"""
from __future__ import division, print_function, absolute_import
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st
import numpy as np
import pytest

from nmaps.errors import ValidationError
from nmaps.neutro import (DEFAULT_POLICY, INDET, MINUS_ONE, ONE, ZERO,
                          NeutroValue, ThresholdMode, ThresholdPolicy,
                          as_value, format_value, nv_add, nv_mul,
                          parse_value, threshold_arrays, threshold_policy,
                          threshold_scalar)
from nmaps.tests.utils import policies

values = st.builds(NeutroValue, st.integers(min_value=-5, max_value=5),
                   st.integers(min_value=-5, max_value=5))


def test_NeutroValue():
    v = NeutroValue(2, 1)
    assert v.real == 2 and v.indet == 1, "Fields not stored."
    assert v == NeutroValue(2, 1), "Equal values compare unequal."
    assert v != NeutroValue(2, 0), "Different values compare equal."
    assert not v.is_zero and v.is_indeterminate
    assert ZERO.is_zero and not ONE.is_indeterminate

    # Fractions with denominator one become ints.
    assert isinstance(NeutroValue(Fraction(4, 2), 0).real, int)
    assert NeutroValue(Fraction(1, 4), 0).is_fractional

    with pytest.raises(TypeError):
        NeutroValue(1.5, 0)
    with pytest.raises(TypeError):
        NeutroValue(True, 0)


def test_nv_mul():
    assert nv_mul(INDET, INDET) == INDET, "I * I must be I."
    assert nv_mul(NeutroValue(1, 1), MINUS_ONE) == NeutroValue(-1, -1)
    # (2 + 3I)(1 + I) = 2 + (2 + 3 + 3)I
    assert nv_mul(NeutroValue(2, 3), NeutroValue(1, 1)) == NeutroValue(2, 8)
    assert NeutroValue(1, 1) * -1 == NeutroValue(-1, -1)
    assert 2 * INDET == NeutroValue(0, 2)


def test_nv_add():
    assert nv_add(NeutroValue(1, 2), NeutroValue(-1, 3)) == NeutroValue(0, 5)
    assert ONE + INDET == NeutroValue(1, 1)
    assert ONE - INDET == NeutroValue(1, -1)
    assert -NeutroValue(2, -1) == NeutroValue(-2, 1)


@given(values, values, values)
def test_arithmetic_laws(x, y, z):
    assert nv_add(x, y) == nv_add(y, x)
    assert nv_mul(x, y) == nv_mul(y, x)
    assert nv_mul(x, nv_mul(y, z)) == nv_mul(nv_mul(x, y), z)
    assert nv_mul(x, nv_add(y, z)) == nv_add(nv_mul(x, y), nv_mul(x, z))
    assert nv_mul(x, ONE) == x
    assert nv_add(x, ZERO) == x


def test_as_value():
    assert as_value(3) == NeutroValue(3, 0)
    assert as_value('2+I') == NeutroValue(2, 1)
    assert as_value(np.int64(-1)) == MINUS_ONE
    assert as_value(INDET) is INDET
    with pytest.raises(TypeError):
        as_value(0.5)


def test_parse_value():
    cases = {
        '0': ZERO, '1': ONE, '-1': MINUS_ONE, 'I': INDET,
        '-I': NeutroValue(0, -1), '2I': NeutroValue(0, 2),
        '2+I': NeutroValue(2, 1), '-1+I': NeutroValue(-1, 1),
        '1-2I': NeutroValue(1, -2), '2I+4': NeutroValue(4, 2),
        'I-1': NeutroValue(-1, 1), ' 3 ': NeutroValue(3, 0),
    }
    for token, expected in cases.items():
        assert parse_value(token) == expected, \
            "{!r} parsed incorrectly.".format(token)

    assert parse_value('.3') == NeutroValue(Fraction(3, 10), 0)
    assert parse_value('.2I') == NeutroValue(0, Fraction(1, 5))

    for token in ('', 'x', 'II', '1+', '+-1', '2 I', 'I2'):
        with pytest.raises(ValidationError):
            parse_value(token)


def test_format_value():
    cases = [(ZERO, '0'), (INDET, 'I'), (NeutroValue(0, -1), '-I'),
             (NeutroValue(0, 2), '2I'), (NeutroValue(2, 1), '2+I'),
             (NeutroValue(-1, 1), '-1+I'), (NeutroValue(1, -2), '1-2I'),
             (NeutroValue(Fraction(3, 10), 0), '0.3'),
             (NeutroValue(0, Fraction(1, 2)), '0.5I')]
    for value, text in cases:
        assert format_value(value) == text
        assert str(value) == text
        assert parse_value(text) == value


@given(values)
def test_format_value_is_inverse_of_parse_value(v):
    assert parse_value(format_value(v)) == v


def test_ThresholdPolicy():
    assert DEFAULT_POLICY == ThresholdPolicy(1, ThresholdMode.REAL_DOMINANT)
    assert threshold_policy(2, 'indet').mode is ThresholdMode.INDET_DOMINANT
    with pytest.raises(ValidationError):
        ThresholdPolicy(0)
    with pytest.raises(ValidationError):
        ThresholdPolicy(1, 'both')
    with pytest.raises(TypeError):
        ThresholdPolicy(1.5)


def test_threshold_scalar():
    indet = threshold_policy(1, 'indet')
    assert threshold_scalar(NeutroValue(2, 1)) == ONE
    assert threshold_scalar(NeutroValue(0, 2)) == INDET
    assert threshold_scalar(NeutroValue(-1, 1)) == INDET
    assert threshold_scalar(NeutroValue(-3, 0)) == ZERO
    assert threshold_scalar(NeutroValue(1, 2)) == ONE
    assert threshold_scalar(NeutroValue(1, 2), indet) == INDET
    # Ties go to the real part.
    assert threshold_scalar(NeutroValue(1, 1), indet) == ONE

    k2 = threshold_policy(2)
    assert threshold_scalar(ONE, k2) == ZERO
    assert threshold_scalar(NeutroValue(1, 1), k2) == INDET
    assert threshold_scalar(NeutroValue(2, 0), k2) == ONE


@given(values, policies)
def test_threshold_scalar_is_idempotent(v, policy):
    once = threshold_scalar(v, policy)
    assert once in (ZERO, ONE, INDET)
    assert threshold_scalar(once, ThresholdPolicy(1, policy.mode)) == once


@given(st.lists(values, min_size=1, max_size=8), policies)
def test_threshold_arrays_agrees_with_threshold_scalar(vs, policy):
    real = np.array([v.real for v in vs], dtype=np.int64)
    indet = np.array([v.indet for v in vs], dtype=np.int64)
    on, undecided = threshold_arrays(real, indet, policy)
    for v, r, d in zip(vs, on.tolist(), undecided.tolist()):
        assert NeutroValue(r, d) == threshold_scalar(v, policy)
