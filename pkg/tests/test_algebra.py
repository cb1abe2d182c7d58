from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dyckchi.algebra import LaurentQT, ONE, ZERO, conj_qt, evaluate, q, scale_monomial, t, t_slice


def laurent(max_terms=4):
    term = st.tuples(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-5, 5))
    return st.lists(term, max_size=max_terms).map(LaurentQT)


def test_difference_of_squares():
    assert (q + t) * (q - t) == q * q - t * t


def test_scale_monomial():
    assert scale_monomial(ONE + q, -1, 0) == LaurentQT({(-1, 0): 1, (0, 0): 1})


def test_product_expansion():
    lhs = (q * t - 1) * (1 - t)
    assert lhs == q * t - q * t * t - 1 + t


def test_zero_coefficients_dropped():
    assert (q - q).terms == {}
    assert q - q == ZERO
    assert LaurentQT({(1, 1): 0}) == ZERO


@pytest.mark.parametrize("k, expected", [(0, q), (1, q * q), (2, ZERO)])
def test_t_slice(k, expected):
    assert t_slice(q + q * q * t, k) == expected


def test_t_slice_of_zero():
    assert t_slice(ZERO, 3) == ZERO


def test_evaluate():
    assert evaluate(LaurentQT({(-1, 0): 1, (0, 1): 1}), 2, 3) == Fraction(7, 2)
    with pytest.raises(ZeroDivisionError):
        evaluate(LaurentQT({(-1, 0): 1}), 0, 1)


@given(laurent())
def test_evaluate_at_one_sums_coefficients(a):
    assert evaluate(a, 1, 1) == sum(a.terms.values())


def test_conj():
    assert conj_qt(q * q * t) == LaurentQT({(-2, -1): 1})
    assert conj_qt(LaurentQT.const(7)) == LaurentQT.const(7)


@given(laurent())
def test_conj_involution(a):
    assert conj_qt(conj_qt(a)) == a


@given(laurent(), laurent(), laurent())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == ZERO


@given(laurent(6))
def test_t_slices_reconstruct(a):
    total = ZERO
    for k in range(-3, 4):
        total = total + t_slice(a, k).scale_monomial(0, k)
    assert total == a


def test_json_roundtrip_and_order():
    a = LaurentQT({(2, 0): 1, (-1, 3): -2, (0, 0): 5})
    data = a.to_json()
    assert data == {"terms": [{"q": -1, "t": 3, "c": -2}, {"q": 0, "t": 0, "c": 5}, {"q": 2, "t": 0, "c": 1}]}
    assert LaurentQT.from_json(data) == a


def test_big_coefficients_do_not_overflow():
    big = LaurentQT.const(2**70)
    assert (big * big).terms == {(0, 0): 2**140}
