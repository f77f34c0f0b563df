from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcatalan.errors import IncompatibleRootError, MalformedValueError, PoleError
from qcatalan.qfield import ONE, ZERO, QRat, qr_eval_q1, qr_qpow, qr_subst_inverse_q

from helpers import qv


def test_canonical_form_cancels_common_factor():
    # (1 - q^2)/(1 - q) = 1 + q
    assert QRat([1, 0, -1], [1, -1]) == QRat([1, 1])
    assert str(QRat([1, 0, -1], [1, -1])) == "1+q"


def test_denominator_is_monic():
    x = QRat([2], [0, 2])
    assert x.denominator_coeffs() == [0, 1]
    assert str(x) == "1/q"


def test_string_forms():
    assert str(QRat([1, 1, 2, 1])) == "1+q+2q^2+q^3"
    assert str(QRat([1, 1], [0, 1])) == "(1+q)/q"
    assert str(QRat([0, 1], [-1, 1])) == "q/(-1+q)"
    assert str(qr_qpow(Fraction(3, 2))) == "q^(3/2)"
    assert str(QRat([0, Fraction(1, 2)])) == "(1/2)q"
    assert str(ZERO) == "0"


def test_zero_denominator_rejected():
    with pytest.raises(MalformedValueError):
        QRat([1], [0])


def test_root_order_is_minimal():
    half = qr_qpow(Fraction(1, 2))
    assert half.L == 2
    assert half * half == qr_qpow(1)
    assert (half * half).L == 1
    assert hash(half * half) == hash(qr_qpow(1))


def test_qpow_with_incompatible_root_order():
    with pytest.raises(IncompatibleRootError):
        qr_qpow(Fraction(1, 2), L=3)


def test_inverse_q_substitution():
    assert qr_subst_inverse_q(qv("1+q")) == qv("(1+q)/q")
    assert qr_subst_inverse_q(qv("q/(1-q)")) == qv("1/(q-1)")
    assert qr_subst_inverse_q(qr_qpow(Fraction(3, 2))) == qr_qpow(Fraction(-3, 2))


def test_eval_at_one():
    assert qr_eval_q1(QRat([1, 1, 2, 1])) == 5
    assert qr_eval_q1(qv("(1+q)/(2+q^2)")) == Fraction(2, 3)
    with pytest.raises(PoleError):
        qr_eval_q1(qv("1/(1-q)"))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_mixed_root_orders_combine():
    a = qr_qpow(Fraction(1, 2))
    b = qr_qpow(Fraction(1, 3))
    assert a * b == qr_qpow(Fraction(5, 6))
    assert (a + b).L == 6


small_ints = st.integers(-4, 4)
polys = st.lists(small_ints, min_size=1, max_size=4)


@st.composite
def qrats(draw):
    num = draw(polys)
    den = draw(polys.filter(lambda c: any(c)))
    L = draw(st.sampled_from([1, 1, 2]))
    return QRat(num, den, L)


@given(qrats(), qrats(), qrats())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    if a:
        assert a * a.inverse() == ONE


@given(qrats())
def test_inverse_q_is_an_involution(a):
    assert a.subst_inverse_q().subst_inverse_q() == a


@given(qrats(), qrats())
def test_inverse_q_is_a_ring_map(a, b):
    assert (a * b).subst_inverse_q() == a.subst_inverse_q() * b.subst_inverse_q()
    assert (a + b).subst_inverse_q() == a.subst_inverse_q() + b.subst_inverse_q()


@given(qrats(), qrats())
def test_equality_matches_hash(a, b):
    if a == b:
        assert hash(a) == hash(b)
    c = QRat(a.num, a.den, a.L)
    assert c == a and hash(c) == hash(a)


@given(st.lists(small_ints, min_size=1, max_size=5))
def test_powers_add_exponents(cs):
    x = QRat(cs) if any(cs) else ONE
    assert x**2 * x**3 == x**5
