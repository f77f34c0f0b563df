import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcatalan.errors import InsufficientTruncationError, TIncompleteError
from qcatalan.fps import ZSeries, ZTSeries, pochhammer, zs_recip, zts_eval_t, zts_subst_z_scaled
from qcatalan.qfield import ONE, QRat, qr_qpow

from helpers import zs


def test_product_of_exact_polynomials():
    f = ZSeries.from_list([1, 1])
    g = ZSeries.from_list([1, -1])
    assert f * g == ZSeries.from_list([1, 0, -1])


def test_product_window_uses_orders():
    # z^2 * (1 + O(z^3)) is known through z^5
    f = ZSeries.monomial(2)
    g = ZSeries.from_list([1], trunc=3)
    assert (f * g).trunc == 5


def test_reading_past_window_raises():
    f = ZSeries.from_list([1, 2], trunc=3)
    assert f[3] == 0
    with pytest.raises(InsufficientTruncationError):
        f[4]


def test_geometric_and_fibonacci_reciprocals():
    assert ZSeries.from_list([1, -1]).recip(5) == ZSeries.from_list([1] * 6, trunc=5)
    fib = ZSeries.from_list([1, -1, -1]).recip(8)
    assert [fib[k] for k in range(9)] == [QRat.coerce(v) for v in (1, 1, 2, 3, 5, 8, 13, 21, 34)]


def test_exact_reciprocal_needs_target():
    with pytest.raises(ValueError):
        zs_recip(ZSeries.from_list([1, 1]))


def test_laurent_reciprocal():
    # 1/(z + z^2) = z^-1 - 1 + z - ...
    r = ZSeries.from_list([0, 1, 1]).recip(3)
    assert r.low == -1
    assert [r[k] for k in range(-1, 2)] == [ONE, -ONE, ONE]


def test_pochhammer_matches_expanded_product():
    assert pochhammer(2) == zs(["1", "-1-q", "q"])
    assert pochhammer(3, base=-1) == zs(["1", "-(1+1/q+1/q^2)", "1/q+1/q^2+1/q^3", "-1/q^3"])


def test_dilation():
    f = ZSeries.from_list([1, 1, 1])
    assert f.dilate(1) == zs(["1", "q", "q^2"])
    assert f.dilate(1).dilate(-1) == f


def test_bivariate_eval_and_slices():
    # P = t - z t^2
    P = ZTSeries({(0, 1): ONE, (1, 2): -ONE})
    assert zts_eval_t(P, 0) == ZSeries.from_list([1, -1])
    assert zts_eval_t(P, 2) == zs(["q^2", "-q^4"])
    assert P.t_slice(2) == ZSeries.from_list([0, -1])
    assert zts_subst_z_scaled(P, 1)[(1, 2)] == -qr_qpow(1)


def test_eval_t_refuses_t_truncated_series():
    F = ZTSeries({(0, 1): ONE}, trunc_z=3, trunc_t=4)
    with pytest.raises(TIncompleteError):
        zts_eval_t(F, 1)


def test_bivariate_window_rule():
    a = ZTSeries({(0, 1): ONE}, trunc_z=4, trunc_t=4)
    b = ZTSeries({(1, 0): ONE}, trunc_z=2, trunc_t=6)
    prod = a * b
    assert prod[(1, 1)] == ONE
    # z: min(4 + ord_z b, 2 + ord_z a) = 2; t: min(4 + ord_t b, 6 + ord_t a) = 4
    assert (prod.trunc_z, prod.trunc_t) == (2, 4)


coeff_lists = st.lists(st.integers(-3, 3), min_size=1, max_size=6)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    f, g, h = (ZSeries.from_list(x, trunc=6) for x in (a, b, c))
    assert ((f * g) * h).truncate(6) == (f * (g * h)).truncate(6)
    assert (f * (g + h)).truncate(6) == (f * g + f * h).truncate(6)
    assert f * g == g * f


@given(coeff_lists.filter(lambda c: c[0] != 0))
def test_reciprocal_inverts(cs):
    f = ZSeries.from_list(cs, trunc=7)
    assert (f * f.recip()).truncate(7) == ZSeries.one(7)


@given(coeff_lists, st.integers(-2, 2))
def test_dilation_is_multiplicative(cs, a):
    f = ZSeries.from_list(cs, trunc=6)
    g = ZSeries.from_list(list(reversed(cs)), trunc=6)
    assert (f * g).dilate(a).truncate(6) == (f.dilate(a) * g.dilate(a)).truncate(6)
