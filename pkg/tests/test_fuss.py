from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcatalan.errors import DomainError, InsufficientTruncationError
from qcatalan.fuss import (
    carlitz,
    coefficient_report,
    compositions,
    fuss_catalan,
    q_airy,
    qfuss,
    qfuss_via_basis,
    rogers_ramanujan_cfrac,
)
from qcatalan.qfield import ONE, qr_qpow

from helpers import qv
from oracles import carlitz_by_paths

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440,
           9694845, 35357670, 129644790, 477638700, 1767263190, 6564120420]

# undetermined-coefficient solves (tests/oracles.py)
ORACLE_QFUSS_3 = [
    "1",
    "1",
    "q**2 + q + 1",
    "q**6 + 2*q**5 + 3*q**4 + 2*q**3 + 2*q**2 + q + 1",
    "q**12 + 3*q**11 + 6*q**10 + 7*q**9 + 8*q**8 + 7*q**7 + 7*q**6 + 5*q**5 + 4*q**4 + 3*q**3 + 2*q**2 + q + 1",
]
ORACLE_QFUSS_4 = ["1", "1", "q**3 + q**2 + q + 1", "q**9 + 2*q**8 + 3*q**7 + 4*q**6 + 3*q**5 + 3*q**4 + 2*q**3 + 2*q**2 + q + 1"]
# truncated continued fraction, depth 7, to z^5 (tests/oracles.py)
ORACLE_CFRAC_7_5 = [
    "1",
    "1",
    "(q + 1)/q",
    "(q**3 + 2*q**2 + q + 1)/q**3",
    "(q + 1)*(q**5 + 2*q**4 + q**3 + 2*q**2 + 1)/q**6",
    "(q**3 + q**2 + 1)*(q**7 + 3*q**6 + 3*q**5 + 3*q**4 + q**3 + q**2 + q + 1)/q**10",
]


class TestCarlitz:
    def test_small_values(self):
        c = carlitz(3)
        assert list(c) == [ONE, ONE, qv("1+q"), qv("1+q+2*q**2+q**3")]
        assert c.provenance == "carlitz-recursion"

    def test_catalan_numbers_at_one(self):
        assert carlitz(20).at_q1() == CATALAN

    @pytest.mark.parametrize("n", range(8))
    def test_dyck_path_area(self, n):
        assert carlitz(n)[n] == qv(carlitz_by_paths(n))

    def test_degree_is_binomial(self):
        report = coefficient_report(carlitz(7))
        assert [r["degree"] for r in report] == [comb(n, 2) for n in range(8)]
        assert all(r["nonnegative"] for r in report)


class TestFuss:
    def test_frozen_p3(self):
        assert list(qfuss(3, 4)) == [qv(v) for v in ORACLE_QFUSS_3]

    def test_frozen_p4(self):
        assert list(qfuss(4, 3)) == [qv(v) for v in ORACLE_QFUSS_4]

    @pytest.mark.parametrize("p", [2, 3, 4])
    def test_two_methods_agree(self, p):
        assert qfuss(p, 8).values == qfuss_via_basis(p, 8).values

    @pytest.mark.parametrize("p", [2, 3, 4, 5])
    def test_closed_form_at_one(self, p):
        assert qfuss(p, 8).at_q1() == [fuss_catalan(p, n) for n in range(9)]

    def test_binary_column_is_carlitz(self):
        assert qfuss(2, 10).values == carlitz(10).values

    def test_p_below_two_rejected(self):
        with pytest.raises(DomainError):
            qfuss(1, 3)
        with pytest.raises(DomainError):
            qfuss_via_basis(0, 3)

    def test_report(self):
        r = coefficient_report(qfuss(3, 6))
        assert r[6] == {"polynomial": True, "degree": 30, "nonnegative": True}
        assert all(x["polynomial"] for x in r)

    @given(st.integers(0, 6), st.integers(1, 4))
    def test_compositions(self, total, parts):
        got = list(compositions(total, parts))
        assert len(got) == comb(total + parts - 1, parts - 1)
        assert all(sum(c) == total and len(c) == parts for c in got)
        assert got == sorted(set(got))


class TestAiry:
    def test_classical(self):
        a = q_airy(1, 3)
        assert a[0] == ONE
        assert a[1] == qv("-q/(1-q)")
        assert a[2] == qv("q**4/((1-q)*(1-q**2))")

    def test_variant_exponent(self):
        a = q_airy(3, 3)
        assert a[1] == qv("-1/(1-q)")
        assert a[2] == qv("q**3/((1-q)*(1-q**2))")

    def test_inverse_base(self):
        assert q_airy(2, 4, inverse_q=True) == q_airy(2, 4).subst_inverse_q()

    def test_p_must_be_positive(self):
        with pytest.raises(DomainError):
            q_airy(0, 3)


class TestContinuedFraction:
    def test_frozen_oracle(self):
        g = rogers_ramanujan_cfrac(7, 5)
        assert [g[k] for k in range(6)] == [qv(v) for v in ORACLE_CFRAC_7_5]

    def test_depth_too_small(self):
        with pytest.raises(InsufficientTruncationError):
            rogers_ramanujan_cfrac(4, 6)

    def test_stable_in_depth(self):
        assert rogers_ramanujan_cfrac(8, 8) == rogers_ramanujan_cfrac(14, 8)

    def test_rescaled_carlitz(self):
        g = rogers_ramanujan_cfrac(10, 8)
        # [z^k] is C_k scaled by q^-binom(k,2)
        assert [g[k] * qr_qpow(comb(k, 2)) for k in range(9)] == list(carlitz(8))
