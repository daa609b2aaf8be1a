import pytest
from hypothesis import given
from hypothesis import strategies as st

from surdcf.exact import DomainError
from surdcf.mat2 import (
    IDENTITY,
    Mat2,
    mat_pow,
    odd_quotient_power,
    pell_power,
    sqrt3_power,
)

entries = st.integers(-99, 99)


class TestMatPow:
    def test_printed_powers(self):
        assert mat_pow(Mat2(1, 2, 1, 1), 2) == Mat2(3, 4, 2, 3)
        assert mat_pow(Mat2(3, 2, 1, 1), 3) == Mat2(41, 30, 15, 11)
        assert mat_pow(Mat2(3, 1, 1, 0), 3) == Mat2(33, 10, 10, 3)

    def test_zeroth_power(self):
        assert mat_pow(Mat2(7, -3, 2, 9), 0) == IDENTITY

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            mat_pow(IDENTITY, -1)

    @given(st.tuples(entries, entries, entries, entries), st.integers(0, 64))
    def test_det_multiplicativity(self, t, n):
        m = Mat2(*t)
        assert mat_pow(m, n).det() == m.det() ** n

    @given(st.tuples(entries, entries, entries, entries), st.integers(0, 40))
    def test_matches_repeated_multiplication(self, t, n):
        m = Mat2(*t)
        acc = IDENTITY
        for _ in range(n):
            acc = acc * m
        assert mat_pow(m, n) == acc


class TestSequenceBackedPowers:
    def test_pell_printed(self):
        assert pell_power(1) == Mat2(1, 2, 1, 1)
        assert pell_power(4) == Mat2(17, 24, 12, 17)
        assert pell_power(5) == Mat2(41, 58, 29, 41)

    def test_pell_cross_validation(self):
        base = Mat2(1, 2, 1, 1)
        for k in range(1, 201):
            assert pell_power(k) == mat_pow(base, k)

    def test_sqrt3_printed(self):
        assert sqrt3_power(1) == Mat2(3, 2, 1, 1)
        assert sqrt3_power(2) == Mat2(11, 8, 4, 3)
        assert sqrt3_power(5) == Mat2(571, 418, 209, 153)

    def test_sqrt3_cross_validation(self):
        base = Mat2(3, 2, 1, 1)
        for k in range(1, 201):
            assert sqrt3_power(k) == mat_pow(base, k)

    def test_odd_quotient_printed(self):
        assert odd_quotient_power(1, 4) == Mat2(109, 33, 33, 10)
        assert odd_quotient_power(1, 7) == Mat2(3927, 1189, 1189, 360)
        # m = 0 is the Fibonacci matrix
        assert odd_quotient_power(0, 3) == Mat2(3, 2, 2, 1)

    def test_odd_quotient_cross_validation(self):
        for m in range(11):
            base = Mat2(2 * m + 1, 1, 1, 0)
            for n in range(1, 201):
                assert odd_quotient_power(m, n) == mat_pow(base, n)

    def test_preconditions(self):
        with pytest.raises(DomainError):
            pell_power(0)
        with pytest.raises(DomainError):
            sqrt3_power(0)
        with pytest.raises(DomainError):
            odd_quotient_power(-1, 2)
