from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bohrequiv.rational import (
    as_fraction,
    det,
    express,
    inverse,
    matmul,
    primitive_integer_row,
    rank,
    rref,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda n: st.integers(1, max_cols).flatmap(
            lambda m: st.lists(st.lists(fractions, min_size=m, max_size=m),
                               min_size=n, max_size=n)))


def test_as_fraction_refuses_floats():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    assert as_fraction("3/4") == F(3, 4)
    assert as_fraction(" -2 ") == -2


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rref_matches_sympy(A):
    R, E, pivots = rref(A)
    assert matmul(E, A) == R
    S, spiv = sympy.Matrix(A).rref()
    assert list(spiv) == pivots
    assert [[F(int(v.p), int(v.q)) for v in row] for row in S.tolist()] == R
    assert rank(A) == sympy.Matrix(A).rank()


@settings(max_examples=50, deadline=None)
@given(matrices(3, 3))
def test_inverse_and_det(A):
    if len(A) != len(A[0]):
        return
    d = det(A)
    assert d == sympy.Matrix(A).det()
    if d == 0:
        with pytest.raises(ValueError):
            inverse(A)
    else:
        n = len(A)
        assert matmul(A, inverse(A)) == [[F(int(i == j)) for j in range(n)] for i in range(n)]


def test_express():
    rows = [[F(2), F(0)], [F(1, 2), F(1)]]
    assert express(rows, [F(3), F(1)]) == [F(5, 4), F(1)]
    assert express([[F(1), F(0)]], [F(0), F(1)]) is None


def test_primitive_integer_row():
    assert primitive_integer_row([F(-1, 2), F(1, 4)]) == [2, -1]
    assert primitive_integer_row([F(0), F(0)]) == [0, 0]
