from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from superhopf.core import (
    Field, FieldError, QQF, SuperSpace, binomial, identity, inverse, koszul_sign, matmul, nullspace, rank,
    solve, tensor_spaces,
)


def test_field_parsing():
    assert Field.parse("q").characteristic == 0
    assert Field.parse("fp:5").characteristic == 5
    for bad in ("fp:2", "fp:9", "fp:x", "zz"):
        with pytest.raises(FieldError):
            Field.parse(bad)


def test_field_arithmetic_is_exact():
    F = QQF
    assert F("1/3") + F("2/3") == F.one
    F3 = Field(3)
    assert F3(5) == F3(2)
    assert F3.format(F3(4)) == "1"
    assert F3.inv(F3(2)) == F3(2)


def test_koszul_sign_table():
    assert [koszul_sign(p, q) for p in (0, 1) for q in (0, 1)] == [1, 1, 1, -1]


def test_superspace_basics():
    V = SuperSpace.of(["x", "y"], ["a"])
    assert V.dim == 3 and V.sdim == (2, 1)
    assert V.parity("a") == 1
    W = tensor_spaces(V, V)
    assert W.sdim == (5, 4)


@given(st.integers(0, 12), st.integers(0, 12))
def test_binomial_matches_fraction_formula(n, k):
    num = 1
    for j in range(k):
        num *= Fraction(n - j, j + 1)
    assert binomial(n, k) == num


small = st.integers(-3, 3)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_or_singular(rows):
    F = QQF
    M = [[F(x) for x in r] for r in rows]
    if rank(M, 3, F) == 3:
        assert matmul(M, inverse(M, F), F) == identity(3, F)
    else:
        ker = nullspace(M, 3, F)
        assert ker
        for v in ker:
            assert all(sum(M[i][j] * v[j] for j in range(3)) == 0 for i in range(3))


@given(st.lists(st.lists(small, min_size=2, max_size=2), min_size=2, max_size=2), st.lists(small, min_size=2, max_size=2))
def test_solve_returns_solution(rows, rhs):
    F = QQF
    M = [[F(x) for x in r] for r in rows]
    b = [F(x) for x in rhs]
    x = solve(M, b, F)
    if x is not None:
        assert [sum(M[i][j] * x[j] for j in range(2)) for i in range(2)] == b
