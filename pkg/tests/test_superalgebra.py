import pytest
from hypothesis import given, strategies as st

from superhopf.core import QQF, Field
from superhopf.parse import ParseError
from superhopf.superalgebra import (
    Generator, NotInvertible, SuperCommutativeAlgebra, delta_k, even_quotient, invert, matrix_inverse,
    matrix_mul, substitute,
)

ODD = ["a", "b", "c"]
A = SuperCommutativeAlgebra(QQF, [Generator("x", 0), Generator("y", 0)] + [Generator(n, 1) for n in ODD], truncation=4)


def _perm_sign(word):
    inv = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    return -1 if inv % 2 else 1


@given(st.lists(st.sampled_from(ODD), max_size=4))
def test_odd_words_follow_permutation_sign(word):
    prod = A.one()
    for w in word:
        prod = prod * A.gen(w)
    if len(set(word)) < len(word):
        assert prod.is_zero()
    else:
        expect = A.one()
        for w in sorted(word):
            expect = expect * A.gen(w)
        assert prod == expect * _perm_sign(word)


def _homogeneous(draw_terms, parity):
    out = A.zero()
    for c, ex, ey, odd in draw_terms:
        odd = sorted(set(odd))
        if len(odd) % 2 != parity:
            continue
        term = A.scalar(c) * A.gen("x") ** ex * A.gen("y") ** ey
        for o in odd:
            term = term * A.gen(o)
        out = out + term
    return out


term = st.tuples(st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2), st.lists(st.sampled_from(ODD), max_size=2))
elements = st.tuples(st.lists(term, max_size=4), st.integers(0, 1)).map(lambda t: (_homogeneous(*t), t[1]))


@given(elements, elements)
def test_super_commutativity(u, v):
    (p, pp), (q, qp) = u, v
    assert p * q == q * p * (-1 if pp and qp else 1)


@given(elements, elements, elements)
def test_associativity_and_distributivity(u, v, w):
    p, q, r = u[0], v[0], w[0]
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(elements)
def test_odd_elements_square_to_zero(u):
    p, par = u
    if par:
        assert (p * p).is_zero()


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_invert_units_in_truncated_algebra(cs):
    u = A.scalar(1) + A.scalar(cs[0]) * A.gen("x") + A.scalar(cs[1]) * A.gen("a") * A.gen("b") + A.scalar(cs[2]) * A.gen("y") ** 2
    assert invert(u) * u == A.one()


def test_geometric_series_inverse():
    B = SuperCommutativeAlgebra(QQF, ["x"], truncation=3)
    assert invert(B.one() + B.gen("x")) == B.parse("1 - x + x^2 - x^3")


def test_non_units_are_rejected():
    with pytest.raises(NotInvertible):
        invert(A.gen("x"))


def test_laurent_and_inverse_generators():
    B = SuperCommutativeAlgebra(QQF, [Generator("t", 0, True), Generator("u", 0), Generator("d", 0, inverse_of="1+u")])
    t, u, d = B.gens()
    assert t ** -2 * t ** 2 == B.one()
    assert d * (B.one() + u) == B.one()
    assert d * u == B.one() - d
    assert invert(t * 2) == B.scalar(QQF("1/2")) * t ** -1


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        A.parse("x + * y")
    assert err.value.position == 4
    with pytest.raises(Exception):
        A.parse("x + zz")


def test_parse_rationals_and_powers():
    assert A.parse("1/2*x^2 - (x + a)*(x - a)") == A.parse("-1/2*x^2")


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(0, 6)), max_size=5), st.integers(0, 3), st.integers(0, 3))
def test_delta_operators_compose_binomially(terms, j, k):
    S = SuperCommutativeAlgebra(QQF, ["T"], truncation=8)
    f = S.zero()
    for c, e in terms:
        f = f + S.scalar(c) * S.gen("T") ** e
    from superhopf.core import binomial
    assert delta_k(j, "T", delta_k(k, "T", f)) == delta_k(j + k, "T", f) * binomial(j + k, k)


def test_delta_k_frozen_value():
    S = SuperCommutativeAlgebra(QQF, ["T"], truncation=6)
    assert delta_k(2, "T", S.parse("T^3 + T^2")) == S.parse("3*T + 1")


def test_substitute_is_an_algebra_map():
    B = SuperCommutativeAlgebra(QQF, ["s", Generator("e", 1)], truncation=3)
    img = {"x": B.gen("s") + B.gen("s") ** 2, "y": B.zero(), "a": B.gen("e"), "b": B.gen("s") * B.gen("e"), "c": B.zero()}
    p, q = A.parse("x*a + y"), A.parse("x^2 + b")
    assert substitute(p * q, B, img) == substitute(p, B, img) * substitute(q, B, img)


def test_block_matrix_inverse_with_odd_entries():
    G = SuperCommutativeAlgebra(QQF, [Generator("X", 0, True), Generator("Y", 0, True), Generator("P", 1), Generator("Q", 1)])
    Z = [[G.gen("X"), G.gen("P")], [G.gen("Q"), G.gen("Y")]]
    Zi = matrix_inverse(Z, G)
    I = matrix_mul(Z, Zi, G)
    assert all(I[i][j] == (G.one() if i == j else G.zero()) for i in range(2) for j in range(2))
    assert Zi[0][0] == G.parse("X^-1 + X^-2*Y^-1*P*Q")


def test_even_quotient_kills_odd_generators():
    Q = even_quotient(A)
    assert Q.names == ["x", "y"]


def test_fp_arithmetic():
    F3 = Field(3)
    B = SuperCommutativeAlgebra(F3, ["x"], truncation=5)
    assert (B.one() + B.gen("x")) ** 3 == B.one() + B.gen("x") ** 3
