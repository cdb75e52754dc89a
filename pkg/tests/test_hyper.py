import random

import pytest
from hypothesis import given, strategies as st

from superhopf.core import QQF, Field, binomial
from superhopf.hyper import (
    LieSuperAlgebra, TruncatedPolynomialHyper, abelian_lie, as_table, check_hyper_axioms, check_lie_axioms,
    coradical_filtration, divided_power_hyperalgebra, enveloping, exterior_hyperalgebra, gl_lie, primitives,
    random_lie_superalgebra, smoothness_check, supercommutator, underline_dims,
)

GL11 = gl_lie(1, 1)
U = enveloping(GL11, 4)


def test_gl11_structure_constants():
    assert GL11.basis == [("E11", 0), ("E12", 1), ("E21", 1), ("E22", 0)]
    assert check_lie_axioms(GL11).ok
    assert GL11.bracket({1: 1}, {2: 1}) == {0: 1, 3: 1}


def test_broken_jacobi_is_witnessed():
    g = LieSuperAlgebra(QQF, [("x", 0), ("y", 0), ("z", 0)],
                        {("x", "y"): {"y": 1}, ("y", "x"): {"y": -1}, ("y", "z"): {"x": 1}, ("z", "y"): {"x": -1}})
    # [z, [x, y]] = [z, y] = -x while the other two Jacobi terms vanish
    assert not check_lie_axioms(g).ok


def test_pbw_straightening_frozen():
    # E21 E12 = -E12 E21 + [E21, E12] = -E12 E21 + E11 + E22
    assert U.normal_form((2, 1)) == {(1, 2): -1, (0,): 1, (3,): 1}
    # E12 E12 = [E12, E12] / 2 = 0
    assert U.normal_form((1, 1)) == {}


def _nf_product(Ua, a, b):
    return Ua.multiply(Ua.normal_form(tuple(a)), Ua.normal_form(tuple(b)))


words = st.lists(st.integers(0, 3), max_size=4)


@given(words, st.integers(0, 4))
def test_pbw_confluence_gl11(word, cut):
    cut = min(cut, len(word))
    assert _nf_product(U, word[:cut], word[cut:]) == U.normal_form(tuple(word))


@given(st.integers(0, 10_000), st.lists(st.integers(0, 2), max_size=4), st.integers(0, 4))
def test_pbw_confluence_random_lie(seed, word, cut):
    g = random_lie_superalgebra(seed)
    assert check_lie_axioms(g).ok
    V = enveloping(g, 4)
    cut = min(cut, len(word))
    assert _nf_product(V, word[:cut], word[cut:]) == V.normal_form(tuple(word))


def test_enveloping_dimensions_and_primitives():
    # PBW: dims of U(gl(1|1))_(n) = sum_j binom(2, j) binom(n - j + 2, 2)
    expect = [sum(binomial(2, j) * binomial(n - j + 2, 2) for j in range(min(n, 2) + 1)) for n in range(5)]
    assert U.dims() == expect == [1, 5, 13, 25, 41]
    assert coradical_filtration(U, 4).dims() == expect
    assert len(primitives(U)) == 4


def test_enveloping_axioms():
    assert check_hyper_axioms(enveloping(GL11, 3)).ok


def test_divided_power_tables():
    D = divided_power_hyperalgebra([("b", 0)], 6)
    assert D.mul((1,), (1,)) == {(2,): 2}
    for r in range(7):
        assert D.coproduct((r,)) == {((k,), (r - k,)): 1 for k in range(r + 1)}
        for s in range(7 - r):
            assert D.mul((r,), (s,)) == {(r + s,): binomial(r + s, r)}
    D3 = divided_power_hyperalgebra([("b", 0)], 4, Field(3))
    assert D3.mul((1,), (2,)) == {}
    assert check_hyper_axioms(D3).ok


def test_smoothness_verdicts():
    for n in range(1, 7):
        assert smoothness_check(enveloping(GL11, n)).smooth_up_to_N
    assert smoothness_check(exterior_hyperalgebra(["a", "b"], 6), 6).smooth_up_to_N
    r = smoothness_check(TruncatedPolynomialHyper(Field(3), 6))
    assert not r.smooth_up_to_N and r.defect_level == 2


@given(st.integers(0, 1000))
def test_smoothness_verdict_ignores_projection_choice(seed):
    assert smoothness_check(enveloping(GL11, 3), seed=seed).smooth_up_to_N
    assert smoothness_check(TruncatedPolynomialHyper(Field(3), 5), seed=seed).defect_level == 2


def test_underline_of_enveloping_is_even_part():
    # underline U(g) = U(g_0) with g_0 two-dimensional abelian
    assert underline_dims(U, 4) == [binomial(n + 2, 2) for n in range(5)]


def test_supercommutator_of_odd_primitives():
    e12, e21 = {(1,): 1}, {(2,): 1}
    assert supercommutator(U, e12, e21) == {(0,): 1, (3,): 1}
    assert supercommutator(U, e12, e12) == {}


def test_table_snapshot_keeps_axioms():
    T = as_table(U, 2)
    assert T.dims() == U.dims()[:3]
    assert check_hyper_axioms(T).ok
