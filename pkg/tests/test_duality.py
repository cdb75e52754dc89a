import pytest
from hypothesis import given, strategies as st

from superhopf.core import QQF, Field, binomial
from superhopf.dump import DumpError, dump_tables, load_tables
from superhopf.duality import (
    continuous_dual, dual_of_hyper, from_presentation, match_tables, present, roundtrip_check,
)
from superhopf.hopf import additive_law, check_hopf_axioms, multiplicative_law
from superhopf.hyper import check_hyper_axioms, divided_power_hyperalgebra, enveloping, gl_lie


def test_series_tables_level_dims():
    A = from_presentation(additive_law(("T",), ("E",), 4))
    assert A.labels == ["1", "T", "E", "T^2", "T*E", "T^3", "T^2*E", "T^4", "T^3*E"]
    assert A.dims() == [1, 3, 5, 7, 9]


def test_round_trip_complete_side():
    assert roundtrip_check(additive_law(("T",), ("E",), 4)).ok
    assert roundtrip_check(multiplicative_law(4)).ok


def test_round_trip_hyper_side():
    assert roundtrip_check(enveloping(gl_lie(1, 1), 3)).ok
    assert roundtrip_check(divided_power_hyperalgebra([("b", 0), ("e", 1)], 4, Field(3))).ok


def test_dual_of_additive_law_is_divided_powers():
    C = continuous_dual(from_presentation(additive_law(("T",), (), 6)))
    D = divided_power_hyperalgebra([("b", 0)], 6)
    assert match_tables(C, D, {k: (k,) for k in range(7)})
    assert check_hyper_axioms(C).ok


def test_divided_powers_dualize_back_to_additive_law():
    H = present(dual_of_hyper(divided_power_hyperalgebra([("b", 0)], 5)))
    A2 = H.A.tensor_power(2)
    assert H.coproduct["b1"] == A2.parse("b1@1 + b1@2")
    assert check_hopf_axioms(H).ok


def test_dual_of_multiplicative_law_has_primitive_generator():
    C = continuous_dual(from_presentation(multiplicative_law(4)))
    # (T)* is primitive and (T)*(T)* = 2 (T^2)* + (T)*
    assert C.coproduct(1) == {(0, 1): 1, (1, 0): 1}
    assert C.mul(1, 1) == {1: 1, 2: 2}


def test_exterior_dual_determinant_signs():
    C = continuous_dual(from_presentation(additive_law((), ("a", "b"), 2)))
    assert C.labels == ["1", "(a)*", "(b)*", "(a*b)*"]
    assert C.mul(1, 2) == {3: 1} and C.mul(2, 1) == {3: -1}
    assert C.coproduct(3) == {(0, 3): 1, (1, 2): 1, (2, 1): -1, (3, 0): 1}


def test_dump_is_byte_stable_and_reloadable():
    C = continuous_dual(from_presentation(additive_law(("T",), ("E",), 4)))
    text = dump_tables(C)
    assert dump_tables(load_tables(text)) == text
    A = from_presentation(additive_law(("T",), ("E",), 4))
    assert dump_tables(load_tables(dump_tables(A))) == dump_tables(A)


def test_dump_swap_gives_dual():
    A = from_presentation(additive_law(("T",), (), 4))
    d = dump_tables(A)
    head, rest = d.split("product\n", 1)
    prod, cop = rest.split("coproduct\n", 1)
    swapped = head.replace("kind complete", "kind hyper") + "product\n" + cop + "coproduct\n" + prod
    assert load_tables(swapped).mul_table == continuous_dual(A).mul_table


def test_f3_divided_power_dump():
    text = dump_tables(divided_power_hyperalgebra([("b", 0)], 4, Field(3)))
    prod = text.split("\nproduct\n")[1].split("\ncoproduct\n")[0].splitlines()
    quads = {tuple(map(int, ln.split()[:3])): ln.split()[3] for ln in prod if not ln.startswith("level")}
    assert (1, 2, 3) not in quads and (2, 1, 3) not in quads
    assert quads[(1, 1, 2)] == "2" and quads[(1, 3, 4)] == "1"


def test_dump_errors_report_lines():
    with pytest.raises(DumpError) as err:
        load_tables("kind hyper\nfield q\nN 2\nunit 0\nbasis 1\n0 0 0 1\nproduct\n1 2\n")
    assert err.value.line == 8


@given(st.integers(1, 6))
def test_divided_power_products_over_q(n):
    D = divided_power_hyperalgebra([("b", 0)], n)
    C = continuous_dual(dual_of_hyper(D))
    for r in range(n + 1):
        for s in range(n + 1 - r):
            assert C.mul(r, s) == {r + s: binomial(r + s, r)}
