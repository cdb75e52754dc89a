import pytest

from superhopf.core import binomial
from superhopf.hcp import (
    HCPData, build_B, build_C, check_affine, check_C_relations, check_hcp, defining_module, eta_iso, gallery_gl,
    stalk_dims, verify_module_pair,
)
from superhopf.hopf import check_hopf_axioms
from superhopf.parse import ParseError


@pytest.fixture(scope="module")
def gl11():
    O_G, H = gallery_gl(1, 1)
    B = build_B(H)
    return O_G, H, B


def _coaction_and_bracket(H):
    coa = {v: [(e, H.odd[j]) for j, e in H.R[i].items()] for i, v in enumerate(H.odd)}
    br = {(H.odd[i], H.odd[j]): {H.F.names[k]: c for k, c in v.items()} for (i, j), v in H.br.items()}
    return coa, br


def test_gl11_pair_data(gl11):
    _, H, _ = gl11
    assert H.F.names == ["X11", "Y11"] and H.odd == ["P11", "Q11"]
    # [E12, E21] = E11 + E22
    assert H.bracket(0, 1) == {0: 1, 1: 1}
    assert check_hcp(H).ok
    assert check_affine(H.F).ok
    assert check_C_relations(build_C(H)).ok


def test_gl11_B_is_a_hopf_algebra(gl11):
    _, _, B = gl11
    assert check_hopf_axioms(B.presentation()).ok


def test_gl11_B_stalk_dimensions(gl11):
    _, _, B = gl11
    expect = [sum(binomial(2, j) * binomial(n - j + 2, 2) for j in range(min(n, 2) + 1)) for n in range(4)]
    assert stalk_dims(B, 3) == expect


def test_gl11_eta_images_frozen(gl11):
    O_G, H, B = gl11
    res = eta_iso(O_G, H, B)
    assert res.report.ok
    assert all(not d for d in res.defects.values())
    A = res.images["X11"].alg
    assert res.images["X11"] == A.parse("X11 + X11*P11*Q11")
    assert res.images["Y11"] == A.parse("Y11")
    assert res.images["P11"] == A.parse("X11*P11")
    assert res.images["Q11"] == A.parse("Y11*Q11")


def test_defining_module_pair(gl11):
    _, H, B = gl11
    M, dot, tri = defining_module(1, 1, H)
    rep, W = verify_module_pair(H, M, dot, tri, B)
    assert rep.ok
    A = W[0][0].alg
    assert W[0][0] == A.parse("X11 + X11*P11*Q11") and W[0][1] == A.parse("X11*P11")
    assert W[1][0] == A.parse("Y11*Q11") and W[1][1] == A.parse("Y11")


def test_perturbed_action_fails_with_witness(gl11):
    _, H, B = gl11
    M, dot, tri = defining_module(1, 1, H)
    bad = dict(tri)
    k = next(iter(bad))
    bad[k] = {a: 2 * c for a, c in bad[k].items()}
    rep, _ = verify_module_pair(H, M, dot, bad, B)
    assert not rep.ok
    assert rep.get("odd_action_bracket").witness == "odd_action_bracket(P11,Q11,e1)"


def test_scaled_bracket_breaks_P1(gl11):
    _, H, _ = gl11
    coa, br = _coaction_and_bracket(H)
    k = next(iter(br))
    br[k] = {x: 2 * c for x, c in br[k].items()}
    rep = check_hcp(HCPData(H.F, H.odd, coa, br))
    assert not rep.get("bracket_symmetric").passed
    assert rep.get("bracket_symmetric").witness == "bracket_symmetric(P11,Q11)"


def test_schema_violations_are_rejected(gl11):
    _, H, _ = gl11
    coa, _ = _coaction_and_bracket(H)
    with pytest.raises(ValueError, match="parity violation"):
        HCPData(H.F, H.odd, coa, {("P11", "Q11"): {"P11": 1}})
    with pytest.raises(ParseError):
        HCPData(H.F, H.odd, {"P11": [("P11", "Q11")]}, {})
    with pytest.raises(ValueError, match="unknown"):
        HCPData(H.F, H.odd, {"P11": [("X11", "Z")]}, {})


@pytest.mark.parametrize("m,n", [(2, 1), (1, 2)])
def test_larger_gallery_pipeline(m, n):
    O_G, H = gallery_gl(m, n)
    assert check_hopf_axioms(O_G).ok
    assert check_hcp(H).ok
    B = build_B(H)
    assert check_hopf_axioms(B.presentation()).ok
    assert eta_iso(O_G, H, B).report.ok
    M, dot, tri = defining_module(m, n, H)
    assert verify_module_pair(H, M, dot, tri, B)[0].ok


@pytest.mark.parametrize("m,n,dims", [(1, 0, [1, 2, 3, 4]), (2, 0, [1, 5, 15, 35]), (0, 1, [1, 2, 3, 4])])
def test_purely_even_pairs(m, n, dims):
    O_G, H = gallery_gl(m, n)
    B = build_B(H)
    assert H.n == 0 and check_hcp(H).ok
    assert stalk_dims(B, 3) == dims
    assert eta_iso(O_G, H, B).report.ok


@pytest.mark.parametrize("m,n,seed", [(1, 1, 0), (2, 1, 5)])
def test_reordered_odd_basis_gives_same_level_dimensions(m, n, seed):
    import random
    _, H = gallery_gl(m, n)
    coa, br = _coaction_and_bracket(H)
    order = list(H.odd)
    random.Random(seed).shuffle(order)
    if order == H.odd:
        order.reverse()
    H2 = HCPData(H.F, order, coa, br)
    assert check_hcp(H2).ok
    assert build_C(H2).dims() == build_C(H).dims()
    if (m, n) == (1, 1):
        assert check_hopf_axioms(build_B(H2).presentation()).ok
