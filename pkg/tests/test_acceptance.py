"""Acceptance suite: one or more tests per criterion, summarized at the end of the run."""
import io
import random
import time

import pytest

from superhopf.cli import run
from superhopf.core import QQF, Field, binomial
from superhopf.duality import continuous_dual, dual_of_hyper, from_presentation, match_tables, present, roundtrip_check
from superhopf.hcp import build_B, check_hcp, defining_module, eta_iso, gallery_gl, verify_module_pair
from superhopf.hopf import (
    additive_law, antipode_oracle, check_group_law, check_hopf_axioms, expand_at_identity, group_law,
    multiplicative_law,
)
from superhopf.hopfmod import (
    coinvariants, exterior_hopf, nu, random_comodule, random_hopf_module, random_surjection_data, theta_retraction,
    xi_differs, xi_instance,
)
from superhopf.hyper import (
    TruncatedPolynomialHyper, check_lie_axioms, divided_power_hyperalgebra, enveloping, exterior_hyperalgebra, gl_lie,
    random_lie_superalgebra, smoothness_check,
)
from superhopf.superalgebra import SuperCommutativeAlgebra, delta_k

C = pytest.mark.criterion


# 1 -------------------------------------------------------------------------

@C(1, "GL(1|1), GL(2|1) Hopf axiom suite, each under 60 s")
@pytest.mark.parametrize("m,n", [(1, 1), (2, 1)])
def test_c01_hopf_axioms(m, n):
    t = time.perf_counter()
    O_G, _ = gallery_gl(m, n)
    rep = check_hopf_axioms(O_G)
    elapsed = time.perf_counter() - t
    for name in ("coassociativity", "counit", "antipode", "relations", "parity"):
        assert rep.get(name).passed, rep.get(name).line()
    assert elapsed < 60.0


# 2 -------------------------------------------------------------------------

@C(2, "GL(1|1) antipode: block formula = degree-wise oracle = X^-1 + X^-1 P Y^-1 Q X^-1")
def test_c02_antipode_cross_check():
    O_G, _ = gallery_gl(1, 1)
    A = O_G.A
    S_X = O_G.S(A.gen("X11"))
    assert S_X == A.parse("X11^-1 + X11^-1*P11*Y11^-1*Q11*X11^-1")
    local, phi = expand_at_identity(O_G, 6)
    for g in A.names:
        expect = phi(O_G.S(A.gen(g))) - local.A.scalar(O_G.counit[g])
        assert local.S(local.A.gen("t_" + g)) == expect
    assert antipode_oracle(O_G)["X11"] == S_X


# 3 -------------------------------------------------------------------------

def _random_words(rng, letters, count=200, max_len=4):
    return [tuple(rng.randrange(letters) for _ in range(rng.randint(0, max_len))) for _ in range(count)]


def _reassociation_invariant(U, words, rng):
    for w in words:
        nf = U.normal_form(w)
        for cut in range(len(w) + 1):
            assert U.multiply(U.normal_form(w[:cut]), U.normal_form(w[cut:])) == nf
        if len(w) >= 3:
            i, j = sorted(rng.sample(range(1, len(w)), 2))
            left = U.multiply(U.multiply(U.normal_form(w[:i]), U.normal_form(w[i:j])), U.normal_form(w[j:]))
            assert left == nf


@C(3, "PBW confluence on 200 random words for gl(1|1) and a random Lie super-algebra")
def test_c03_pbw_confluence():
    rng = random.Random(20240)
    U = enveloping(gl_lie(1, 1), 4)
    _reassociation_invariant(U, _random_words(rng, 4), rng)
    g = random_lie_superalgebra(11)
    assert check_lie_axioms(g).ok and g.dim == 3
    V = enveloping(g, 4)
    _reassociation_invariant(V, _random_words(rng, 3), rng)


# 4 -------------------------------------------------------------------------

@C(4, "divided powers: b1 b1 = 2 b2 over Q, b1 b2 = 0 over F3, binomial coproducts")
def test_c04_divided_powers():
    D = divided_power_hyperalgebra([("b", 0)], 6)
    assert D.mul((1,), (1,)) == {(2,): 2}
    D3 = divided_power_hyperalgebra([("b", 0)], 6, Field(3))
    assert D3.mul((1,), (2,)) == {}
    for r in range(7):
        assert D.coproduct((r,)) == {((k,), (r - k,)): 1 for k in range(r + 1)}
        for s in range(7 - r):
            assert D.mul((r,), (s,)) == {(r + s,): binomial(r + s, r)}
            expect = Field(3)(binomial(r + s, r))
            assert D3.mul((r,), (s,)) == ({(r + s,): expect} if expect != 0 else {})


# 5 -------------------------------------------------------------------------

@C(5, "smoothness: U(g) and wedge(V) smooth up to 6; k[x]/(x^3) over F3 defect level <= 2")
def test_c05_smoothness():
    assert smoothness_check(enveloping(gl_lie(1, 1), 6)).smooth_up_to_N
    assert smoothness_check(exterior_hyperalgebra(["a", "b", "c"], 6), 6).smooth_up_to_N
    r = smoothness_check(TruncatedPolynomialHyper(Field(3), 6))
    assert not r.smooth_up_to_N
    assert r.defect_level is not None and r.defect_level <= 2


# 6 -------------------------------------------------------------------------

@C(6, "duality round trip for k[[T, theta]] at N = 4; additive law <-> divided powers")
def test_c06_duality():
    H = additive_law(("T",), ("E",), 4)
    A = from_presentation(H)
    back = dual_of_hyper(continuous_dual(A))
    assert back.dims() == A.dims() == [1, 3, 5, 7, 9]
    assert roundtrip_check(H).ok
    Cd = continuous_dual(from_presentation(additive_law(("T",), (), 4)))
    D = divided_power_hyperalgebra([("b", 0)], 4)
    assert match_tables(Cd, D, {k: (k,) for k in range(5)})
    P = present(dual_of_hyper(D))
    assert P.coproduct["b1"] == P.A.tensor_power(2).parse("b1@1 + b1@2")


# 7 -------------------------------------------------------------------------

@C(7, "HCP pipeline for GL(1|1): check_hcp, Hopf suite on B, zero eta defects")
def test_c07_hcp_pipeline():
    O_G, H = gallery_gl(1, 1)
    assert check_hcp(H).ok
    B = build_B(H)
    assert check_hopf_axioms(B.presentation()).ok
    res = eta_iso(O_G, H, B)
    assert res.report.ok
    assert all(not d for d in res.defects.values())


# 8 -------------------------------------------------------------------------

@C(8, "module pair: defining representation of GL(1|1) passes; perturbed action fails with witness")
def test_c08_module_pair():
    _, H = gallery_gl(1, 1)
    B = build_B(H)
    M, dot, tri = defining_module(1, 1, H)
    rep, _ = verify_module_pair(H, M, dot, tri, B)
    assert rep.ok
    bad = dict(tri)
    k = next(iter(bad))
    bad[k] = {a: 2 * c for a, c in bad[k].items()}
    rep, _ = verify_module_pair(H, M, dot, bad, B)
    assert not rep.ok
    assert any(r.witness for r in rep.failures())


# 9 -------------------------------------------------------------------------

@C(9, "Hopf-module engine: nu on 100 instances, dimension identity, Theta retraction on 50 instances, Xi != ret")
def test_c09_hopf_modules():
    exts = [exterior_hopf([f"w{i + 1}" for i in range(h)]) for h in (1, 2, 3)]
    for seed in range(100):
        R = exts[seed % 3]
        M = random_comodule(R, seed)
        assert M.dim <= 8
        r = nu(M)
        assert r.report.get("nu_nu_inverse").passed and r.report.get("nu_inverse_nu").passed
        HM = random_hopf_module(R, seed)
        h = sum(1 for lab in R.labels if lab != "1" and "*" not in lab)
        assert HM.dim == coinvariants(HM).dim * 2 ** h
    for seed in range(50):
        assert theta_retraction(random_surjection_data(seed)).report.get("retraction").passed
    D = xi_instance()
    assert xi_differs(theta_retraction(D), D)


# 10 ------------------------------------------------------------------------

@C(10, "group laws at N = 6; Delta^j Delta^k = binom(j+k, k) Delta^(j+k) on 100 random series")
def test_c10_group_laws():
    for H in (additive_law(("T",), (), 6), multiplicative_law(6)):
        assert check_group_law(group_law(H)).ok
        assert check_hopf_axioms(H).ok
    rng = random.Random(10)
    for _ in range(100):
        nv = rng.randint(1, 3)
        names = ["T", "U", "V"][:nv]
        A = SuperCommutativeAlgebra(QQF, names, truncation=8)
        f = A.zero()
        for _ in range(rng.randint(1, 6)):
            term = A.scalar(rng.randint(-9, 9))
            for nm in names:
                term = term * A.gen(nm) ** rng.randint(0, 3)
            f = f + term
        v = rng.choice(names)
        j, k = rng.randint(0, 4), rng.randint(0, 4)
        assert delta_k(j, v, delta_k(k, v, f)) == delta_k(j + k, v, f) * binomial(j + k, k)


# 11 ------------------------------------------------------------------------

def _twice(argv, tmp_path):
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        code = run(argv, stdout=buf)
        outs.append((code, buf.getvalue().encode()))
    return outs


@C(11, "determinism: every CLI command run twice gives byte-identical output")
def test_c11_determinism(tmp_path):
    def save(name, argv):
        buf = io.StringIO()
        assert run(argv, stdout=buf) == 0
        p = tmp_path / name
        p.write_text(buf.getvalue())
        return str(p)

    g = save("g.json", ["gallery", "gl", "1", "1"])
    h = save("h.json", ["gallery", "gl", "1", "1", "--part", "hcp"])
    add = save("add.json", ["gallery", "additive"])
    hm = save("hm.json", ["gallery", "hopf-module", "2", "--seed", "3"])
    xi = save("xi.json", ["gallery", "surjection", "xi"])
    lie = tmp_path / "lie.json"
    lie.write_text('{"kind": "lie", "basis": [["h", 0], ["e", 1]], "brackets": [["e", "e", {"h": "1"}]]}')
    commands = [
        ["gallery", "gl", "2", "1"],
        ["check-hopf", g], ["check-lie", str(lie)], ["check-hcp", h], ["build-b", h], ["eta", g, h],
        ["dualize", add, "--level", "4"], ["grouplaw", add], ["hopfmod", hm], ["hopfmod", xi],
    ]
    for argv in commands:
        (c1, o1), (c2, o2) = _twice(argv, tmp_path)
        assert c1 == c2 and o1 == o2, argv
