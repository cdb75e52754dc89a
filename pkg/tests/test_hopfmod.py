import pytest
from hypothesis import given, strategies as st

from superhopf.core import QQF, SuperSpace, identity, matmul
from superhopf.hopfmod import (
    Comodule, HopfModuleData, SurjectionData, borel_presentation, check_comodule, check_hopf_module, coinvariants,
    exterior_hopf, free_hopf_module, nu, random_comodule, random_hopf_module, random_surjection_data,
    regular_hopf_module, theta_retraction, torus_presentation, trivial_comodule, xi_differs, xi_instance,
)

seeds = st.integers(0, 10_000)
R1, R2, R3 = (exterior_hopf([f"w{i + 1}" for i in range(h)]) for h in (1, 2, 3))


def _literal_nu(M):
    """Matrices of p (x) m -> m0 (x) p m1 and m (x) p -> p S(m1) (x) m0, written out independently."""
    R, F, d = M.R, M.R.field, M.dim
    n = R.dim * d
    N = [[F.zero] * n for _ in range(n)]
    Ninv = [[F.zero] * n for _ in range(n)]
    for b in range(R.dim):
        for j in range(d):
            for a in range(R.dim):
                for i in range(d):
                    x = M.C[a][i][j]
                    if x == 0:
                        continue
                    for c, v in R.mul.get((b, a), {}).items():
                        N[i * R.dim + c][b * d + j] += x * v
                    for a2, s in R.antipode[a].items():
                        for c, v in R.mul.get((b, a2), {}).items():
                            Ninv[c * d + i][j * R.dim + b] += x * s * v
    return N, Ninv


def test_exterior_hopf_tables():
    assert R2.labels == ["1", "w1", "w2", "w1*w2"]
    assert R2.mul[(2, 1)] == {3: -1}
    assert R2.cop[3] == {(0, 3): 1, (1, 2): 1, (2, 1): -1, (3, 0): 1}


@pytest.mark.parametrize("R", [R1, R2])
def test_trivial_coaction_gives_plain_swap(R):
    M = trivial_comodule(R, SuperSpace.of(["m1"], ["m2"]))
    r = nu(M)
    d = M.dim
    swap = [[1 if (row // R.dim, row % R.dim) == (col % d, col // d) else 0 for col in range(R.dim * d)]
            for row in range(R.dim * d)]
    assert r.matrix == swap and r.report.ok
    assert coinvariants(M).dim == d


@given(seeds)
def test_nu_inverse_one_odd_variable(seed):
    M = random_comodule(R1, seed)
    r = nu(M)
    assert r.report.ok
    # with one odd variable the formula agrees with the literal one
    assert (r.matrix, r.inverse) == _literal_nu(M)


@given(seeds, st.sampled_from([R2, R3]))
def test_nu_inverse_several_odd_variables(seed, R):
    M = random_comodule(R, seed)
    r = nu(M)
    n = R.dim * M.dim
    assert matmul(r.matrix, r.inverse, QQF) == identity(n, QQF)
    assert matmul(r.inverse, r.matrix, QQF) == identity(n, QQF)
    assert r.report.get("colinear").passed


def test_literal_formulas_are_not_inverse_for_two_odd_variables():
    M = regular_hopf_module(R2)
    N, Ninv = _literal_nu(M)
    assert matmul(N, Ninv, QQF) != identity(R2.dim * M.dim, QQF)


@given(seeds, st.sampled_from([R1, R2, R3]))
def test_random_hopf_modules_satisfy_fundamental_theorem(seed, R):
    M = random_hopf_module(R, seed)
    assert M.dim <= 8
    assert check_hopf_module(M).ok
    co = coinvariants(M)
    assert co.report.ok
    assert M.dim == co.dim * R.dim


def test_regular_module_coinvariants_are_scalars():
    co = coinvariants(regular_hopf_module(R2))
    assert co.basis == [[1, 0, 0, 0]]


def test_free_module_recovers_structure_constants():
    # R (x) M^co with the free structure reproduces the original tables
    M = free_hopf_module(R2, [0, 1])
    co = coinvariants(M)
    F = free_hopf_module(R2, [0, 1])
    assert co.dim == 2 and (F.C, F.L) == (M.C, M.L)


def test_broken_comodule_is_reported():
    M = random_comodule(R1, 7)
    C = [[row[:] for row in X] for X in M.C]
    C[0][0][0] += 1
    rep = check_comodule(Comodule(R1, M.space, C))
    assert not rep.get("comodule_counit").passed
    assert not nu(Comodule(R1, M.space, C)).report.ok


def test_broken_compatibility_is_reported():
    M = random_hopf_module(R1, 3)
    L = [[row[:] for row in X] for X in M.L]
    L[1] = [[2 * x for x in row] for row in L[1]]
    assert not check_hopf_module(HopfModuleData(R1, M.space, M.C, L)).ok


@given(seeds)
def test_theta_retraction_random(seed):
    D = random_surjection_data(seed)
    res = theta_retraction(D)
    assert res.report.ok


def test_xi_differs_from_ret():
    D = xi_instance()
    res = theta_retraction(D)
    assert res.report.ok and xi_differs(res, D)
    base = D.base
    assert res.Xi == [[base.one(), base.parse("-u2^-1*c")]]


def test_xi_equals_ret_for_compatible_maps():
    D = xi_instance()
    D.sigma = dict(D.sigma, a12=D.base.zero())
    res = theta_retraction(D)
    assert res.report.ok and not xi_differs(res, D)


def test_trivial_quotient():
    big = borel_presentation(2)
    A = big.A
    K = [[A.gen("a11"), A.gen("a12")], [A.zero(), A.gen("a22")]]
    D0 = xi_instance()
    D = SurjectionData(big, big, {g: A.gen(g) for g in A.names}, SuperSpace((("w1", 1), ("w2", 1))), K,
                       identity(2, QQF), [], identity(2, QQF), D0.base,
                       {"a11": D0.base.gen("u1"), "a12": D0.base.gen("c"), "a22": D0.base.gen("u2")},
                       {"a11": D0.base.gen("u2"), "a12": D0.base.zero(), "a22": D0.base.gen("u1")})
    assert theta_retraction(D).report.ok


def test_theta_errors():
    D = xi_instance()
    D.s = [[0, 0]]
    with pytest.raises(ValueError, match="surjective"):
        theta_retraction(D)
    D = xi_instance()
    # over the Borel itself span(w2) is not a subcomodule
    D.small, D.pi, D.varrho = D.big, {g: D.big.A.gen(g) for g in D.big.A.names}, D.sigma
    D.incl, D.s, D.ret = [[0], [1]], [[1, 0]], [[0, 1]]
    with pytest.raises(ValueError, match="incompatible"):
        theta_retraction(D)
