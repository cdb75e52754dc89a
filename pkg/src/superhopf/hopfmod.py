"""Hopf modules, the isomorphisms ``nu_M`` and the retraction data ``theta``, ``Theta``, ``Xi``.

Two kinds of base objects appear:

* finite-dimensional Hopf super-algebras stored as structure constants
  (:class:`FiniteHopf`, e.g. the exterior algebra on primitive odd
  generators), used for comodules, Hopf modules and coinvariants;
* purely even Hopf presentations (a "big" one and a "small" one with a
  Hopf map between them), used for the retraction data over a base algebra.

For a right comodule ``m -> m0 (x) m1`` we take::

    nu(p (x) m)      = m0 (x) m1 p
    nu^{-1}(m (x) p) = S(m1) p (x) m0

For a purely even base these are the familiar ``m0 (x) p m1`` and
``p S(m1) (x) m0``; writing the comodule leg on the left keeps the pair
mutually inverse over exterior algebras in any number of odd variables.
"""
from __future__ import annotations

import itertools
import random
from typing import Optional

from .core import Field, QQF, Report, SuperSpace, identity, inverse, matmul, nullspace, rank
from .superalgebra import Generator, SuperCommutativeAlgebra, SuperElement, matrix_inverse, matrix_mul, substitute
from .hopf import HopfPresentation


# ------------------------------------------------------ finite Hopf algebras


class FiniteHopf:
    """Finite-dimensional Hopf super-algebra on a labelled basis."""

    def __init__(self, field: Field, labels: list, parities: list, mul: dict, cop: dict, unit: int,
                 counit: list, antipode: dict):
        self.field = field
        self.labels = list(labels)
        self.parities = list(parities)
        self.mul = mul          # (a, b) -> {c: coef}
        self.cop = cop          # a -> {(b, c): coef}
        self.unit = unit
        self.counit = [field(x) for x in counit]
        self.antipode = antipode  # a -> {b: coef}

    @property
    def dim(self) -> int:
        return len(self.labels)


def _shuffle_sign(S: tuple, T: tuple) -> int:
    inv = sum(1 for s in S for t in T if s > t)
    return -1 if inv % 2 else 1


def exterior_hopf(names, field: Field = QQF) -> FiniteHopf:
    """``wedge(W_H)`` with primitive odd generators."""
    names = list(names)
    h = len(names)
    subsets = [S for k in range(h + 1) for S in itertools.combinations(range(h), k)]
    pos = {S: i for i, S in enumerate(subsets)}
    F = field
    mul, cop, anti = {}, {}, {}
    for S in subsets:
        for T in subsets:
            if set(S) & set(T):
                continue
            mul[(pos[S], pos[T])] = {pos[tuple(sorted(S + T))]: F(_shuffle_sign(S, T))}
        entry = {}
        for k in range(len(S) + 1):
            for J in itertools.combinations(S, k):
                K = tuple(x for x in S if x not in J)
                entry[(pos[J], pos[K])] = F(_shuffle_sign(J, K))
        cop[pos[S]] = entry
        anti[pos[S]] = {pos[S]: F(-1) if len(S) % 2 else F.one}
    labels = ["*".join(names[i] for i in S) or "1" for S in subsets]
    counit = [1 if not S else 0 for S in subsets]
    return FiniteHopf(F, labels, [len(S) % 2 for S in subsets], mul, cop, 0, counit, anti)


# ----------------------------------------------------- comodules and modules


class Comodule:
    """Right comodule: ``m_j -> sum_{a,i} coaction[a][i][j] m_i (x) e_a``."""

    def __init__(self, R: FiniteHopf, space: SuperSpace, coaction: list):
        self.R = R
        self.space = space
        self.C = coaction

    @property
    def dim(self) -> int:
        return self.space.dim

    def parity(self, i: int) -> int:
        return self.space.basis[i][1]


class HopfModuleData(Comodule):
    """Comodule plus left module ``e_a . m_j = sum action[a][i][j] m_i``."""

    def __init__(self, R: FiniteHopf, space: SuperSpace, coaction: list, action: list):
        super().__init__(R, space, coaction)
        self.L = action


def check_comodule(M: Comodule) -> Report:
    R, F, d = M.R, M.R.field, M.dim
    rep = Report()
    bad = ""
    for j in range(d):
        for i in range(d):
            val = sum((M.C[a][i][j] * R.counit[a] for a in range(R.dim)), F.zero)
            if val != (F.one if i == j else F.zero):
                bad = f"counit({M.space.names[j]})"
    rep.add("comodule_counit", not bad, bad)
    bad = ""
    for j in range(d):
        # (rho (x) id) rho = (id (x) Delta) rho, compared on m_i (x) e_b (x) e_c
        lhs, rhs = {}, {}
        for c in range(R.dim):
            for k in range(d):
                x = M.C[c][k][j]
                if x == 0:
                    continue
                for b in range(R.dim):
                    for i in range(d):
                        y = M.C[b][i][k]
                        if y != 0:
                            lhs[(i, b, c)] = lhs.get((i, b, c), F.zero) + x * y
        for a in range(R.dim):
            for i in range(d):
                x = M.C[a][i][j]
                if x == 0:
                    continue
                for (b, c), v in R.cop[a].items():
                    rhs[(i, b, c)] = rhs.get((i, b, c), F.zero) + x * v
        if {k: v for k, v in lhs.items() if v != 0} != {k: v for k, v in rhs.items() if v != 0}:
            bad = f"coassociativity({M.space.names[j]})"
            break
    rep.add("comodule_coassociativity", not bad, bad)
    bad = ""
    for a in range(R.dim):
        for i in range(d):
            for j in range(d):
                if M.C[a][i][j] != 0 and (M.parity(i) + R.parities[a]) % 2 != M.parity(j):
                    bad = f"parity({R.labels[a]},{M.space.names[j]})"
    rep.add("comodule_parity", not bad, bad)
    return rep


def check_hopf_module(M: HopfModuleData) -> Report:
    """Module axioms and ``rho(p.m) = sum (-1)^{|p2||m0|} p1 m0 (x) p2 m1``."""
    rep = check_comodule(M)
    R, F, d = M.R, M.R.field, M.dim
    L = M.L
    bad = ""
    if L[R.unit] != identity(d, F):
        bad = "unit"
    for a in range(R.dim):
        for b in range(R.dim):
            prod = matmul(L[a], L[b], F)
            expect = [[F.zero] * d for _ in range(d)]
            for c, v in R.mul.get((a, b), {}).items():
                expect = [[expect[i][j] + v * L[c][i][j] for j in range(d)] for i in range(d)]
            if prod != expect:
                bad = bad or f"associativity({R.labels[a]},{R.labels[b]})"
    rep.add("module", not bad, bad)
    bad = ""
    for a in range(R.dim):
        for j in range(d):
            lhs, rhs = {}, {}
            # rho(e_a . m_j)
            for k in range(d):
                x = L[a][k][j]
                if x == 0:
                    continue
                for c in range(R.dim):
                    for i in range(d):
                        y = M.C[c][i][k]
                        if y != 0:
                            lhs[(i, c)] = lhs.get((i, c), F.zero) + x * y
            # sum (-1)^{|a2||m0|} a1 . m0 (x) a2 m1
            for (a1, a2), v in R.cop[a].items():
                for b in range(R.dim):
                    for k in range(d):
                        y = M.C[b][k][j]
                        if y == 0:
                            continue
                        sign = -1 if R.parities[a2] and M.parity(k) else 1
                        for c, w in R.mul.get((a2, b), {}).items():
                            for i in range(d):
                                z = L[a1][i][k]
                                if z != 0:
                                    rhs[(i, c)] = rhs.get((i, c), F.zero) + v * y * w * z * sign
            if {k: v for k, v in lhs.items() if v != 0} != {k: v for k, v in rhs.items() if v != 0}:
                bad = f"compatibility({R.labels[a]},{M.space.names[j]})"
                break
        if bad:
            break
    rep.add("compatibility", not bad, bad)
    return rep


# -------------------------------------------------------------- nu maps


class NuResult:
    def __init__(self, matrix, inverse, report):
        self.matrix = matrix
        self.inverse = inverse
        self.report = report


def _rm_index(R, d):
    return lambda a, j: a * d + j


def _mr_index(R, d):
    return lambda i, c: i * R.dim + c


def nu(M: Comodule) -> NuResult:
    """``nu: R (x) M -> M (x) R`` and its inverse as matrices, with checks.

    Columns index ``e_b (x) m_j`` (position ``b*dim M + j``) on the source of
    ``nu`` and ``m_i (x) e_c`` (position ``i*dim R + c``) on its target.
    """
    R, F, d = M.R, M.R.field, M.dim
    n = R.dim * d
    rm, mr = _rm_index(R, d), _mr_index(R, d)
    rep = check_comodule(M)
    N = [[F.zero] * n for _ in range(n)]
    for b in range(R.dim):
        for j in range(d):
            for a in range(R.dim):
                for i in range(d):
                    x = M.C[a][i][j]
                    if x == 0:
                        continue
                    for c, v in R.mul.get((a, b), {}).items():
                        N[mr(i, c)][rm(b, j)] += x * v
    Ninv = [[F.zero] * n for _ in range(n)]
    for j in range(d):
        for b in range(R.dim):
            for a in range(R.dim):
                for i in range(d):
                    x = M.C[a][i][j]
                    if x == 0:
                        continue
                    for a2, s in R.antipode[a].items():
                        for c, v in R.mul.get((a2, b), {}).items():
                            Ninv[rm(c, i)][mr(j, b)] += x * s * v
    I = identity(n, F)
    rep.add("nu_nu_inverse", matmul(N, Ninv, F) == I)
    rep.add("nu_inverse_nu", matmul(Ninv, N, F) == I)
    rep.add("colinear", _nu_colinear(M, N))
    return NuResult(N, Ninv, rep)


def _nu_colinear(M: Comodule, N: list) -> bool:
    """``nu`` intertwines ``p (x) m -> sum (-1)^{|p1||m1|} p1 (x) m0 (x) m1 p2`` and ``id (x) Delta``."""
    R, F, d = M.R, M.R.field, M.dim
    rm, mr = _rm_index(R, d), _mr_index(R, d)
    for b in range(R.dim):
        for j in range(d):
            # left: coaction on R (x) M, then nu on the first two legs -> (i, c, e)
            lhs: dict = {}
            for (b1, b2), v in R.cop[b].items():
                for a in range(R.dim):
                    for k in range(d):
                        x = M.C[a][k][j]
                        if x == 0:
                            continue
                        sign = -1 if R.parities[b1] and R.parities[a] else 1
                        for e, w in R.mul.get((a, b2), {}).items():
                            for i in range(d):
                                for c in range(R.dim):
                                    y = N[mr(i, c)][rm(b1, k)]
                                    if y != 0:
                                        key = (i, c, e)
                                        lhs[key] = lhs.get(key, F.zero) + v * x * sign * w * y
            rhs: dict = {}
            for i in range(d):
                for c in range(R.dim):
                    y = N[mr(i, c)][rm(b, j)]
                    if y == 0:
                        continue
                    for (c1, c2), v in R.cop[c].items():
                        key = (i, c1, c2)
                        rhs[key] = rhs.get(key, F.zero) + y * v
            if {k: v for k, v in lhs.items() if v != 0} != {k: v for k, v in rhs.items() if v != 0}:
                return False
    return True


# ----------------------------------------------------------- coinvariants


class CoinvariantsResult:
    def __init__(self, basis: list, report: Report):
        self.basis = basis
        self.report = report

    @property
    def dim(self) -> int:
        return len(self.basis)


def coinvariants(M: Comodule) -> CoinvariantsResult:
    """``M^{co R} = {m : rho(m) = m (x) 1}``; for Hopf modules also ``R (x) M^co = M``."""
    R, F, d = M.R, M.R.field, M.dim
    rows = []
    for a in range(R.dim):
        for i in range(d):
            row = []
            for j in range(d):
                x = M.C[a][i][j]
                if a == R.unit and i == j:
                    x = x - F.one
                row.append(x)
            rows.append(row)
    basis = nullspace(rows, d, F)
    rep = Report()
    if isinstance(M, HopfModuleData):
        # p (x) m -> p . m on R (x) M^co
        cols = []
        for a in range(R.dim):
            for vec in basis:
                cols.append([sum((M.L[a][i][j] * vec[j] for j in range(d)), F.zero) for i in range(d)])
        r = rank([list(row) for row in zip(*cols)], len(cols), F) if cols else 0
        rep.add("fundamental_theorem", r == d and len(cols) == d, "" if r == d else f"rank {r} of {d}")
    return CoinvariantsResult(basis, rep)


# --------------------------------------------------------- random instances


def _random_invertible(rng, n: int, F: Field, pars: list) -> list:
    """Random even (parity preserving) invertible matrix."""
    while True:
        M = [[F(rng.randint(-2, 2)) if pars[i] == pars[j] else F.zero for j in range(n)] for i in range(n)]
        if rank(M, n, F) == n:
            return M


def _conjugate(P, Pinv, mats, F):
    return [matmul(matmul(P, X, F), Pinv, F) for X in mats]


def free_hopf_module(R: FiniteHopf, npars: list) -> HopfModuleData:
    """``R (x) N`` with ``R`` acting on the left and ``rho(p (x) n) = sum (-1)^{|p2||n|} p1 (x) n (x) p2``."""
    F = R.field
    dN = len(npars)
    d = R.dim * dN
    idx = lambda a, t: a * dN + t
    space = SuperSpace(tuple((f"{R.labels[a]}|n{t + 1}", (R.parities[a] + npars[t]) % 2)
                             for a in range(R.dim) for t in range(dN)))
    C = [[[F.zero] * d for _ in range(d)] for _ in range(R.dim)]
    L = [[[F.zero] * d for _ in range(d)] for _ in range(R.dim)]
    for a in range(R.dim):
        for t in range(dN):
            for (a1, a2), v in R.cop[a].items():
                sign = -1 if R.parities[a2] and npars[t] else 1
                C[a2][idx(a1, t)][idx(a, t)] += v * sign
            for b in range(R.dim):
                for c, v in R.mul.get((b, a), {}).items():
                    L[b][idx(c, t)][idx(a, t)] += v
    return HopfModuleData(R, space, C, L)


def random_hopf_module(R: FiniteHopf, seed: int, max_dim: int = 8) -> HopfModuleData:
    """A free Hopf module ``R (x) N`` transported by a random even change of basis."""
    rng = random.Random(seed)
    F = R.field
    top = max(1, max_dim // R.dim)
    npars = [rng.randint(0, 1) for _ in range(rng.randint(1, top))]
    M = free_hopf_module(R, npars)
    pars = [p for _, p in M.space.basis]
    P = _random_invertible(rng, M.dim, F, pars)
    Pinv = inverse(P, F)
    return HopfModuleData(R, M.space, _conjugate(P, Pinv, M.C, F), _conjugate(P, Pinv, M.L, F))


def random_comodule(R: FiniteHopf, seed: int, max_dim: int = 8) -> Comodule:
    """The comodule of a random Hopf module, possibly plus a trivial summand."""
    rng = random.Random(seed)
    F = R.field
    H = random_hopf_module(R, rng.randrange(1 << 30), max_dim)
    extra = rng.randint(0, max(0, max_dim - H.dim))
    epars = [rng.randint(0, 1) for _ in range(extra)]
    d = H.dim + extra
    space = SuperSpace(H.space.basis + tuple((f"t{k + 1}", p) for k, p in enumerate(epars)))
    C = []
    for a in range(R.dim):
        X = [[F.zero] * d for _ in range(d)]
        for i in range(H.dim):
            for j in range(H.dim):
                X[i][j] = H.C[a][i][j]
        if a == R.unit:
            for k in range(H.dim, d):
                X[k][k] = F.one
        C.append(X)
    pars = [p for _, p in space.basis]
    P = _random_invertible(rng, d, F, pars)
    return Comodule(R, space, _conjugate(P, inverse(P, F), C, F))


def trivial_comodule(R: FiniteHopf, space: SuperSpace) -> Comodule:
    F = R.field
    d = space.dim
    C = [identity(d, F) if a == R.unit else [[F.zero] * d for _ in range(d)] for a in range(R.dim)]
    return Comodule(R, space, C)


def regular_hopf_module(R: FiniteHopf) -> HopfModuleData:
    """``R`` itself with multiplication and coproduct."""
    M = free_hopf_module(R, [0])
    space = SuperSpace(tuple((R.labels[a], R.parities[a]) for a in range(R.dim)))
    return HopfModuleData(R, space, M.C, M.L)


# ------------------------------------------------------ retraction data


def borel_presentation(n: int, field: Field = QQF, letter: str = "a") -> HopfPresentation:
    """Upper triangular ``n x n`` matrices with invertible diagonal."""
    gens = []
    names = {}
    for i in range(n):
        for j in range(i, n):
            nm = f"{letter}{i + 1}{j + 1}"
            names[(i, j)] = nm
            gens.append(Generator(nm, 0, i == j))
    A = SuperCommutativeAlgebra(field, gens)
    cop = {}
    for (i, j), nm in names.items():
        cop[nm] = sum((A.tensor(A.gen(names[(i, k)]), A.gen(names[(k, j)])) for k in range(i, j + 1)),
                      A.tensor_power(2).zero())
    cou = {nm: (1 if i == j else 0) for (i, j), nm in names.items()}
    Z = [[A.gen(names[(i, j)]) if j >= i else A.zero() for j in range(n)] for i in range(n)]
    Zi = matrix_inverse(Z, A)
    anti = {nm: Zi[i][j] for (i, j), nm in names.items()}
    return HopfPresentation(A, cop, cou, anti, name=f"B{n}")


def torus_presentation(n: int, field: Field = QQF, letter: str = "t") -> HopfPresentation:
    A = SuperCommutativeAlgebra(field, [Generator(f"{letter}{i + 1}", 0, True) for i in range(n)])
    cop = {g: A.tensor(A.gen(g), A.gen(g)) for g in A.names}
    anti = {g: A.gen(g) ** -1 for g in A.names}
    return HopfPresentation(A, cop, {g: 1 for g in A.names}, anti, name=f"T{n}")


class SurjectionData:
    """``0 -> Z -> W -> W_H -> 0`` with coactions and base-extension maps.

    ``K`` is the coaction matrix of ``W`` over the big presentation
    (``w_j -> sum w_i (x) K[i][j]``); ``pi`` maps the big presentation to
    the small one on generators; ``incl`` (``dim W x dim Z``), ``s`` and
    ``ret`` are scalar matrices; ``sigma`` and ``varrho`` send generators
    of the big and the small presentation into ``base``.
    """

    def __init__(self, big: HopfPresentation, small: HopfPresentation, pi: dict, W: SuperSpace, K: list,
                 incl: list, s: list, ret: list, base: SuperCommutativeAlgebra, sigma: dict, varrho: dict):
        self.big, self.small, self.pi = big, small, pi
        self.W, self.K = W, K
        self.incl, self.s, self.ret = incl, s, ret
        self.base, self.sigma, self.varrho = base, sigma, varrho
        self.field = big.field


class ThetaResult:
    def __init__(self, theta, Theta, Xi, report, Zc):
        self.theta = theta
        self.Theta = Theta
        self.Xi = Xi
        self.report = report
        self.Zc = Zc


def _scalar_matrix(M: list, alg: SuperCommutativeAlgebra) -> list:
    return [[alg.scalar(x) for x in row] for row in M]


def _map_matrix(M: list, alg: SuperCommutativeAlgebra, images: dict) -> list:
    return [[substitute(x, alg, images) for x in row] for row in M]


def theta_retraction(D: SurjectionData) -> ThetaResult:
    """``theta = S(C_Z) ret Kbar``, ``Theta = varrho(theta) sigma(S(K))``, ``Xi = varrho(C_Z) Theta``."""
    F = D.field
    big, small, base = D.big, D.small, D.base
    n, k = len(D.incl), len(D.incl[0]) if D.incl else 0
    rep = Report()
    if rank(D.s, n, F) != len(D.s):
        raise ValueError("s is not surjective")
    sI = matmul(D.s, D.incl, F)
    rI = matmul(D.ret, D.incl, F)
    rep.add("exact", all(x == 0 for row in sI for x in row) and rank(D.incl, k, F) == k
            and len(D.s) + k == n)
    rep.add("retraction_of_inclusion", rI == identity(k, F))
    As = small.A
    Kbar = _map_matrix(D.K, As, D.pi)
    # Z is a subcomodule: Kbar incl = incl Zc with Zc = ret Kbar incl
    Zc = matrix_mul(matrix_mul(_scalar_matrix(D.ret, As), Kbar, As), _scalar_matrix(D.incl, As), As)
    lhs = matrix_mul(Kbar, _scalar_matrix(D.incl, As), As)
    rhs = matrix_mul(_scalar_matrix(D.incl, As), Zc, As)
    if any(not (lhs[i][j] == rhs[i][j]) for i in range(n) for j in range(k)):
        raise ValueError("incompatible coactions: Z is not a subcomodule of W")
    # the big coaction must induce the small one through pi: it does by construction of Kbar
    SZc = [[small.S(x) for x in row] for row in Zc]
    theta = matrix_mul(matrix_mul(SZc, _scalar_matrix(D.ret, As), As), Kbar, As)
    # square: nu_Z theta = (ret (x) id) nu_W
    sq = matrix_mul(Zc, theta, As)
    rk = matrix_mul(_scalar_matrix(D.ret, As), Kbar, As)
    rep.add("square", all(sq[i][j] == rk[i][j] for i in range(k) for j in range(n)))
    theta_t = _map_matrix(theta, base, D.varrho)
    SK = [[big.S(x) for x in row] for row in D.K]
    kappa = _map_matrix(D.K, base, D.sigma)
    kappa_inv = _map_matrix(SK, base, D.sigma)
    ok_inv = matrix_mul(kappa, kappa_inv, base)
    rep.add("kappa_invertible", all(ok_inv[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n)))
    Theta = matrix_mul(theta_t, kappa_inv, base)
    # retraction identity: Theta o kappa restricted to base (x) Z is the identity
    restr = matrix_mul(matrix_mul(Theta, kappa, base), _scalar_matrix(D.incl, base), base)
    rep.add("retraction", all(restr[i][j] == (1 if i == j else 0) for i in range(k) for j in range(k)))
    Xi = matrix_mul(_map_matrix(Zc, base, D.varrho), Theta, base)
    return ThetaResult(theta, Theta, Xi, rep, Zc)


def xi_differs(res: ThetaResult, D: SurjectionData) -> bool:
    base = D.base
    R = _scalar_matrix(D.ret, base)
    return any(not (res.Xi[i][j] == R[i][j]) for i in range(len(R)) for j in range(len(R[0])))


def _base_algebra(field: Field) -> SuperCommutativeAlgebra:
    return SuperCommutativeAlgebra(field, [Generator("u1", 0, True), Generator("u2", 0, True), Generator("c", 0)])


def _random_unit(rng, base):
    return base.scalar(rng.choice([1, 2, -1, 3])) * base.gen("u1") ** rng.randint(-1, 1) * base.gen("u2") ** rng.randint(-1, 1)


def _random_poly(rng, base):
    out = base.zero()
    for _ in range(rng.randint(0, 2)):
        out = out + base.scalar(rng.randint(-2, 2)) * base.gen("c") ** rng.randint(0, 2) * base.gen("u1") ** rng.randint(0, 1)
    return out


def random_surjection_data(seed: int, field: Field = QQF) -> SurjectionData:
    """Borel-type coaction on ``W`` (dim 2 or 3) moved by a random change of basis."""
    rng = random.Random(seed)
    F = field
    n = rng.choice([2, 3])
    k = rng.randint(1, n - 1)
    big = borel_presentation(n, F)
    Ab = big.A
    use_torus = rng.random() < 0.5
    if use_torus:
        small = torus_presentation(n, F)
        As = small.A
        pi = {f"a{i + 1}{j + 1}": (As.gen(f"t{i + 1}") if i == j else As.zero())
              for i in range(n) for j in range(i, n)}
    else:
        small = big
        As = Ab
        pi = {g: Ab.gen(g) for g in Ab.names}
    base = _base_algebra(F)
    sigma = {}
    for i in range(n):
        for j in range(i, n):
            sigma[f"a{i + 1}{j + 1}"] = _random_unit(rng, base) if i == j else _random_poly(rng, base)
    if use_torus:
        varrho = {f"t{i + 1}": _random_unit(rng, base) for i in range(n)}
    else:
        varrho = {}
        for i in range(n):
            for j in range(i, n):
                varrho[f"a{i + 1}{j + 1}"] = _random_unit(rng, base) if i == j else _random_poly(rng, base)
    P = _random_invertible(rng, n, F, [1] * n)
    Pinv = inverse(P, F)
    G = [[Ab.gen(f"a{i + 1}{j + 1}") if j >= i else Ab.zero() for j in range(n)] for i in range(n)]
    K = matrix_mul(matrix_mul(_scalar_matrix(P, Ab), G, Ab), _scalar_matrix(Pinv, Ab), Ab)
    incl = [[P[i][j] for j in range(k)] for i in range(n)]
    X = [[F(rng.randint(-2, 2)) for _ in range(n - k)] for _ in range(k)]
    left = [[(F.one if i == j else F.zero) for j in range(k)] + X[i] for i in range(k)]
    ret = matmul(left, Pinv, F)
    s = [row for row in matmul([[F.zero] * k + [(F.one if i == j else F.zero) for j in range(n - k)]
                                for i in range(n - k)], Pinv, F)]
    W = SuperSpace(tuple((f"w{i + 1}", 1) for i in range(n)))
    return SurjectionData(big, small, pi, W, K, incl, s, ret, base, sigma, varrho)


def xi_instance(field: Field = QQF) -> SurjectionData:
    """Two-dimensional ``W`` over the Borel group with ``varrho pi != sigma``."""
    F = field
    big = borel_presentation(2, F)
    small = torus_presentation(2, F)
    As = small.A
    base = _base_algebra(F)
    pi = {"a11": As.gen("t1"), "a12": As.zero(), "a22": As.gen("t2")}
    sigma = {"a11": base.gen("u1"), "a12": base.gen("c"), "a22": base.gen("u2")}
    varrho = {"t1": base.gen("u1"), "t2": base.gen("u2")}
    Ab = big.A
    K = [[Ab.gen("a11"), Ab.gen("a12")], [Ab.zero(), Ab.gen("a22")]]
    W = SuperSpace((("w1", 1), ("w2", 1)))
    return SurjectionData(big, small, pi, W, K, [[F.one], [F.zero]], [[F.zero, F.one]], [[F.one, F.zero]],
                          base, sigma, varrho)
