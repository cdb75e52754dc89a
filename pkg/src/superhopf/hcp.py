"""Algebraic Harish-Chandra pairs and the Hopf super-algebra they generate.

A pair is given by a purely even Hopf presentation ``O_F``, a purely odd
space ``V`` with a left ``O_F``-coaction ``v -> sum R[v][u] (x) u`` and a
symmetric bracket ``V x V -> Lie(F)``.  Conventions:

* ``Lie(F)`` has one basis vector per non-inverse generator of ``O_F``,
  the epsilon-derivation dual to it, and carries the same name.
* ``D = U(Lie F)`` pairs with ``O_F`` without signs (see :mod:`hopf`).
* ``v <| x = <x, R[v][u]> u`` is the right action of ``D`` on ``V``.
* ``C = D (x) wedge(V)`` is realized as ``U(Lie F + V)`` with the letters of
  ``Lie F`` ordered first, so a PBW key splits as ``(d, S)``; straightening
  applies ``v x = x v + v <| x`` and ``v w = -w v + [v, w]``.
* ``B = Hom_D(C, O_F)`` is stored as ``O_F (x) wedge(W)`` where the odd
  generator ``w_u`` (named like ``u``) is the functional dual to ``u`` and a
  map ``p`` corresponds to ``sum_S p(v_S) w_S``.
"""
from __future__ import annotations

import itertools
from typing import Optional

from .core import Field, QQF, Report
from .superalgebra import (Generator, SuperCommutativeAlgebra, SuperElement, NotInvertible, determinant,
                           format_element, invert, matrix_inverse, matrix_mul, substitute)
from .hopf import HopfPresentation, PairingSpec, check_hopf_axioms, place_legs
from .hyper import EnvelopingAlgebra, LieSuperAlgebra, ad_r


def transfer(a: SuperElement, target: SuperCommutativeAlgebra) -> SuperElement:
    """Move an element between algebras that share generator names."""
    if a.alg is target:
        return a
    src = a.alg
    pos = [target.index[nm] for nm in src.names]
    out = {}
    for key, c in a.terms.items():
        z = [0] * target.n
        for i, e in enumerate(key):
            if e:
                z[pos[i]] = e
        out[tuple(z)] = c
    return target.element(out)


# ---------------------------------------------------------- affine groups


class AffineGroupData:
    """A purely even Hopf presentation together with ``Lie(F)``, ``D`` and the pairing."""

    def __init__(self, O_F: HopfPresentation, N: int = 4):
        A = O_F.A
        if A.odd_positions:
            raise ValueError("O_F must be purely even")
        self.O_F = O_F
        self.A = A
        self.field = A.field
        if self.field.characteristic != 0:
            raise ValueError("Harish-Chandra pairs are handled in characteristic 0")
        self.names = [g for g in A.names if A.index[g] not in A.relation_gens]
        self.index = {g: i for i, g in enumerate(self.names)}
        seeds = {((i,), g): 1 for i, g in enumerate(self.names)}
        # the pairing only needs D's words and parities, so bootstrap it on an abelian D
        abel = EnvelopingAlgebra(LieSuperAlgebra(self.field, [(g, 0) for g in self.names], {}), 1)
        self.pairing = PairingSpec(abel, O_F, seeds)
        self.lie = LieSuperAlgebra(self.field, [(g, 0) for g in self.names], self._brackets())
        self.D = EnvelopingAlgebra(self.lie, N)
        self.pairing = PairingSpec(self.D, O_F, seeds)
        self._ad_cache: dict = {}

    def pair(self, d_key: tuple, p: SuperElement):
        """``<d, p>`` for a PBW key of ``D``."""
        return self.O_F.eps(self.act(d_key, p))

    def act(self, d_key: tuple, p: SuperElement) -> SuperElement:
        """``d |> p = p_(1) <d, p_(2)>``."""
        if not d_key:
            return p
        return self.pairing.act_basis(d_key, p)

    def _brackets(self) -> dict:
        F, A = self.field, self.A
        br = {}
        for i, j in itertools.permutations(range(len(self.names)), 2):
            out = {}
            for k, h in enumerate(self.names):
                val = F.zero
                for c, (k1, k2) in A.split_legs(self.O_F.coproduct[h], 2):
                    m1, m2 = A.monomial(k1), A.monomial(k2)
                    val += c * (self.pair((i,), m1) * self.pair((j,), m2) - self.pair((j,), m1) * self.pair((i,), m2))
                if val != 0:
                    out[k] = val
            if out:
                br[(i, j)] = out
        return br

    def adjoint_coaction(self, i: int) -> dict:
        """``x_i -> sum_j A[i][j] (x) x_j`` with ``A[i][j] = <x_i, g_(2)> S(g_(1)) g_(3)``."""
        if i in self._ad_cache:
            return self._ad_cache[i]
        A, H = self.A, self.O_F
        out = {}
        for j, g in enumerate(self.names):
            val = A.zero()
            for c, (k1, k2, k3) in A.split_legs(H.iterated_coproduct(A.gen(g), 3), 3):
                e = self.pair((i,), A.monomial(k2))
                if e != 0:
                    val = val + H.S(A.monomial(k1)) * A.monomial(k3) * (c * e)
            if not val.is_zero():
                out[j] = val
        self._ad_cache[i] = out
        return out

    def coact_D(self, key: tuple) -> dict:
        """Coaction on a PBW monomial of ``D`` as ``{D key: O_F element}``."""
        state = {(): self.A.one()}
        for letter in key:
            nxt: dict = {}
            for k, r in state.items():
                for j, a in self.adjoint_coaction(letter).items():
                    for k2, c in self.D.normal_form(k + (j,)).items():
                        nxt[k2] = nxt.get(k2, self.A.zero()) + r * a * c
            state = {k: v for k, v in nxt.items() if not v.is_zero()}
        return state


def check_affine(Fd: AffineGroupData, level: int = 2) -> Report:
    """Hopf axioms of ``O_F``, the coaction on ``D`` against the pairing, and ``ad_r`` against the coaction."""
    rep = Report()
    rep.extend(check_hopf_axioms(Fd.O_F), "O_F:")
    A, H, D = Fd.A, Fd.O_F, Fd.D
    keys = [k for k in D.basis if 1 <= len(k) <= level]
    gens = list(A.names)
    bad = ""
    for a in keys:
        co = Fd.coact_D(a)
        for g in gens:
            p = A.gen(g)
            lhs = A.zero()
            for b, r in co.items():
                v = Fd.pair(b, p)
                if v != 0:
                    lhs = lhs + r * v
            rhs = A.zero()
            for c, (k1, k2, k3) in A.split_legs(H.iterated_coproduct(p, 3), 3):
                e = Fd.pair(a, A.monomial(k2))
                if e != 0:
                    rhs = rhs + H.S(A.monomial(k1)) * A.monomial(k3) * (c * e)
            if not (lhs == rhs):
                bad = f"coaction_pairing({D.label(a)},{g})"
                break
        if bad:
            break
    rep.add("coaction_pairing", not bad, bad)
    bad = ""
    for a in keys:
        for b in keys:
            lhs = ad_r(D, {a: Fd.field.one}, {b: Fd.field.one})
            rhs: dict = {}
            for b0, r in Fd.coact_D(b).items():
                v = Fd.pair(a, r)
                if v != 0:
                    rhs[b0] = rhs.get(b0, Fd.field.zero) + v
            rhs = {k: v for k, v in rhs.items() if v != 0}
            if lhs != rhs:
                bad = f"adjoint_pairing({D.label(a)},{D.label(b)})"
                break
        if bad:
            break
    rep.add("adjoint_pairing", not bad, bad)
    return rep


# -------------------------------------------------------------- HCP data


class HCPData:
    """``(F, V)`` with coaction matrix ``R`` and bracket ``V x V -> Lie(F)``."""

    def __init__(self, F: AffineGroupData, odd: list, coaction: dict, bracket: dict):
        self.F = F
        self.field = F.field
        self.odd = list(odd)
        if len(set(self.odd)) != len(self.odd):
            raise ValueError("duplicate odd basis names")
        clash = set(self.odd) & set(F.names)
        if clash:
            raise ValueError(f"names shared by V and Lie(F): {sorted(clash)}")
        self.vindex = {v: i for i, v in enumerate(self.odd)}
        A = F.A
        self.R = []
        for v in self.odd:
            row = {}
            for val, u in coaction.get(v, []):
                if u not in self.vindex:
                    raise ValueError(f"coaction of {v} uses unknown vector {u}")
                e = val if isinstance(val, SuperElement) else A.parse(str(val))
                e = transfer(e, A)
                if e.terms and (not e.is_homogeneous() or e.parity() != 0):
                    raise ValueError(f"parity violation in the coaction of {v}")
                j = self.vindex[u]
                row[j] = row.get(j, A.zero()) + e
            self.R.append({j: e for j, e in row.items() if not e.is_zero()})
        self.br = {}
        for (v, w), comb in bracket.items():
            if v not in self.vindex or w not in self.vindex:
                raise ValueError(f"bracket on unknown vectors ({v},{w})")
            clean = {}
            for x, c in comb.items():
                if x not in F.index:
                    raise ValueError(f"parity violation: bracket [{v},{w}] must lie in Lie(F), got {x}")
                c = self.field(c)
                if c != 0:
                    clean[F.index[x]] = c
            if clean:
                self.br[(self.vindex[v], self.vindex[w])] = clean

    @property
    def n(self) -> int:
        return len(self.odd)

    def bracket(self, i: int, j: int) -> dict:
        return self.br.get((i, j), {})

    def act_right(self, i: int, d_key: tuple) -> dict:
        """``v_i <| d`` as ``{j: scalar}``."""
        out = {}
        for j, r in self.R[i].items():
            c = self.F.pair(d_key, r)
            if c != 0:
                out[j] = c
        return out

    def total_lie(self) -> LieSuperAlgebra:
        """``Lie(F) + V`` with ``[v, x] = v <| x``."""
        r = len(self.F.names)
        basis = [(g, 0) for g in self.F.names] + [(v, 1) for v in self.odd]
        br = {k: dict(v) for k, v in self.F.lie.br.items()}
        for i in range(self.n):
            for x in range(r):
                val = {r + j: c for j, c in self.act_right(i, (x,)).items()}
                if val:
                    br[(r + i, x)] = val
                    br[(x, r + i)] = {k: -c for k, c in val.items()}
        for (i, j), val in self.br.items():
            br[(r + i, r + j)] = dict(val)
        return LieSuperAlgebra(self.field, basis, br)


def check_hcp(H: HCPData) -> Report:
    """Comodule axioms, symmetry of the bracket, ``v <| [v, v] = 0`` by polarization, and equivariance."""
    rep = Report()
    F, A, O_F = H.F, H.F.A, H.F.O_F
    A2 = A.tensor_power(2)
    n = H.n
    # counit
    bad = ""
    for i in range(n):
        for j in range(n):
            val = O_F.eps(H.R[i].get(j, A.zero()))
            if val != (F.field.one if i == j else F.field.zero):
                bad = f"counit({H.odd[i]})"
                break
        if bad:
            break
    rep.add("comodule_counit", not bad, bad)
    # coassociativity
    bad = ""
    for i in range(n):
        for j in range(n):
            lhs = O_F.Delta(H.R[i].get(j, A.zero()))
            rhs = A2.zero()
            for k, r in H.R[i].items():
                if j in H.R[k]:
                    rhs = rhs + A.tensor(r, H.R[k][j])
            if not (lhs == rhs):
                bad = f"coassociativity({H.odd[i]},{H.odd[j]})"
                break
        if bad:
            break
    rep.add("comodule_coassociativity", not bad, bad)
    # symmetry
    bad = ""
    for i in range(n):
        for j in range(n):
            if H.bracket(i, j) != H.bracket(j, i):
                bad = f"bracket_symmetric({H.odd[i]},{H.odd[j]})"
                break
        if bad:
            break
    rep.add("bracket_symmetric", not bad, bad)
    # v <| [v, v] = 0 for v = sum l_i v_i, coefficient of each cubic monomial in l
    bad = ""
    for trip in itertools.combinations_with_replacement(range(n), 3):
        tot: dict = {}
        for a, b, c in set(itertools.permutations(trip)):
            for x, cx in H.bracket(b, c).items():
                for u, cu in H.act_right(a, (x,)).items():
                    tot[u] = tot.get(u, F.field.zero) + cx * cu
        if any(v != 0 for v in tot.values()):
            bad = "self_bracket_action(" + ",".join(H.odd[t] for t in trip) + ")"
            break
    rep.add("self_bracket_action", not bad, bad)
    # equivariance: Ad([v, w]) = sum R[v][v'] R[w][w'] [v', w']
    bad = ""
    for i in range(n):
        for j in range(n):
            lhs: dict = {}
            for x, c in H.bracket(i, j).items():
                for y, a in F.adjoint_coaction(x).items():
                    lhs[y] = lhs.get(y, A.zero()) + a * c
            rhs: dict = {}
            for i2, r1 in H.R[i].items():
                for j2, r2 in H.R[j].items():
                    for y, c in H.bracket(i2, j2).items():
                        rhs[y] = rhs.get(y, A.zero()) + r1 * r2 * c
            keys = set(lhs) | set(rhs)
            if any(not (lhs.get(y, A.zero()) == rhs.get(y, A.zero())) for y in keys):
                bad = f"equivariance({H.odd[i]},{H.odd[j]})"
                break
        if bad:
            break
    rep.add("equivariance", not bad, bad)
    return rep


# ------------------------------------------------------------------ C


class PairAlgebra(EnvelopingAlgebra):
    """``C = D (x) wedge(V)`` with PBW keys ``d + S`` (letters of ``Lie F`` first)."""

    flavor = "pair"

    def __init__(self, H: HCPData, N: int):
        super().__init__(H.total_lie(), N)
        self.H = H
        self.r = len(H.F.names)

    def split(self, key: tuple):
        d = tuple(i for i in key if i < self.r)
        S = tuple(i - self.r for i in key if i >= self.r)
        return d, S

    def odd_key(self, S) -> tuple:
        return tuple(self.r + i for i in S)


def build_C(H: HCPData, N: Optional[int] = None) -> PairAlgebra:
    """The hyper-super-algebra generated by ``D`` and ``V`` subject to the pair relations."""
    if N is None:
        N = 2 * H.n + 2
    return PairAlgebra(H, N)


def check_C_relations(C: PairAlgebra, level: int = 2) -> Report:
    """``v a = a_(1) (v <| a_(2))`` for PBW ``a`` up to ``level`` and ``v w + w v = [v, w]``."""
    H = C.H
    F = C.field
    rep = Report()
    bad = ""
    dkeys = [k for k in C.basis if len(k) <= level and all(i < C.r for i in k)]
    for i in range(H.n):
        v = C.r + i
        for a in dkeys:
            lhs = C.normal_form((v,) + a)
            rhs: dict = {}
            for (a1, a2), c in C.coproduct(a).items():
                for j, cj in H.act_right(i, a2).items():
                    rhs = C.add(rhs, C.normal_form(a1 + (C.r + j,)), c * cj)
            if C.add(lhs, rhs, -1):
                bad = f"va({H.odd[i]},{C.label(a)})"
                break
        if bad:
            break
    rep.add("C:va", not bad, bad)
    bad = ""
    for i in range(H.n):
        for j in range(H.n):
            lhs = C.add(C.normal_form((C.r + i, C.r + j)), C.normal_form((C.r + j, C.r + i)))
            rhs = {(x,): c for x, c in H.bracket(i, j).items()}
            if C.add(lhs, rhs, -1):
                bad = f"vw({H.odd[i]},{H.odd[j]})"
                break
        if bad:
            break
    rep.add("C:vw", not bad, bad)
    return rep


# ------------------------------------------------------------------ B


def _subsets(n: int) -> list:
    return [S for k in range(n + 1) for S in itertools.combinations(range(n), k)]


class BHopf:
    """``B = Hom_D(C, O_F)`` on the carrier ``O_F (x) wedge(W)``."""

    def __init__(self, H: HCPData, C: Optional[PairAlgebra] = None):
        self.H = H
        self.F = H.F
        self.C = C or build_C(H)
        AF = self.F.A
        self.AF = AF
        self.nF = AF.n
        gens = [Generator(g.name, 0, g.invertible, None) for g in AF.generators]
        gens += [Generator(v, 1) for v in H.odd]
        rels = {AF.names[d]: {key + (0,) * H.n: c for key, c in qterms.items()}
                for d, _, _, _, qterms in AF.relations}
        self.A = SuperCommutativeAlgebra(AF.field, gens, None, _relation_terms=rels)
        self.subsets = _subsets(H.n)
        self._coact_cache: dict = {}

    # -------------------------------------------------------- carrier maps

    def lift(self, f: SuperElement, S: tuple = ()) -> SuperElement:
        """``f w_S`` in the carrier algebra."""
        bits = [0] * self.H.n
        for s in S:
            bits[s] = 1
        return self.A.element({key + tuple(bits): c for key, c in f.terms.items()})

    def values(self, p: SuperElement) -> dict:
        """``S -> p(v_S)`` for an element of the carrier algebra."""
        out: dict = {}
        for key, c in p.terms.items():
            S = tuple(i for i, b in enumerate(key[self.nF:]) if b)
            out.setdefault(S, {})[key[:self.nF]] = c
        return {S: self.AF.element(t) for S, t in out.items()}

    def from_values(self, vals: dict) -> SuperElement:
        out = self.A.zero()
        for S, f in vals.items():
            out = out + self.lift(f, S)
        return out

    def evaluate(self, vals: dict, c_elem: dict) -> SuperElement:
        """``p(c)`` for ``c`` in ``C`` using ``p(d v_U) = d |> p(U)``."""
        out = self.AF.zero()
        for key, coef in c_elem.items():
            d, U = self.C.split(key)
            f = vals.get(U)
            if f is None or f.is_zero():
                continue
            out = out + self.F.act(d, f) * coef
        return out

    # ----------------------------------------------------------- coaction

    def _letter_coaction(self, letter: int) -> dict:
        r = self.C.r
        if letter < r:
            return self.F.adjoint_coaction(letter)
        return {r + j: e for j, e in self.H.R[letter - r].items()}

    def coact(self, key: tuple) -> dict:
        """Coaction of ``O_F`` on a PBW monomial of ``C`` as ``{C key: O_F element}``."""
        hit = self._coact_cache.get(key)
        if hit is not None:
            return hit
        AF, C = self.AF, self.C
        state = {(): AF.one()}
        for letter in key:
            nxt: dict = {}
            for k, rr in state.items():
                for l2, a in self._letter_coaction(letter).items():
                    for k2, c in C.normal_form(k + (l2,)).items():
                        nxt[k2] = nxt.get(k2, AF.zero()) + rr * a * c
            state = {k: v for k, v in nxt.items() if not v.is_zero()}
        self._coact_cache[key] = state
        return state

    # ---------------------------------------------------- structure maps

    def eps(self, p: SuperElement):
        return self.F.O_F.eps(self.values(p).get((), self.AF.zero()))

    def Delta(self, p: SuperElement) -> SuperElement:
        """``Delta(p)(v_S (x) v_T) = Delta_F(p(v_S^(0) v_T)) (1 (x) v_S^(-1))``."""
        vals = self.values(p)
        AF, C, O_F = self.AF, self.C, self.F.O_F
        AF2 = AF.tensor_power(2)
        B2 = self.A.tensor_power(2)
        nB = self.A.n
        out = {}
        for S in self.subsets:
            co = self.coact(C.odd_key(S))
            for T in self.subsets:
                tkey = C.odd_key(T)
                val = AF2.zero()
                for k0, r in co.items():
                    c_elem = C.normal_form(k0 + tkey)
                    x = self.evaluate(vals, c_elem)
                    if x.is_zero():
                        continue
                    val = val + O_F.Delta(x) * AF.embed(r, 2, 2)
                for key, c in val.terms.items():
                    k1, k2 = key[:self.nF], key[self.nF:]
                    z = list(k1) + [0] * self.H.n + list(k2) + [0] * self.H.n
                    for s in S:
                        z[self.nF + s] = 1
                    for t in T:
                        z[nB + self.nF + t] = 1
                    z = tuple(z)
                    out[z] = out.get(z, AF.field.zero) + c
        return B2.element(out)

    def S(self, p: SuperElement) -> SuperElement:
        """``S(p)(v_S) = S_F(sum p(c^(0)) c^(-1))`` with ``c = S_C(v_S)``."""
        vals = self.values(p)
        AF, C, O_F = self.AF, self.C, self.F.O_F
        out = {}
        for S in self.subsets:
            k = len(S)
            sign = -1 if (k * (k - 1) // 2 + k) % 2 else 1
            c = C.normal_form(tuple(reversed(C.odd_key(S))))
            acc = AF.zero()
            for key, coef in c.items():
                for k0, r in self.coact(key).items():
                    x = self.evaluate(vals, {k0: coef * sign})
                    if not x.is_zero():
                        acc = acc + x * r
            if not acc.is_zero():
                out[S] = O_F.S(acc)
        return self.from_values(out)

    def generator_element(self, name: str) -> SuperElement:
        return self.A.gen(name)

    def presentation(self) -> HopfPresentation:
        A = self.A
        names = [g for g in A.names if A.index[g] not in A.relation_gens]
        cop = {g: self.Delta(A.gen(g)) for g in names}
        cou = {g: self.eps(A.gen(g)) for g in names}
        anti = {g: self.S(A.gen(g)) for g in names}
        return HopfPresentation(A, cop, cou, anti, name="B")


def build_B(H: HCPData, C: Optional[PairAlgebra] = None) -> BHopf:
    return BHopf(H, C)


def stalk_dims(B: BHopf, N: int) -> list:
    """Level dimensions of ``O_B / m^{n+1}`` at the identity."""
    r = len(B.F.names)
    s = B.H.n
    from math import comb
    return [sum(comb(j + r - 1, j) * comb(s, k - j) if r else (1 if j == 0 else 0) * comb(s, k - j)
                for k in range(n + 1) for j in range(k + 1) if k - j <= s) for n in range(N + 1)]


# ------------------------------------------------------------------ eta


class EtaResult:
    def __init__(self, report: Report, images: dict, defects: dict):
        self.report = report
        self.images = images
        self.defects = defects


def eta_iso(O_G: HopfPresentation, H: HCPData, B: Optional[BHopf] = None) -> EtaResult:
    """``eta(p)(c) = red(c |> p)`` checked on generators against ``B``'s structure maps."""
    B = B or build_B(H)
    C = B.C
    AG = O_G.A
    seeds = {}
    for idx, nm in enumerate(C.g.names):
        if nm in AG.index:
            seeds[((idx,), nm)] = 1
    P = PairingSpec(C, O_G, seeds)
    Q = AG.even_quotient()
    rep = Report()
    defects: dict = {}

    def eta(p: SuperElement) -> SuperElement:
        vals = {}
        for S in B.subsets:
            key = C.odd_key(S)
            x = P.act_basis(key, p) if key else p
            red = transfer(AG.reduce_even(x), B.AF)
            if not red.is_zero():
                vals[S] = red
        return B.from_values(vals)

    images = {g: eta(AG.gen(g)) for g in AG.names}
    BA, B2 = B.A, B.A.tensor_power(2)
    base = [g for g in AG.names if AG.index[g] not in AG.relation_gens]

    def eta_map(a: SuperElement) -> SuperElement:
        return substitute(a, BA, images)

    def eta2(a: SuperElement) -> SuperElement:
        imgs = {}
        for g in AG.names:
            imgs[f"{g}@1"] = place_legs(images[g], BA, 1, 2, (1,))
            imgs[f"{g}@2"] = place_legs(images[g], BA, 1, 2, (2,))
        return substitute(a, B2, imgs)

    def record(check: str, items):
        bad = ""
        for g, d in items:
            if not d.is_zero():
                defects[(check, g)] = d
                bad = bad or f"{check}({g})"
        rep.add(check, not bad, bad)

    record("algebra", [(AG.names[d], images[AG.names[d]] * eta_map(SuperElement(AG, dict(q))) - BA.one())
                       for d, _, _, _, q in AG.relations])
    record("coproduct", [(g, B.Delta(images[g]) - eta2(O_G.Delta(AG.gen(g)))) for g in base])
    record("counit", [(g, BA.scalar(B.eps(images[g]) - O_G.eps(AG.gen(g)))) for g in base])
    record("antipode", [(g, B.S(images[g]) - eta_map(O_G.S(AG.gen(g)))) for g in base])
    even = [g for g in base if not AG.parities[AG.index[g]]]
    record("even_identity", [(g, B.lift(B.values(images[g]).get((), B.AF.zero()))
                                 - B.lift(transfer(AG.reduce_even(AG.gen(g)), B.AF))) for g in even])
    # bijectivity: the odd generators' linear parts form an invertible matrix over O_F
    odd = [g for g in AG.names if AG.parities[AG.index[g]]]
    ok = len(odd) == H.n
    if ok and odd:
        M = [[B.values(images[g]).get((j,), B.AF.zero()) for j in range(H.n)] for g in odd]
        try:
            invert(determinant(M, B.AF))
        except NotInvertible:
            ok = False
    rep.add("bijective", ok, "" if ok else "odd linear part")
    return EtaResult(rep, images, defects)


# ------------------------------------------------------- module pairs


def verify_module_pair(H: HCPData, M, dot: dict, tri: dict, B: Optional[BHopf] = None) -> tuple:
    """Conditions for ``(.,|>)`` on ``M``; returns ``(report, witness coaction matrix)``.

    ``dot[(i, j)]`` is the matrix entry ``T_ij`` of the ``O_F``-coaction
    ``m_j -> sum_i m_i (x) T_ij`` (so ``g.m_j = sum T_ij(g) m_i``), and
    ``tri[(v, j)] = {i: c}`` gives ``v |> m_j``.
    """
    F, A, O_F = H.F, H.F.A, H.F.O_F
    fld = H.field
    names = M.names if hasattr(M, "names") else list(M)
    pars = [M.parity(m) for m in names] if hasattr(M, "parity") else [0] * len(names)
    dim = len(names)
    T = [[transfer(dot.get((i, j), A.zero()) if isinstance(dot.get((i, j)), SuperElement)
                   else A.parse(str(dot.get((i, j), 0))), A) for j in range(dim)] for i in range(dim)]
    act = {}
    for (v, j), col in tri.items():
        for i, c in col.items():
            c = fld(c)
            if c != 0:
                if pars[i] == pars[j]:
                    raise ValueError(f"parity violation: {v} must act by an odd map")
                act[(H.vindex[v], j, i)] = c

    def vact(vi: int, vec: dict) -> dict:
        out: dict = {}
        for j, cj in vec.items():
            for i in range(dim):
                c = act.get((vi, j, i))
                if c is not None:
                    out[i] = out.get(i, fld.zero) + c * cj
        return {k: v for k, v in out.items() if v != 0}

    rep = Report()
    # comodule axioms for dot
    bad = ""
    for i in range(dim):
        for j in range(dim):
            if O_F.eps(T[i][j]) != (fld.one if i == j else fld.zero):
                bad = f"counit({names[i]},{names[j]})"
            lhs = O_F.Delta(T[i][j])
            rhs = sum((A.tensor(T[i][k], T[k][j]) for k in range(dim)), A.tensor_power(2).zero())
            if not (lhs == rhs):
                bad = f"coassociativity({names[i]},{names[j]})"
            if bad:
                break
        if bad:
            break
    rep.add("comodule", not bad, bad)
    # (1): sum_{u,m'} R[v][u] tri(u,m)_{m'} T[m''][m'] = sum_{m'} T[m'][m] tri(v,m')_{m''}
    bad = ""
    for vi in range(H.n):
        for m in range(dim):
            for m2 in range(dim):
                lhs = A.zero()
                for u, r in H.R[vi].items():
                    for mp, c in vact(u, {m: fld.one}).items():
                        lhs = lhs + r * T[m2][mp] * c
                rhs = A.zero()
                for mp in range(dim):
                    c = vact(vi, {mp: fld.one}).get(m2, fld.zero)
                    if c != 0:
                        rhs = rhs + T[mp][m] * c
                if not (lhs == rhs):
                    bad = f"odd_action_equivariance({H.odd[vi]},{names[m]})"
                    break
            if bad:
                break
        if bad:
            break
    rep.add("odd_action_equivariance", not bad, bad)
    # v|>(w|>m) + w|>(v|>m) = [v,w] |> m with x |> m_j = sum_i <x, T_ij> m_i
    bad = ""
    for vi in range(H.n):
        for wi in range(H.n):
            for m in range(dim):
                lhs: dict = {}
                for a, b in ((vi, wi), (wi, vi)):
                    for k, c in vact(a, vact(b, {m: fld.one})).items():
                        lhs[k] = lhs.get(k, fld.zero) + c
                rhs: dict = {}
                for x, cx in H.bracket(vi, wi).items():
                    for i in range(dim):
                        c = F.pair((x,), T[i][m])
                        if c != 0:
                            rhs[i] = rhs.get(i, fld.zero) + c * cx
                lhs = {k: v for k, v in lhs.items() if v != 0}
                rhs = {k: v for k, v in rhs.items() if v != 0}
                if lhs != rhs:
                    bad = f"odd_action_bracket({H.odd[vi]},{H.odd[wi]},{names[m]})"
                    break
            if bad:
                break
        if bad:
            break
    rep.add("odd_action_bracket", not bad, bad)
    if not rep.ok:
        return rep, None
    # witness: rho(m_j)(v_S) = rho_0(v_S |> m_j)
    B = B or build_B(H)
    W = [[B.A.zero() for _ in range(dim)] for _ in range(dim)]
    for S in B.subsets:
        for j in range(dim):
            vec = {j: fld.one}
            for s in reversed(S):
                vec = vact(s, vec)
            for k, c in vec.items():
                for i in range(dim):
                    if not T[i][k].is_zero():
                        W[i][j] = W[i][j] + B.lift(T[i][k] * c, S)
    bad = ""
    B2 = B.A.tensor_power(2)
    for i in range(dim):
        for j in range(dim):
            lhs = B.Delta(W[i][j])
            rhs = B2.zero()
            for k in range(dim):
                rhs = rhs + B.A.tensor(W[i][k], W[k][j])
            if not (lhs == rhs) or B.eps(W[i][j]) != (fld.one if i == j else fld.zero):
                bad = f"witness({names[i]},{names[j]})"
                break
        if bad:
            break
    rep.add("witness_comodule", not bad, bad)
    return rep, W


# --------------------------------------------------------------- gallery


def _gl_names(m: int, n: int):
    def entry(i, j):
        if i < m and j < m:
            return f"X{i + 1}{j + 1}"
        if i >= m and j >= m:
            return f"Y{i - m + 1}{j - m + 1}"
        if i < m:
            return f"P{i + 1}{j - m + 1}"
        return f"Q{i - m + 1}{j + 1}"
    return entry


def _det_text(names: list) -> str:
    """Leibniz expansion of the determinant of a square array of names."""
    k = len(names)
    terms = []
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        mono = "*".join(names[i][perm[i]] for i in range(k))
        terms.append(("-" if inv % 2 else "+") + mono)
    return "".join(terms).lstrip("+")


def _gl_generators(m: int, n: int, entry, odd: bool) -> list:
    gens = []
    for block, size, off in (("X", m, 0), ("Y", n, m)):
        if size == 0:
            continue
        arr = [[entry(off + i, off + j) for j in range(size)] for i in range(size)]
        for row in arr:
            for nm in row:
                gens.append(Generator(nm, 0, size == 1))
        if size > 1:
            gens.append(Generator(f"d{block}", 0, False, _det_text(arr)))
    if odd:
        for i in range(m + n):
            for j in range(m + n):
                if (i < m) != (j < m):
                    gens.append(Generator(entry(i, j), 1))
    return gens


def _matrix_coproduct(A: SuperCommutativeAlgebra, Z: list, names: list) -> dict:
    size = len(Z)
    cop = {}
    for i in range(size):
        for j in range(size):
            if Z[i][j] is None:
                continue
            tot = A.tensor_power(2).zero()
            for k in range(size):
                if Z[i][k] is not None and Z[k][j] is not None:
                    tot = tot + A.tensor(Z[i][k], Z[k][j])
            cop[names[i][j]] = tot
    return cop


def gl_inverse_blocks(A: SuperCommutativeAlgebra, m: int, n: int, entry) -> list:
    """``Z^{-1}`` for ``Z = [[X, P], [Q, Y]]`` by the block formula."""
    X = [[A.gen(entry(i, j)) for j in range(m)] for i in range(m)]
    Y = [[A.gen(entry(m + i, m + j)) for j in range(n)] for i in range(n)]
    P = [[A.gen(entry(i, m + j)) for j in range(n)] for i in range(m)]
    Q = [[A.gen(entry(m + i, j)) for j in range(m)] for i in range(n)]
    if n == 0:
        return matrix_inverse(X, A)
    if m == 0:
        return matrix_inverse(Y, A)
    Xi = matrix_inverse(X, A)
    Yi = matrix_inverse(Y, A)
    sub = lambda U, V: [[U[i][j] - V[i][j] for j in range(len(U[0]))] for i in range(len(U))]
    SX = matrix_inverse(sub(X, matrix_mul(matrix_mul(P, Yi, A), Q, A)), A)
    SY = matrix_inverse(sub(Y, matrix_mul(matrix_mul(Q, Xi, A), P, A)), A)
    SP = [[-x for x in row] for row in matrix_mul(matrix_mul(Xi, P, A), SY, A)]
    SQ = [[-x for x in row] for row in matrix_mul(matrix_mul(Yi, Q, A), SX, A)]
    return [SX[i] + SP[i] for i in range(m)] + [SQ[i] + SY[i] for i in range(n)]


def gallery_gl(m: int, n: int, field: Field = QQF, N: int = 4):
    """``O(GL(m|n))`` and the Harish-Chandra pair ``(GL_m x GL_n, odd matrices)``."""
    if m < 0 or n < 0 or m + n == 0:
        raise ValueError("need m, n >= 0 with m + n > 0")
    entry = _gl_names(m, n)
    size = m + n
    names = [[entry(i, j) for j in range(size)] for i in range(size)]
    # O_G
    AG = SuperCommutativeAlgebra(field, _gl_generators(m, n, entry, True))
    Z = [[AG.gen(names[i][j]) for j in range(size)] for i in range(size)]
    cop = _matrix_coproduct(AG, Z, names)
    cou = {names[i][j]: (1 if i == j else 0) for i in range(size) for j in range(size)}
    Sinv = gl_inverse_blocks(AG, m, n, entry)
    anti = {names[i][j]: Sinv[i][j] for i in range(size) for j in range(size)}
    O_G = HopfPresentation(AG, cop, cou, anti, name=f"GL({m}|{n})")
    # O_F: even block-diagonal part
    AF = SuperCommutativeAlgebra(field, _gl_generators(m, n, entry, False))
    ZF = [[AF.gen(names[i][j]) if (i < m) == (j < m) else None for j in range(size)] for i in range(size)]
    copF = _matrix_coproduct(AF, ZF, names)
    couF = {k: v for k, v in cou.items() if k in AF.index}
    SF = {}
    for blk, sz, off in ((0, m, 0), (1, n, m)):
        if sz == 0:
            continue
        Mb = [[AF.gen(names[off + i][off + j]) for j in range(sz)] for i in range(sz)]
        inv = matrix_inverse(Mb, AF)
        for i in range(sz):
            for j in range(sz):
                SF[names[off + i][off + j]] = inv[i][j]
    O_F = HopfPresentation(AF, copF, couF, SF, name=f"GL({m})xGL({n})")
    Fd = AffineGroupData(O_F, N)
    # V: odd matrix units, v^g = g^{-1} v g  =>  rho(E_ab) = sum S(z)_ca z_bd (x) E_cd
    odd = [names[i][j] for i in range(size) for j in range(size) if (i < m) != (j < m)]
    Sz = lambda c, a: SF[names[c][a]] if (c < m) == (a < m) else None
    coaction = {}
    for a in range(size):
        for b in range(size):
            if (a < m) == (b < m):
                continue
            terms = []
            for c in range(size):
                for d in range(size):
                    if (c < m) == (a < m) and (d < m) == (b < m):
                        terms.append((Sz(c, a) * AF.gen(names[b][d]), names[c][d]))
            coaction[names[a][b]] = terms
    bracket = {}
    for a, b in itertools.product(range(size), repeat=2):
        if (a < m) == (b < m):
            continue
        for c, d in itertools.product(range(size), repeat=2):
            if (c < m) == (d < m):
                continue
            comb = {}
            if b == c:
                comb[names[a][d]] = comb.get(names[a][d], 0) + 1
            if d == a:
                comb[names[c][b]] = comb.get(names[c][b], 0) + 1
            comb = {k: v for k, v in comb.items() if v}
            if comb:
                bracket[(names[a][b], names[c][d])] = comb
    H = HCPData(Fd, odd, coaction, bracket)
    return O_G, H


def defining_module(m: int, n: int, H: HCPData):
    """``k^{m|n}`` with ``g.e_j = sum z_ij e_i`` and odd matrix units acting by matrices."""
    size = m + n
    entry = _gl_names(m, n)
    A = H.F.A
    from .core import SuperSpace
    M = SuperSpace(tuple((f"e{i + 1}", 0 if i < m else 1) for i in range(size)))
    dot = {(i, j): A.gen(entry(i, j)) for i in range(size) for j in range(size) if (i < m) == (j < m)}
    tri = {}
    for a in range(size):
        for b in range(size):
            if (a < m) != (b < m):
                tri[(entry(a, b), b)] = {a: 1}
    return M, dot, tri
