"""Hopf super-algebras given by generators, plus pairings and formal group laws.

A :class:`HopfPresentation` stores the coproduct, counit and antipode on the
generators of a super-commutative algebra.  All three extend uniquely to
algebra maps (the antipode of a super-commutative Hopf algebra is an algebra
map), so every axiom can be checked on generators alone.  For an inverse
generator ``D`` with ``D q = 1`` the structure maps default to the inverses
of their values on ``q``; if they are given explicitly, compatibility with the
relation is checked separately.
"""
from __future__ import annotations

from typing import Callable, Optional

from .core import Field, QQF, Report
from .superalgebra import (SuperCommutativeAlgebra, SuperElement, Generator, invert, substitute,
                           apply_derivation, matrix_inverse, NotInvertible)


def place_legs(a: SuperElement, base: SuperCommutativeAlgebra, k: int, m: int, legs: tuple) -> SuperElement:
    """Move an element of ``A^{(x)k}`` into legs ``legs`` (increasing) of ``A^{(x)m}``."""
    n = base.n
    T = base.tensor_power(m)
    out = {}
    for key, c in a.terms.items():
        z = [0] * (n * m)
        for i, leg in enumerate(legs):
            z[(leg - 1) * n:leg * n] = key[i * n:(i + 1) * n]
        out[tuple(z)] = c
    return T.element(out)


class HopfPresentation:
    def __init__(self, algebra: SuperCommutativeAlgebra, coproduct: dict, counit: dict, antipode: Optional[dict] = None,
                 name: str = ""):
        self.A = algebra
        self.field = algebra.field
        self.A2 = algebra.tensor_power(2)
        self.name = name
        self.coproduct = {}
        for g, v in coproduct.items():
            if isinstance(v, SuperElement):
                if v.alg is not self.A2:
                    raise ValueError(f"coproduct of {g} lives in the wrong algebra")
                self.coproduct[g] = v
            else:
                self.coproduct[g] = self._tensor_from_pairs(v)
        self.counit = {g: self.field(v) for g, v in counit.items()}
        self.antipode = {}
        for g, v in (antipode or {}).items():
            self.antipode[g] = v if isinstance(v, SuperElement) else algebra.parse(v)
        missing = [g for g in algebra.names
                   if g not in self.coproduct and algebra.index[g] not in algebra.relation_gens]
        if missing:
            raise ValueError(f"coproduct missing for {missing}")
        self._scalar_alg = SuperCommutativeAlgebra(self.field, [])
        self._derived: dict = {}

    def _tensor_from_pairs(self, pairs) -> SuperElement:
        out = self.A2.zero()
        for left, right in pairs:
            l = left if isinstance(left, SuperElement) else self.A.parse(left)
            r = right if isinstance(right, SuperElement) else self.A.parse(right)
            out = out + self.A.tensor(l, r)
        return out

    # ------------------------------------------------------ structure maps

    def relation_of(self, name: str):
        i = self.A.index[name]
        return next(r for r in self.A.relations if r[0] == i)

    def q_element(self, name: str) -> SuperElement:
        return SuperElement(self.A, dict(self.relation_of(name)[4]))

    def delta_images(self) -> dict:
        if "delta" not in self._derived:
            imgs = dict(self.coproduct)
            self._derived["delta"] = imgs
        return self._derived["delta"]

    def Delta(self, a: SuperElement) -> SuperElement:
        return substitute(a, self.A2, self.delta_images())

    def eps(self, a: SuperElement):
        imgs = {g: self._scalar_alg.scalar(v) for g, v in self.counit.items()}
        return substitute(a, self._scalar_alg, imgs).constant()

    def counit_map(self) -> dict:
        return dict(self.counit)

    def antipode_images(self) -> dict:
        if "S" not in self._derived:
            if not self.antipode:
                self.antipode = antipode_oracle(self)
            self._derived["S"] = dict(self.antipode)
        return self._derived["S"]

    def S(self, a: SuperElement) -> SuperElement:
        return substitute(a, self.A, self.antipode_images())

    def iterated_coproduct(self, a: SuperElement, k: int) -> SuperElement:
        """``Delta^{(k-1)}(a)`` in ``A^{(x)k}``."""
        if k == 1:
            return a
        cur = self.Delta(a)
        for m in range(3, k + 1):
            Tm1 = self.A.tensor_power(m - 1)
            Tm = self.A.tensor_power(m)
            imgs = {}
            for leg in range(1, m - 1):
                for g in self.A.names:
                    imgs[f"{g}@{leg}"] = Tm.gen(f"{g}@{leg}")
            for g in self.A.names:
                gi = self.A.index[g]
                if gi in self.A.relation_gens and g not in self.coproduct:
                    continue
                imgs[f"{g}@{m - 1}"] = place_legs(self.coproduct[g], self.A, 2, m, (m - 1, m))
            cur = substitute(cur, Tm, imgs)
        return cur

    def eps_on_leg(self, a: SuperElement, k: int, leg: int) -> SuperElement:
        """Apply the counit to one leg of an element of ``A^{(x)k}``."""
        Tk1 = self.A.tensor_power(k - 1) if k > 2 else self.A
        imgs = {}
        for j in range(1, k + 1):
            for g in self.A.names:
                name = f"{g}@{j}"
                if j == leg:
                    if g in self.counit:
                        imgs[name] = Tk1.scalar(self.counit[g])
                else:
                    tgt = j if j < leg else j - 1
                    imgs[name] = Tk1.gen(f"{g}@{tgt}") if k > 2 else Tk1.gen(g)
        return substitute(a, Tk1, imgs)

    def mult_after(self, a: SuperElement, left: Callable, right: Callable) -> SuperElement:
        """``m (f (x) g)(a)`` for even linear maps ``f, g`` on an element of ``A (x) A``."""
        out = self.A.zero()
        for c, (k1, k2) in self.A.split_legs(a, 2):
            out = out + left(self.A.monomial(k1)) * right(self.A.monomial(k2)) * c
        return out

    def is_connected(self) -> bool:
        return self.A.truncation is not None and all(v == 0 for v in self.counit.values())

    # ------------------------------------------------------------------ io

    def summary(self) -> str:
        return f"HopfPresentation({self.name or '?'}: {self.A})"


def convolution(f: Callable, g: Callable, H: HopfPresentation) -> Callable:
    """``f * g = m (f (x) g) Delta`` for even linear maps ``A -> A``."""
    def fg(a: SuperElement) -> SuperElement:
        return H.mult_after(H.Delta(a), f, g)
    return fg


# ------------------------------------------------------------------ checks


def check_hopf_axioms(H: HopfPresentation, level: Optional[int] = None) -> Report:
    """Verify the super-Hopf axioms on generators.

    Checks (each reports the first failing generator as witness):
    ``parity``, ``relations``, ``coassociativity``, ``counit``, ``antipode``.
    """
    A = H.A
    rep = Report()
    trunc = (lambda x: x.truncate(level)) if level is not None else (lambda x: x)

    # parity of structure maps
    bad = ""
    for g in A.names:
        i = A.index[g]
        par = A.parities[i]
        if g in H.coproduct:
            d = H.coproduct[g]
            if not d.is_homogeneous() or (d.terms and d.parity() != par):
                bad = bad or f"coproduct({g})"
        if par and H.counit.get(g, H.field.zero) != 0:
            bad = bad or f"counit({g})"
        s = H.antipode_images().get(g)
        if s is not None and (not s.is_homogeneous() or (s.terms and s.parity() != par)):
            bad = bad or f"antipode({g})"
    rep.add("parity", not bad, bad)

    # inverse generators: structure maps must respect D * q = 1
    bad = ""
    for d, _, _, _, qterms in A.relations:
        name = A.names[d]
        q = SuperElement(A, dict(qterms))
        D = A.gen(name)
        if name in H.coproduct:
            if not (H.coproduct[name] * H.Delta(q) == H.A2.one()):
                bad = bad or f"coproduct({name})"
        if name in H.counit:
            if H.counit[name] * H.eps(q) != H.field.one:
                bad = bad or f"counit({name})"
        s = H.antipode_images()
        if name in s:
            if not (s[name] * H.S(q) == A.one()):
                bad = bad or f"antipode({name})"
        del D
    rep.add("relations", not bad, bad)

    A3 = A.tensor_power(3)
    bad = ""
    for g in A.names:
        x = A.gen(g)
        d = H.Delta(x)
        left_imgs, right_imgs = {}, {}
        for h in A.names:
            if h in H.coproduct:
                left_imgs[f"{h}@1"] = place_legs(H.coproduct[h], A, 2, 3, (1, 2))
                right_imgs[f"{h}@2"] = place_legs(H.coproduct[h], A, 2, 3, (2, 3))
            left_imgs[f"{h}@2"] = A3.gen(f"{h}@3")
            right_imgs[f"{h}@1"] = A3.gen(f"{h}@1")
        lhs = substitute(d, A3, left_imgs)
        rhs = substitute(d, A3, right_imgs)
        if not (trunc(lhs) == trunc(rhs)):
            bad = f"coassociativity({g})"
            break
    rep.add("coassociativity", not bad, bad)

    bad = ""
    for g in A.names:
        x = A.gen(g)
        d = H.Delta(x)
        l = H.eps_on_leg(d, 2, 1)
        r = H.eps_on_leg(d, 2, 2)
        if not (trunc(l) == trunc(x) and trunc(r) == trunc(x)):
            bad = f"counit({g})"
            break
    rep.add("counit", not bad, bad)

    bad = ""
    S = H.antipode_images()
    ident = {f"{h}@2": A.gen(h) for h in A.names}
    for g in A.names:
        x = A.gen(g)
        d = H.Delta(x)
        e = A.scalar(H.eps(x))
        imgs_l = dict(ident)
        imgs_l.update({f"{h}@1": S[h] for h in S})
        imgs_r = {f"{h}@1": A.gen(h) for h in A.names}
        imgs_r.update({f"{h}@2": S[h] for h in S})
        try:
            l = substitute(d, A, imgs_l)
            r = substitute(d, A, imgs_r)
        except (KeyError, NotInvertible):
            bad = f"antipode({g})"
            break
        if not (trunc(l) == trunc(e) and trunc(r) == trunc(e)):
            bad = f"antipode({g})"
            break
    rep.add("antipode", not bad, bad)
    return rep


# ---------------------------------------------------------- antipode oracle


def _takeuchi_antipode(H: HopfPresentation) -> dict:
    """``S = sum_k (u eps - id)^{*k}`` on a connected truncated presentation."""
    A = H.A
    N = A.truncation
    out = {}

    def f(m: SuperElement) -> SuperElement:
        return A.scalar(H.eps(m)) - m

    for g in A.names:
        x = A.gen(g)
        total = A.scalar(H.eps(x))
        for k in range(1, N + 1):
            dk = H.iterated_coproduct(x, k)
            acc = A.zero()
            for c, legs in A.split_legs(dk, k):
                prod = A.scalar(c)
                for key in legs:
                    prod = prod * f(A.monomial(key))
                    if prod.is_zero():
                        break
                acc = acc + prod
            total = total + acc
        out[g] = total
    return out


def _linear_left_antipode(H: HopfPresentation) -> Optional[dict]:
    """Solve ``sum_h S(h) c_{h,g} = eps(g)`` when ``Delta(g) = sum_h h (x) c_{h,g}``."""
    A = H.A
    free = [g for g in A.names if A.index[g] not in A.relation_gens]
    pos = {g: i for i, g in enumerate(free)}
    C = [[A.zero() for _ in free] for _ in free]
    for j, g in enumerate(free):
        for c, (k1, k2) in A.split_legs(H.coproduct[g], 2):
            nz = [i for i, e in enumerate(k1) if e]
            if len(nz) != 1 or k1[nz[0]] != 1 or A.names[nz[0]] not in pos:
                return None
            h = A.names[nz[0]]
            C[pos[h]][j] = C[pos[h]][j] + A.monomial(k2) * c
    Cinv = matrix_inverse(C, A)
    e = [A.scalar(H.eps(A.gen(g))) for g in free]
    S = {}
    for i, h in enumerate(free):
        s = A.zero()
        for j in range(len(free)):
            if e[j].terms:
                s = s + e[j] * Cinv[j][i]
        S[h] = s
    for d, _, _, _, qterms in A.relations:
        S[A.names[d]] = invert(substitute(SuperElement(A, dict(qterms)), A, S))
    return S


def antipode_oracle(H: HopfPresentation) -> dict:
    """Antipode computed independently of any stored formula.

    Connected truncated presentations use the Takeuchi sum; presentations
    whose coproduct is linear in the left leg are solved as a matrix
    equation over the algebra.
    """
    if H.A.truncation is not None:
        if not all(v == 0 for v in H.counit.values()):
            raise ValueError("truncated presentations must be connected")
        return _takeuchi_antipode(H)
    S = _linear_left_antipode(H)
    if S is None:
        raise ValueError("no antipode oracle for this presentation")
    return S


def expand_at_identity(H: HopfPresentation, N: int, prefix: str = "t_"):
    """Formal neighbourhood of the counit as a connected truncated presentation.

    Each generator ``g`` (other than inverse generators) gets a variable
    ``t_g`` standing for ``g - eps(g)``; the coproduct is transported and
    truncated at degree ``N``.  Returns ``(local, phi)`` where ``phi`` sends
    elements of ``H.A`` to the local algebra.  Since ``local`` is connected
    its antipode can be solved degree by degree, which gives an oracle for
    ``H.S`` independent of any closed formula.
    """
    A = H.A
    names = [g for g in A.names if A.index[g] not in A.relation_gens]
    T = SuperCommutativeAlgebra(H.field, [Generator(prefix + g, A.parities[A.index[g]]) for g in names], truncation=N)
    T2 = T.tensor_power(2)
    A2 = H.A2
    shift = {g: T.scalar(H.counit.get(g, 0)) + T.gen(prefix + g) for g in names}

    def phi(a: SuperElement) -> SuperElement:
        return substitute(a, T, shift)

    images2 = {}
    for g in names:
        e = H.counit.get(g, 0)
        for leg in (1, 2):
            images2[f"{g}@{leg}"] = T2.scalar(e) + T2.gen(f"{prefix}{g}@{leg}")
    cop = {}
    for g in names:
        e = H.field(H.counit.get(g, 0))
        cop[prefix + g] = substitute(H.coproduct[g], T2, images2) - T2.scalar(e)
    local = HopfPresentation(T, cop, {prefix + g: 0 for g in names}, None, name=f"{H.name} at 1")
    local.antipode = antipode_oracle(local)
    return local, phi


# ----------------------------------------------------------------- pairing


class PairingSpec:
    """Pairing ``<a, p>`` between a hyper-super-algebra and a Hopf presentation.

    The pairing carries no Koszul sign: ``<ab, p> = <a, p_(1)> <b, p_(2)>``
    and ``<a, pq> = <a_(1), p> <a_(2), q>``.  Seeds give ``<x, g>`` for basis
    elements ``x`` of the left object and generators ``g``.  Elements that are
    words in primitive basis elements act through iterated derivations;
    other basis elements pair through their iterated coproduct.
    """

    def __init__(self, left, right: HopfPresentation, seeds: dict):
        self.left = left
        self.right = right
        self.field = right.field
        self.seeds = {k: self.field(v) for k, v in seeds.items() if self.field(v) != 0}
        self._prim_cache: dict = {}
        self._atomic_cache: dict = {}

    # <x, p> for primitive x: the epsilon-derivation with values seeds
    def _eps_derivation(self, x, p: SuperElement):
        A = self.right.A
        vals = {g: A.scalar(self.seeds.get((x, g), 0)) for g in A.names if (x, g) in self.seeds}
        par = self.left.parity(x)
        return self.right.eps(apply_derivation(p, vals, par))

    def primitive_action_values(self, x) -> dict:
        """``x |> g = g_(1) <x, g_(2)>`` for every generator ``g``."""
        if x in self._prim_cache:
            return self._prim_cache[x]
        A = self.right.A
        vals = {}
        for g in A.names:
            if A.index[g] in A.relation_gens and g not in self.right.coproduct:
                continue
            out = A.zero()
            for c, (k1, k2) in A.split_legs(self.right.coproduct[g], 2):
                v = self._eps_derivation(x, A.monomial(k2))
                if v != 0:
                    out = out + A.monomial(k1) * (c * v)
            vals[g] = out
        self._prim_cache[x] = vals
        return vals

    def act_primitive(self, x, p: SuperElement) -> SuperElement:
        return apply_derivation(p, self.primitive_action_values(x), self.left.parity(x))

    def _pair_monomial_atomic(self, a, key: tuple):
        ck = (a, key)
        if ck in self._atomic_cache:
            return self._atomic_cache[ck]
        A = self.right.A
        F = self.field
        factors = []
        for i, e in enumerate(key):
            if e < 0 or i in A.relation_gens:
                raise ValueError("atomic pairing needs a polynomial monomial")
            factors += [A.names[i]] * e
        if not factors:
            val = self.left.counit(a)
        elif len(factors) == 1:
            g = factors[0]
            if a == self.left.unit_key:
                val = self.right.counit.get(g, F.zero)
            else:
                val = self.seeds.get((a, g), F.zero)
        else:
            first = [0] * A.n
            first[A.index[factors[0]]] = 1
            rest = list(key)
            rest[A.index[factors[0]]] -= 1
            val = F.zero
            for (a1, a2), c in self.left.coproduct(a).items():
                v1 = self._pair_monomial_atomic(a1, tuple(first))
                if v1 == 0:
                    continue
                v2 = self._pair_monomial_atomic(a2, tuple(rest))
                val += c * v1 * v2
        self._atomic_cache[ck] = val
        return val

    def act_basis(self, a, p: SuperElement) -> SuperElement:
        """``a |> p = p_(1) <a, p_(2)>`` for a basis element ``a``."""
        word = self.left.word(a)
        if word is not None:
            out = p
            for x in reversed(word):
                out = self.act_primitive(x, out)
                if out.is_zero():
                    break
            return out
        A = self.right.A
        D = self.right.Delta(p)
        out = A.zero()
        for c, (k1, k2) in A.split_legs(D, 2):
            v = self._pair_monomial_atomic(a, k2)
            if v != 0:
                out = out + A.monomial(k1) * (c * v)
        return out

    def act(self, a: dict, p: SuperElement) -> SuperElement:
        out = self.right.A.zero()
        for key, c in a.items():
            out = out + self.act_basis(key, p) * c
        return out

    def eval(self, a: dict, p: SuperElement):
        return self.right.eps(self.act(a, p))


def pairing_action(P: PairingSpec, a, p: SuperElement) -> SuperElement:
    if not isinstance(a, dict):
        a = {a: P.field.one}
    return P.act(a, p)


def pairing_eval(P: PairingSpec, a, p: SuperElement):
    if not isinstance(a, dict):
        a = {a: P.field.one}
    return P.eval(a, p)


# -------------------------------------------------------------- group laws


class GroupLaw:
    """A formal super-group law ``F(T, P)`` on the generators of a truncated algebra.

    ``series[name]`` is the component for ``name`` as an element of
    ``A (x) A`` (first variables ``x@1``, second ``x@2``).
    """

    def __init__(self, algebra: SuperCommutativeAlgebra, series: dict):
        if algebra.truncation is None:
            raise ValueError("group laws live on truncated series algebras")
        self.A = algebra
        self.A2 = algebra.tensor_power(2)
        self.series = {k: (v if isinstance(v, SuperElement) else self.A2.parse(v)) for k, v in series.items()}

    def to_text(self) -> str:
        lines = []
        for g in self.A.names:
            s = self.series[g].to_text().replace("@1", "").replace("@2", "'")
            lines.append(f"F_{g} = {s}")
        return "\n".join(lines)


def group_law(H: HopfPresentation) -> GroupLaw:
    if not H.is_connected():
        raise ValueError("group laws need a connected truncated presentation")
    return GroupLaw(H.A, {g: H.coproduct[g] for g in H.A.names})


def check_group_law(law: GroupLaw) -> Report:
    """Identity ``F(T,0) = T = F(0,T)`` and associativity, both mod degree N+1."""
    A, A2 = law.A, law.A2
    rep = Report()
    bad = ""
    for g in A.names:
        left = substitute(law.series[g], A, {**{f"{h}@1": A.gen(h) for h in A.names}, **{f"{h}@2": 0 for h in A.names}})
        right = substitute(law.series[g], A, {**{f"{h}@1": 0 for h in A.names}, **{f"{h}@2": A.gen(h) for h in A.names}})
        if not (left == A.gen(g) and right == A.gen(g)):
            bad = f"identity({g})"
            break
    rep.add("identity", not bad, bad)
    A3 = A.tensor_power(3)
    inner_l = {h: place_legs(law.series[h], A, 2, 3, (1, 2)) for h in A.names}
    inner_r = {h: place_legs(law.series[h], A, 2, 3, (2, 3)) for h in A.names}
    bad = ""
    for g in A.names:
        lhs = substitute(law.series[g], A3, {**{f"{h}@1": inner_l[h] for h in A.names},
                                             **{f"{h}@2": A3.gen(f"{h}@3") for h in A.names}})
        rhs = substitute(law.series[g], A3, {**{f"{h}@1": A3.gen(f"{h}@1") for h in A.names},
                                             **{f"{h}@2": inner_r[h] for h in A.names}})
        if not (lhs == rhs):
            bad = f"associativity({g})"
            break
    rep.add("associativity", not bad, bad)
    bad = ""
    for g in A.names:
        s = law.series[g]
        if not s.is_homogeneous() or (s.terms and s.parity() != A.parities[A.index[g]]):
            bad = f"parity({g})"
            break
    rep.add("parity", not bad, bad)
    return rep


def presentation_from_law(law: GroupLaw, name: str = "") -> HopfPresentation:
    A = law.A
    H = HopfPresentation(A, dict(law.series), {g: 0 for g in A.names}, None, name=name)
    H.antipode = antipode_oracle(H)
    return H


# ----------------------------------------------------------------- gallery


def series_algebra(even=("T",), odd=(), N: int = 6, field: Field = QQF) -> SuperCommutativeAlgebra:
    gens = [Generator(n, 0) for n in even] + [Generator(n, 1) for n in odd]
    return SuperCommutativeAlgebra(field, gens, truncation=N)


def additive_law(even=("T",), odd=(), N: int = 6, field: Field = QQF) -> HopfPresentation:
    """``F(T, P) = T + P`` in every variable."""
    A = series_algebra(even, odd, N, field)
    law = GroupLaw(A, {g: A.tensor(A.gen(g), A.one()) + A.tensor(A.one(), A.gen(g)) for g in A.names})
    return presentation_from_law(law, "additive")


def multiplicative_law(N: int = 6, field: Field = QQF, var: str = "T") -> HopfPresentation:
    """``F(T, P) = T + P + TP``."""
    A = series_algebra((var,), (), N, field)
    t = A.gen(var)
    law = GroupLaw(A, {var: A.tensor(t, A.one()) + A.tensor(A.one(), t) + A.tensor(t, t)})
    return presentation_from_law(law, "multiplicative")
