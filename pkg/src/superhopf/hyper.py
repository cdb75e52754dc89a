"""Lie super-algebras and connected hyper-super-algebras up to a filtration level.

A hyper-super-algebra is stored through an explicit basis and two rules,
``mul(k1, k2)`` and ``coproduct(k)``, returning sparse dicts.  Elements are
plain dicts ``basis key -> scalar``.  The flavours built here are

* ``enveloping``: ``U(g)`` with the PBW basis of increasing monomials
  (odd letters at most once), products by straightening;
* ``dividedPower``: ``B(U) = B(U_0) (x) wedge(U_1)`` with
  ``b_r b_s = binom(r+s, r) b_{r+s}`` and ``Delta(b_r) = sum b_k (x) b_{r-k}``;
* ``exterior``: ``wedge(V)`` for a purely odd ``V``;
* ``truncated``: ``k[x]/(x^p)`` over ``F_p`` with ``x`` primitive;
* ``tensorProduct`` of two of the above, and ``table`` for anything read
  from structure constants.

Coproducts use the Koszul product on ``C (x) C``:
``(a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd``.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .core import Field, QQF, Report, binomial, nullspace, rank


# ------------------------------------------------------------------- Lie


class LieSuperAlgebra:
    """Finite-dimensional Lie super-algebra given by structure constants.

    ``brackets[(i, j)]`` is a dict ``k -> c`` meaning ``[x_i, x_j] = sum c x_k``.
    Missing pairs are zero.  Only the pairs that are given are used; the
    axioms are checked, not enforced.
    """

    def __init__(self, field: Field, basis: list, brackets: dict):
        self.field = field
        self.basis = [(n, p % 2) for n, p in basis]
        self.names = [b[0] for b in self.basis]
        self.parities = [b[1] for b in self.basis]
        self.index = {n: i for i, n in enumerate(self.names)}
        self.dim = len(self.basis)
        self.br = {}
        for (i, j), vals in brackets.items():
            i = self.index[i] if isinstance(i, str) else i
            j = self.index[j] if isinstance(j, str) else j
            clean = {}
            for k, c in vals.items():
                k = self.index[k] if isinstance(k, str) else k
                c = field(c)
                if c != 0:
                    if self.parities[k] != (self.parities[i] + self.parities[j]) % 2:
                        raise ValueError(f"bracket [{self.names[i]},{self.names[j]}] violates parity")
                    clean[k] = c
            if clean:
                self.br[(i, j)] = clean

    def bracket_basis(self, i: int, j: int) -> dict:
        return self.br.get((i, j), {})

    def bracket(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, self.field.zero) + a * b * c
        return {k: v for k, v in out.items() if v != 0}

    def even_part(self) -> "LieSuperAlgebra":
        ev = [i for i in range(self.dim) if self.parities[i] == 0]
        pos = {i: n for n, i in enumerate(ev)}
        br = {}
        for (i, j), v in self.br.items():
            if i in pos and j in pos:
                br[(pos[i], pos[j])] = {pos[k]: c for k, c in v.items()}
        return LieSuperAlgebra(self.field, [self.basis[i] for i in ev], br)

    def __repr__(self):
        return f"LieSuperAlgebra({self.names}, {self.field})"


def _vec_add(out: dict, v: dict, c, zero):
    for k, x in v.items():
        out[k] = out.get(k, zero) + c * x


def check_lie_axioms(g: LieSuperAlgebra) -> Report:
    """Exhaustive check of antisymmetry (B1), super-Jacobi (B2) and (B3).

    B3 asks ``[[v,v],v] = 0`` for every odd ``v``; it is tested as a
    polynomial identity in the coordinates of ``v``.  Outside characteristic 3
    it follows from B2, so a B3 failure there signals a B2 failure too.
    """
    F = g.field
    rep = Report()
    n = g.dim
    par = g.parities

    bad = ""
    for i in range(n):
        for j in range(n):
            s = dict(g.bracket_basis(i, j))
            sign = -1 if par[i] and par[j] else 1
            _vec_add(s, g.bracket_basis(j, i), F(sign), F.zero)
            if any(v != 0 for v in s.values()):
                bad = f"B1({g.names[i]},{g.names[j]})"
                break
        if bad:
            break
    rep.add("B1", not bad, bad)

    bad = ""
    for i, j, k in itertools.product(range(n), repeat=3):
        # [[x,y],z] + (-1)^{|x|(|y|+|z|)} [[y,z],x] + (-1)^{|z|(|x|+|y|)} [[z,x],y]
        tot: dict = {}
        for (a, b, c), sgn in (((i, j, k), 1),
                               ((j, k, i), -1 if par[i] * (par[j] + par[k]) % 2 else 1),
                               ((k, i, j), -1 if par[k] * (par[i] + par[j]) % 2 else 1)):
            inner = g.bracket_basis(a, b)
            _vec_add(tot, g.bracket({m: cm for m, cm in inner.items()}, {c: F.one}), F(sgn), F.zero)
        if any(v != 0 for v in tot.values()):
            bad = f"B2({g.names[i]},{g.names[j]},{g.names[k]})"
            break
    rep.add("B2", not bad, bad)

    bad = ""
    odd = [i for i in range(n) if par[i]]
    for trip in itertools.combinations_with_replacement(odd, 3):
        tot: dict = {}
        for perm in set(itertools.permutations(trip)):
            a, b, c = perm
            _vec_add(tot, g.bracket(g.bracket_basis(a, b), {c: F.one}), F.one, F.zero)
        if any(v != 0 for v in tot.values()):
            bad = "B3(" + ",".join(g.names[t] for t in trip) + ")"
            break
    name = "B3" + ("(independent)" if F.characteristic == 3 else "")
    rep.add(name, not bad, bad)
    return rep


def gl_lie(m: int, n: int, field: Field = QQF) -> LieSuperAlgebra:
    """``gl(m|n)`` on elementary matrices ``E_ij`` (rows/cols 1..m even)."""
    size = m + n
    p = lambda i: 0 if i < m else 1
    basis, idx = [], {}
    for i in range(size):
        for j in range(size):
            idx[(i, j)] = len(basis)
            basis.append((f"E{i + 1}{j + 1}", (p(i) + p(j)) % 2))
    br = {}
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            sign = -1 if ((p(i) + p(j)) % 2) * ((p(k) + p(l)) % 2) else 1
            out = {}
            if j == k:
                out[idx[(i, l)]] = out.get(idx[(i, l)], 0) + 1
            if l == i:
                out[idx[(k, j)]] = out.get(idx[(k, j)], 0) - sign
            out = {t: c for t, c in out.items() if c != 0}
            if out:
                br[(a, b)] = out
    return LieSuperAlgebra(field, basis, br)


def abelian_lie(even=(), odd=(), field: Field = QQF) -> LieSuperAlgebra:
    return LieSuperAlgebra(field, [(x, 0) for x in even] + [(x, 1) for x in odd], {})


# ------------------------------------------------------ hyper-super-algebras


class HyperSuperAlgebra:
    """Connected super-cocommutative super-bialgebra stored up to level ``N``."""

    flavor = "abstract"

    def __init__(self, field: Field, N: int):
        self.field = field
        self.N = N
        self._mul_cache: dict = {}
        self._cop_cache: dict = {}
        self._red_cache: dict = {}
        self._S_cache: dict = {}

    # subclasses provide: basis (list of keys), unit_key, parity(k), level(k),
    # _mul(k1, k2), _coproduct(k), label(k); optionally word(k)

    def word(self, k) -> Optional[list]:
        return None

    def counit(self, k):
        return self.field.one if k == self.unit_key else self.field.zero

    def mul(self, k1, k2) -> dict:
        ck = (k1, k2)
        r = self._mul_cache.get(ck)
        if r is None:
            if self.level(k1) + self.level(k2) > self.N:
                raise OverflowError("filtration level exceeded")
            r = self._mul(k1, k2)
            self._mul_cache[ck] = r
        return r

    def coproduct(self, k) -> dict:
        r = self._cop_cache.get(k)
        if r is None:
            r = self._coproduct(k)
            self._cop_cache[k] = r
        return r

    # ----------------------------------------------------- element helpers

    def one(self) -> dict:
        return {self.unit_key: self.field.one}

    def basis_element(self, k) -> dict:
        return {k: self.field.one}

    def multiply(self, a: dict, b: dict) -> dict:
        out: dict = {}
        z = self.field.zero
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                for k, c in self.mul(k1, k2).items():
                    out[k] = out.get(k, z) + c1 * c2 * c
        return {k: v for k, v in out.items() if v != 0}

    def add(self, a: dict, b: dict, c=1) -> dict:
        out = dict(a)
        c = self.field(c)
        z = self.field.zero
        for k, v in b.items():
            out[k] = out.get(k, z) + c * v
        return {k: v for k, v in out.items() if v != 0}

    def scale(self, a: dict, c) -> dict:
        c = self.field(c)
        return {k: v * c for k, v in a.items() if v * c != 0}

    def Delta(self, a: dict) -> dict:
        out: dict = {}
        z = self.field.zero
        for k, c in a.items():
            for kk, v in self.coproduct(k).items():
                out[kk] = out.get(kk, z) + c * v
        return {k: v for k, v in out.items() if v != 0}

    def tensor_multiply(self, x: dict, y: dict) -> dict:
        """Koszul product of two elements of ``C (x) C``."""
        out: dict = {}
        z = self.field.zero
        for (a, b), c1 in x.items():
            for (cc, d), c2 in y.items():
                sign = -1 if self.parity(b) and self.parity(cc) else 1
                left = self.mul(a, cc)
                right = self.mul(b, d)
                for k1, v1 in left.items():
                    for k2, v2 in right.items():
                        key = (k1, k2)
                        out[key] = out.get(key, z) + c1 * c2 * v1 * v2 * sign
        return {k: v for k, v in out.items() if v != 0}

    def element_parity(self, a: dict) -> int:
        ps = {self.parity(k) for k in a}
        if len(ps) > 1:
            raise ValueError("element is not homogeneous")
        return ps.pop() if ps else 0

    def label_element(self, a: dict) -> str:
        if not a:
            return "0"
        parts = []
        for k in sorted(a, key=self.sort_key):
            c = self.field.format(a[k])
            lab = self.label(k)
            parts.append(lab if c == "1" else f"{c}*{lab}")
        return " + ".join(parts)

    def sort_key(self, k):
        return (self.level(k), self.basis_index(k))

    def basis_index(self, k) -> int:
        if not hasattr(self, "_bidx"):
            self._bidx = {b: i for i, b in enumerate(self.basis)}
        return self._bidx[k]

    def keys_up_to(self, n: int) -> list:
        return [k for k in self.basis if self.level(k) <= n]

    def key_of(self, label: str):
        for k in self.basis:
            if self.label(k) == label:
                return k
        raise KeyError(label)

    # ------------------------------------------------------------- antipode

    def antipode(self, k) -> dict:
        """``S`` computed level by level from ``m(S (x) id) Delta = eps``."""
        r = self._S_cache.get(k)
        if r is not None:
            return r
        if k == self.unit_key:
            r = self.one()
        else:
            r = {k: -self.field.one}
            for (a1, a2), c in self.coproduct(k).items():
                if a2 == self.unit_key:
                    continue
                if a1 == self.unit_key:
                    continue
                r = self.add(r, self.multiply(self.antipode(a1), {a2: c}), -1)
            r = {kk: v for kk, v in r.items() if v != 0}
        self._S_cache[k] = r
        return r

    def S(self, a: dict) -> dict:
        out: dict = {}
        for k, c in a.items():
            out = self.add(out, self.antipode(k), c)
        return out

    # ------------------------------------------------- reduced coproducts

    def reduced_coproduct(self, k) -> dict:
        r = self._red_cache.get(k)
        if r is None:
            r = {kk: v for kk, v in self.coproduct(k).items()
                 if kk[0] != self.unit_key and kk[1] != self.unit_key}
            self._red_cache[k] = r
        return r

    def iterated_reduced(self, k, n: int) -> dict:
        """``bar Delta^{(n)}(k)`` as a dict of ``(n+1)``-tuples."""
        if n == 0:
            return {} if k == self.unit_key else {(k,): self.field.one}
        out: dict = {}
        z = self.field.zero
        for tup, c in self.iterated_reduced(k, n - 1).items():
            for (a, b), v in self.reduced_coproduct(tup[0]).items():
                key = (a, b) + tup[1:]
                out[key] = out.get(key, z) + c * v
        return {kk: v for kk, v in out.items() if v != 0}

    def iterated_coproduct(self, k, n: int) -> dict:
        """``Delta^{(n)}(k)`` as a dict of ``(n+1)``-tuples."""
        cur = {(k,): self.field.one}
        z = self.field.zero
        for _ in range(n):
            nxt: dict = {}
            for tup, c in cur.items():
                for (a, b), v in self.coproduct(tup[-1]).items():
                    key = tup[:-1] + (a, b)
                    nxt[key] = nxt.get(key, z) + c * v
            cur = {kk: v for kk, v in nxt.items() if v != 0}
        return cur

    def dims(self) -> list:
        return [len(self.keys_up_to(n)) for n in range(self.N + 1)]

    def __repr__(self):
        return f"HyperSuperAlgebra({self.flavor}, N={self.N}, dim={len(self.basis)}, {self.field})"


# ------------------------------------------------------------- enveloping


class EnvelopingAlgebra(HyperSuperAlgebra):
    """``U(g)`` with its PBW basis (characteristic 0)."""

    flavor = "enveloping"

    def __init__(self, g: LieSuperAlgebra, N: int):
        if g.field.characteristic != 0:
            raise ValueError("the enveloping flavour needs characteristic 0")
        super().__init__(g.field, N)
        self.g = g
        self.unit_key = ()
        self._nf_cache: dict = {}
        basis = []
        n = g.dim
        for length in range(N + 1):
            for combo in itertools.combinations_with_replacement(range(n), length):
                if any(combo[i] == combo[i + 1] and g.parities[combo[i]] for i in range(length - 1)):
                    continue
                basis.append(combo)
        self.basis = basis

    def parity(self, k) -> int:
        return sum(self.g.parities[i] for i in k) % 2

    def level(self, k) -> int:
        return len(k)

    def label(self, k) -> str:
        return "*".join(self.g.names[i] for i in k) if k else "1"

    def word(self, k):
        return [(i,) for i in k]

    def primitive(self, name: str):
        return (self.g.index[name],)

    def normal_form(self, word: tuple) -> dict:
        """PBW normal form of a word in the basis letters."""
        word = tuple(word)
        hit = self._nf_cache.get(word)
        if hit is not None:
            return hit
        F = self.field
        par = self.g.parities
        res = None
        for i in range(len(word) - 1):
            y, x = word[i], word[i + 1]
            if y == x and par[x]:
                # v v = 1/2 [v, v]
                res = {}
                half = F.one / F(2)
                for kk, c in self.g.bracket_basis(x, x).items():
                    res = self.add(res, self.normal_form(word[:i] + (kk,) + word[i + 2:]), half * c)
                break
            if y > x:
                sign = -1 if par[x] and par[y] else 1
                res = self.scale(self.normal_form(word[:i] + (x, y) + word[i + 2:]), sign)
                for kk, c in self.g.bracket_basis(y, x).items():
                    res = self.add(res, self.normal_form(word[:i] + (kk,) + word[i + 2:]), c)
                break
        if res is None:
            res = {word: F.one}
        self._nf_cache[word] = res
        return res

    def _mul(self, k1, k2):
        return self.normal_form(k1 + k2)

    def _coproduct(self, k):
        F = self.field
        par = self.g.parities
        out: dict = {}
        n = len(k)
        for mask in range(1 << n):
            left = tuple(k[i] for i in range(n) if mask >> i & 1)
            right = tuple(k[i] for i in range(n) if not mask >> i & 1)
            # sign: odd letters sent left that pass odd letters sent right earlier
            cnt = 0
            for j in range(n):
                if mask >> j & 1 and par[k[j]]:
                    cnt += sum(1 for i in range(j) if not mask >> i & 1 and par[k[i]])
            s = F(-1) if cnt % 2 else F.one
            key = (left, right)
            out[key] = out.get(key, F.zero) + s
        return {kk: v for kk, v in out.items() if v != 0}


def enveloping(g: LieSuperAlgebra, N: int) -> EnvelopingAlgebra:
    return EnvelopingAlgebra(g, N)


def pbw_normal_form(word, U: EnvelopingAlgebra) -> dict:
    """Normal form of a word given by letter names or indices."""
    letters = tuple(U.g.index[w] if isinstance(w, str) else w for w in word)
    if len(letters) > U.N:
        raise OverflowError("filtration level exceeded")
    return U.normal_form(letters)


# --------------------------------------------------------- divided powers


class DividedPowerAlgebra(HyperSuperAlgebra):
    """``B(U) = B(U_0) (x) wedge(U_1)``; keys are exponent tuples over ``U``."""

    flavor = "dividedPower"

    def __init__(self, field: Field, basis: list, N: int):
        super().__init__(field, N)
        self.space = [(n, p % 2) for n, p in basis]
        self.pars = [p for _, p in self.space]
        m = len(self.space)
        self.unit_key = (0,) * m
        keys = []
        for lev in range(N + 1):
            for k in _exponents(self.pars, lev):
                keys.append(k)
        self.basis = keys
        if all(self.pars):
            self.flavor = "exterior"

    def parity(self, k) -> int:
        return sum(e for e, p in zip(k, self.pars) if p) % 2

    def level(self, k) -> int:
        return sum(k)

    def label(self, k) -> str:
        parts = []
        for (n, p), e in zip(self.space, k):
            if e == 0:
                continue
            parts.append(n if p else (f"{n}[{e}]"))
        return "*".join(parts) if parts else "1"

    def word(self, k):
        if sum(k) == 0:
            return []
        if sum(k) == 1:
            return [k]
        return None

    def primitive(self, name: str):
        i = [n for n, _ in self.space].index(name)
        return tuple(1 if j == i else 0 for j in range(len(self.space)))

    def _mul(self, a, b):
        F = self.field
        c = F.one
        cnt = 0
        for i, (x, y) in enumerate(zip(a, b)):
            if self.pars[i]:
                if x and y:
                    return {}
                if y:
                    cnt += sum(a[j] for j in range(i + 1, len(a)) if self.pars[j])
            else:
                c *= F(binomial(x + y, x))
        if c == 0:
            return {}
        key = tuple(x + y for x, y in zip(a, b))
        return {key: -c if cnt % 2 else c}

    def _coproduct(self, k):
        F = self.field
        ranges = [range(e + 1) for e in k]
        out = {}
        for left in itertools.product(*ranges):
            right = tuple(e - l for e, l in zip(k, left))
            cnt = 0
            for j in range(len(k)):
                if self.pars[j] and left[j]:
                    cnt += sum(right[i] for i in range(j) if self.pars[i])
            out[(tuple(left), right)] = F(-1) if cnt % 2 else F.one
        return out


def _exponents(pars, lev):
    m = len(pars)
    if m == 0:
        if lev == 0:
            yield ()
        return
    first_max = lev if not pars[0] else min(1, lev)
    for e in range(first_max + 1):
        for rest in _exponents(pars[1:], lev - e):
            yield (e,) + rest


def divided_power_hyperalgebra(U, N: int, field: Field = QQF) -> DividedPowerAlgebra:
    """``B(U)`` for a super space ``U`` (a SuperSpace or a list of (name, parity))."""
    basis = list(U.basis) if hasattr(U, "basis") else list(U)
    return DividedPowerAlgebra(field, basis, N)


def exterior_hyperalgebra(names, N: Optional[int] = None, field: Field = QQF) -> DividedPowerAlgebra:
    names = list(names)
    return DividedPowerAlgebra(field, [(n, 1) for n in names], len(names) if N is None else N)


# -------------------------------------------------- truncated polynomial


class TruncatedPolynomialHyper(HyperSuperAlgebra):
    """``k[x]/(x^p)`` over ``F_p`` with ``x`` even primitive."""

    flavor = "truncated"

    def __init__(self, field: Field, N: Optional[int] = None, name: str = "x"):
        p = field.characteristic
        if p == 0:
            raise ValueError("needs a prime field")
        super().__init__(field, N if N is not None else p)
        self.p = p
        self.name = name
        self.unit_key = 0
        self.basis = [k for k in range(p) if k <= self.N]

    def parity(self, k):
        return 0

    def level(self, k):
        return k

    def label(self, k):
        return "1" if k == 0 else (self.name if k == 1 else f"{self.name}^{k}")

    def word(self, k):
        return [1] * k

    def _mul(self, a, b):
        return {a + b: self.field.one} if a + b < self.p else {}

    def _coproduct(self, k):
        F = self.field
        out = {}
        for j in range(k + 1):
            c = F(binomial(k, j))
            if c != 0:
                out[(j, k - j)] = c
        return out


# ---------------------------------------------------------- tensor product


class TensorHyper(HyperSuperAlgebra):
    flavor = "tensorProduct"

    def __init__(self, C1: HyperSuperAlgebra, C2: HyperSuperAlgebra, N: Optional[int] = None):
        N = min(C1.N, C2.N) if N is None else N
        super().__init__(C1.field, N)
        self.C1, self.C2 = C1, C2
        self.unit_key = (C1.unit_key, C2.unit_key)
        self.basis = [(a, b) for lev in range(N + 1) for a in C1.basis for b in C2.basis
                      if C1.level(a) + C2.level(b) == lev]

    def parity(self, k):
        return (self.C1.parity(k[0]) + self.C2.parity(k[1])) % 2

    def level(self, k):
        return self.C1.level(k[0]) + self.C2.level(k[1])

    def label(self, k):
        a, b = self.C1.label(k[0]), self.C2.label(k[1])
        if b == "1":
            return a
        if a == "1":
            return b
        return f"{a}*{b}"

    def word(self, k):
        w1, w2 = self.C1.word(k[0]), self.C2.word(k[1])
        if w1 is None or w2 is None:
            return None
        return [(x, self.C2.unit_key) for x in w1] + [(self.C1.unit_key, y) for y in w2]

    def _mul(self, x, y):
        (a, b), (c, d) = x, y
        sign = -1 if self.C2.parity(b) and self.C1.parity(c) else 1
        out = {}
        for k1, v1 in self.C1.mul(a, c).items():
            for k2, v2 in self.C2.mul(b, d).items():
                out[(k1, k2)] = out.get((k1, k2), self.field.zero) + v1 * v2 * sign
        return {k: v for k, v in out.items() if v != 0}

    def _coproduct(self, x):
        a, b = x
        out = {}
        for (a1, a2), v1 in self.C1.coproduct(a).items():
            for (b1, b2), v2 in self.C2.coproduct(b).items():
                sign = -1 if self.C1.parity(a2) and self.C2.parity(b1) else 1
                key = ((a1, b1), (a2, b2))
                out[key] = out.get(key, self.field.zero) + v1 * v2 * sign
        return {k: v for k, v in out.items() if v != 0}


def tensor_hyper(C1, C2, N=None) -> TensorHyper:
    return TensorHyper(C1, C2, N)


# -------------------------------------------------------------- tables


class TableHyperAlgebra(HyperSuperAlgebra):
    """Hyper-super-algebra given by explicit structure constants.

    Keys are integers ``0..dim-1``; ``labels``, ``parities`` and ``levels``
    describe the basis.  Products of total level above ``N`` are unknown.
    """

    flavor = "table"

    def __init__(self, field: Field, labels: list, parities: list, levels: list, mul_table: dict,
                 cop_table: dict, N: int, unit_key: int = 0):
        super().__init__(field, N)
        self.labels = list(labels)
        self.pars = list(parities)
        self.levels = list(levels)
        self.basis = list(range(len(labels)))
        self.unit_key = unit_key
        self.mul_table = mul_table
        self.cop_table = cop_table

    def parity(self, k):
        return self.pars[k]

    def level(self, k):
        return self.levels[k]

    def label(self, k):
        return self.labels[k]

    def word(self, k):
        if k == self.unit_key:
            return []
        if self.levels[k] == 1:
            return [k]
        return None

    def _mul(self, a, b):
        return dict(self.mul_table.get((a, b), {}))

    def _coproduct(self, k):
        return dict(self.cop_table.get(k, {}))


def as_table(C: HyperSuperAlgebra, N: Optional[int] = None) -> TableHyperAlgebra:
    """Freeze any hyper-super-algebra into explicit tables (keys become indices)."""
    N = C.N if N is None else N
    keys = C.keys_up_to(N)
    pos = {k: i for i, k in enumerate(keys)}
    mul = {}
    for a in keys:
        for b in keys:
            if C.level(a) + C.level(b) <= N:
                r = {pos[k]: v for k, v in C.mul(a, b).items() if k in pos}
                if r:
                    mul[(pos[a], pos[b])] = r
    cop = {pos[k]: {(pos[x], pos[y]): v for (x, y), v in C.coproduct(k).items()} for k in keys}
    return TableHyperAlgebra(C.field, [C.label(k) for k in keys], [C.parity(k) for k in keys],
                             [C.level(k) for k in keys], mul, cop, N, pos[C.unit_key])


# --------------------------------------------------------------- checks


def check_hyper_axioms(C: HyperSuperAlgebra, level: Optional[int] = None, max_triples: int = 20000) -> Report:
    """Bialgebra axioms, connectedness, filtration and super-cocommutativity."""
    F = C.field
    N = C.N if level is None else level
    keys = C.keys_up_to(N)
    rep = Report()

    rep.add("connected", len(C.keys_up_to(0)) == 1 and C.unit_key in keys)

    bad = ""
    for k in keys:
        if C.mul(C.unit_key, k) != {k: F.one} or C.mul(k, C.unit_key) != {k: F.one}:
            bad = f"unit({C.label(k)})"
            break
    rep.add("unit", not bad, bad)

    bad = ""
    count = 0
    for a in keys:
        for b in keys:
            if C.level(a) + C.level(b) > N:
                continue
            for c in keys:
                if C.level(a) + C.level(b) + C.level(c) > N:
                    continue
                count += 1
                if count > max_triples:
                    break
                lhs = C.multiply(C.mul(a, b), {c: F.one})
                rhs = C.multiply({a: F.one}, C.mul(b, c))
                if lhs != rhs:
                    bad = f"associativity({C.label(a)},{C.label(b)},{C.label(c)})"
                    break
            if bad:
                break
        if bad:
            break
    rep.add("associativity", not bad, bad)

    bad = ""
    for k in keys:
        d = C.coproduct(k)
        lhs, rhs = {}, {}
        for (a, b), v in d.items():
            for (a1, a2), w in C.coproduct(a).items():
                lhs[(a1, a2, b)] = lhs.get((a1, a2, b), F.zero) + v * w
            for (b1, b2), w in C.coproduct(b).items():
                rhs[(a, b1, b2)] = rhs.get((a, b1, b2), F.zero) + v * w
        if {x: y for x, y in lhs.items() if y != 0} != {x: y for x, y in rhs.items() if y != 0}:
            bad = f"coassociativity({C.label(k)})"
            break
        l1 = {}
        r1 = {}
        for (a, b), v in d.items():
            if a == C.unit_key:
                l1[b] = l1.get(b, F.zero) + v
            if b == C.unit_key:
                r1[a] = r1.get(a, F.zero) + v
        if {x: y for x, y in l1.items() if y != 0} != {k: F.one} or {x: y for x, y in r1.items() if y != 0} != {k: F.one}:
            bad = f"counit({C.label(k)})"
            break
    rep.add("coassociativity_counit", not bad, bad)

    bad = ""
    for k in keys:
        for (a, b), v in C.coproduct(k).items():
            if C.level(a) + C.level(b) > C.level(k) or (C.parity(a) + C.parity(b)) % 2 != C.parity(k):
                bad = f"filtration({C.label(k)})"
                break
        if bad:
            break
    rep.add("filtration", not bad, bad)

    bad = ""
    for k in keys:
        d = C.coproduct(k)
        sw = {}
        for (a, b), v in d.items():
            s = -1 if C.parity(a) and C.parity(b) else 1
            sw[(b, a)] = sw.get((b, a), F.zero) + v * s
        if {x: y for x, y in sw.items() if y != 0} != d:
            bad = f"cocommutativity({C.label(k)})"
            break
    rep.add("cocommutativity", not bad, bad)

    bad = ""
    for a in keys:
        for b in keys:
            if C.level(a) + C.level(b) > N:
                continue
            lhs = C.Delta(C.mul(a, b))
            rhs = C.tensor_multiply(C.coproduct(a), C.coproduct(b))
            if lhs != rhs:
                bad = f"compatibility({C.label(a)},{C.label(b)})"
                break
        if bad:
            break
    rep.add("compatibility", not bad, bad)
    return rep


# ------------------------------------------------------- coradical filtration


@dataclass
class Filtration:
    keys: list                     # basis keys up to level N
    levels: list                   # levels[n] = basis (row vectors) of C_(n)
    primitives: list               # basis of P(C) as vectors
    primitive_parities: list
    report: Report = dc_field(default_factory=Report)

    def dims(self) -> list:
        return [len(v) for v in self.levels]


def coradical_filtration(C: HyperSuperAlgebra, N: Optional[int] = None) -> Filtration:
    """``C_(n)`` as the kernel of ``C -> bar C^{(x)(n+1)}`` and ``P(C)``."""
    F = C.field
    N = C.N if N is None else N
    keys = C.keys_up_to(N)
    if len(C.keys_up_to(0)) != 1:
        raise ValueError("input is not connected")
    levels = []
    for n in range(N + 1):
        images = [C.iterated_reduced(k, n) for k in keys]
        coords = sorted({t for im in images for t in im}, key=repr)
        pos = {t: i for i, t in enumerate(coords)}
        rows = [[F.zero] * len(keys) for _ in coords]
        for j, im in enumerate(images):
            for t, v in im.items():
                rows[pos[t]][j] = v
        levels.append(nullspace(rows, len(keys), F) if coords else
                      [[F.one if i == j else F.zero for i in range(len(keys))] for j in range(len(keys))])
    # primitives: bar Delta x = 0 and eps x = 0, per parity
    prims, ppars = [], []
    for p in (0, 1):
        sub = [k for k in keys if C.parity(k) == p]
        images = [C.reduced_coproduct(k) for k in sub]
        coords = sorted({t for im in images for t in im}, key=repr)
        pos = {t: i for i, t in enumerate(coords)}
        rows = [[F.zero] * len(sub) for _ in coords]
        for j, im in enumerate(images):
            for t, v in im.items():
                rows[pos[t]][j] = v
        eps_row = [F.one if k == C.unit_key else F.zero for k in sub]
        rows.append(eps_row)
        for vec in nullspace(rows, len(sub), F):
            full = [F.zero] * len(keys)
            for k, v in zip(sub, vec):
                full[keys.index(k)] = v
            prims.append(full)
            ppars.append(p)
    rep = Report()
    d1 = len(levels[1]) if N >= 1 else 1
    rep.add("C1_is_k1_plus_P", d1 == 1 + len(prims) if N >= 1 else True, f"dim C_(1)={d1}, dim P={len(prims)}")
    return Filtration(keys, levels, prims, ppars, rep)


def primitives(C: HyperSuperAlgebra) -> list:
    """``P(C)`` as a list of elements (dicts)."""
    filt = coradical_filtration(C, min(C.N, 2))
    return [{k: v for k, v in zip(filt.keys, vec) if v != 0} for vec in filt.primitives]


# ---------------------------------------------------------------- smoothness


@dataclass
class SmoothnessResult:
    smooth_up_to_N: bool
    defect_level: Optional[int]
    injective: bool
    rows: list  # (n, dim C_(n), dim B(P)_(n), rank of f on C_(n))

    def as_dict(self) -> dict:
        return {"smooth_up_to_N": self.smooth_up_to_N, "defect_level": self.defect_level,
                "injective": self.injective, "rows": self.rows}


def _b_dims(r0: int, r1: int, n: int) -> int:
    return sum(binomial(r1, j) * binomial(n - j + r0, r0) for j in range(min(n, r1) + 1))


def smoothness_check(C: HyperSuperAlgebra, N: Optional[int] = None, seed: Optional[int] = None) -> SmoothnessResult:
    """Compare ``C`` with ``B(P(C))`` through ``f = sum_n pi^{(x)n} Delta^{(n-1)}``.

    ``pi`` projects onto ``P(C)`` by coefficient extraction at pivot
    coordinates; with ``seed`` set, a random map vanishing on ``P(C)`` and on
    ``1`` is added to it (the verdict must not change).

    ``defect_level`` is the last level ``n`` at which ``C_(n) -> B_(n)`` is
    still bijective when a later level fails; ``None`` when smooth.
    """
    F = C.field
    N = C.N if N is None else N
    filt = coradical_filtration(C, N)
    keys = filt.keys
    P = filt.primitives
    r0 = sum(1 for p in filt.primitive_parities if p == 0)
    r1 = len(P) - r0
    # pivot coordinates of P (after reduction to echelon form)
    from sympy.polys.matrices import DomainMatrix
    if P:
        M = DomainMatrix([[F(x) for x in row] for row in P], (len(P), len(keys)), F.domain)
        red, pivots = M.rref()
        red = [[F(x) for x in r] for r in red.rep.to_ddm()]
        Pbasis = red[:len(pivots)]
    else:
        pivots, Pbasis = (), []
    # pi(e_j): for pivot column j -> unit vector in P coordinates
    pi = {}
    rng = random.Random(seed) if seed is not None else None
    for j, k in enumerate(keys):
        vec = {}
        if j in pivots:
            vec[pivots.index(j)] = F.one
        elif rng is not None and k != C.unit_key:
            for i in range(len(pivots)):
                r = F(rng.randint(-3, 3))
                if r != 0:
                    vec[i] = r
        pi[k] = vec
    # pi must kill P: correct the random part so that pi(p) = p-coordinates
    if rng is not None and P:
        # pi(b_i) should equal e_i for the echelon basis b_i
        for i, b in enumerate(Pbasis):
            acc = {}
            for j, k in enumerate(keys):
                if b[j] != 0:
                    for t, v in pi[k].items():
                        acc[t] = acc.get(t, F.zero) + b[j] * v
            # subtract the excess from the pivot column's image
            excess = {t: v - (F.one if t == i else F.zero) for t, v in acc.items()}
            col = keys[pivots[i]]
            for t, v in excess.items():
                pi[col][t] = pi[col].get(t, F.zero) - v
            pi[col] = {t: v for t, v in pi[col].items() if v != 0}

    def f_of_key(k) -> dict:
        out = {}
        for n in range(1, C.level(k) + 1):
            for tup, c in C.iterated_reduced(k, n - 1).items():
                partial = {(): c}
                for leg in tup:
                    nxt = {}
                    for t, v in partial.items():
                        for i, w in pi[leg].items():
                            nxt[t + (i,)] = nxt.get(t + (i,), F.zero) + v * w
                    partial = nxt
                    if not partial:
                        break
                for t, v in partial.items():
                    out[t] = out.get(t, F.zero) + v
        if k == C.unit_key:
            out[()] = F.one
        return {t: v for t, v in out.items() if v != 0}

    fk = {k: f_of_key(k) for k in keys}
    rows = []
    injective = True
    first_bad = None
    for n in range(N + 1):
        vecs = filt.levels[n]
        imgs = []
        for vec in vecs:
            img = {}
            for j, v in enumerate(vec):
                if v != 0:
                    for t, w in fk[keys[j]].items():
                        img[t] = img.get(t, F.zero) + v * w
            imgs.append(img)
        coords = sorted({t for im in imgs for t in im})
        pos = {t: i for i, t in enumerate(coords)}
        mat = [[im.get(t, F.zero) for t in coords] for im in imgs]
        rk = rank(mat, len(coords), F) if imgs and coords else 0
        dC, dB = len(vecs), _b_dims(r0, r1, n)
        if rk != dC:
            injective = False
        rows.append((n, dC, dB, rk))
        if first_bad is None and not (rk == dC == dB):
            first_bad = n
    smooth = first_bad is None
    defect = None if smooth else first_bad - 1
    return SmoothnessResult(smooth, defect, injective, rows)


# ------------------------------------------------------- even part, ad_r


def underline(C: HyperSuperAlgebra, N: Optional[int] = None) -> list:
    """Basis (vectors over ``C.keys_up_to(N)``) of ``Delta^{-1}(C_0 (x) C_0)``."""
    F = C.field
    N = C.N if N is None else N
    keys = C.keys_up_to(N)
    images = [C.coproduct(k) for k in keys]
    coords = sorted({t for im in images for t in im if C.parity(t[0]) or C.parity(t[1])}, key=repr)
    pos = {t: i for i, t in enumerate(coords)}
    rows = [[F.zero] * len(keys) for _ in coords]
    for j, im in enumerate(images):
        for t, v in im.items():
            if t in pos:
                rows[pos[t]][j] = v
    # odd elements never qualify: force their coefficients to vanish too
    for j, k in enumerate(keys):
        if C.parity(k):
            rows.append([F.one if i == j else F.zero for i in range(len(keys))])
    return nullspace(rows, len(keys), F)


def underline_dims(C: HyperSuperAlgebra, N: Optional[int] = None) -> list:
    N = C.N if N is None else N
    keys = C.keys_up_to(N)
    basis = underline(C, N)
    # level-adapted count: intersect with C_(n) span via rank computation
    F = C.field
    res = []
    for n in range(N + 1):
        cols_out = [j for j, k in enumerate(keys) if C.level(k) > n]
        # dimension of {v in span(basis) : v_j = 0 for j in cols_out}
        if not basis:
            res.append(0)
            continue
        rows = [[basis[i][j] for i in range(len(basis))] for j in cols_out]
        res.append(len(nullspace(rows, len(basis), F)) if rows else len(basis))
    return res


def ad_r(C: HyperSuperAlgebra, a: dict, b: dict) -> dict:
    """Right adjoint action ``sum (-1)^{|a_(1)||b|} S(a_(1)) b a_(2)``.

    For a primitive ``x`` this is ``b x - (-1)^{|x||b|} x b = [b, x]``; the
    sign is invisible when ``a`` is even.
    """
    pb = C.element_parity(b) if b else 0
    out: dict = {}
    for k, c in a.items():
        for (a1, a2), v in C.coproduct(k).items():
            sign = -1 if (C.parity(a1) and pb) else 1
            term = C.multiply(C.multiply(C.antipode(a1), b), {a2: C.field.one})
            out = C.add(out, term, c * v * sign)
    return out


def supercommutator(C: HyperSuperAlgebra, a: dict, b: dict) -> dict:
    pa = C.element_parity(a)
    pb = C.element_parity(b)
    s = -1 if pa and pb else 1
    return C.add(C.multiply(a, b), C.multiply(b, a), -s)


def random_lie_superalgebra(seed: int, field: Field = QQF) -> LieSuperAlgebra:
    """A random 3-dimensional Lie super-algebra (one even, two odd basis vectors).

    Drawn from two families closed under the axioms and then transported
    by a random change of basis of the odd part:
    ``[h, v] = l v, [h, w] = -l w`` or ``h`` central with ``[v,v], [v,w], [w,w]`` in ``k h``.
    """
    rng = random.Random(seed)
    F = field
    while True:
        if rng.random() < 0.5:
            lam = F(rng.choice([1, 2, -1, 3, Fraction(1, 2)]))
            base = {(0, 1): {1: lam}, (1, 0): {1: -lam}, (0, 2): {2: -lam}, (2, 0): {2: lam}}
        else:
            a, b, c = (F(rng.randint(-2, 2)) for _ in range(3))
            base = {(1, 1): {0: a}, (1, 2): {0: b}, (2, 1): {0: b}, (2, 2): {0: c}}
        M = [[F(rng.randint(-2, 2)) for _ in range(2)] for _ in range(2)]
        det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
        if det == 0:
            continue
        s = F(rng.choice([1, 2, -1]))
        g = _transport(F, base, M, s)
        return g


def _transport(F, base, M, s):
    """New basis ``h' = s h``, ``v' = M00 v + M01 w``, ``w' = M10 v + M11 w``."""
    from .core import inverse
    Minv = inverse(M, F)
    # coordinates of old basis vectors in the new basis
    def to_new(vec):
        out = {}
        for k, c in vec.items():
            if k == 0:
                out[0] = out.get(0, F.zero) + c / s
            else:
                for t in (1, 2):
                    # old v_k = sum_t Minv[k-1][t-1] new_t  (rows of M give new in terms of old)
                    coef = Minv[k - 1][t - 1]
                    if coef != 0:
                        out[t] = out.get(t, F.zero) + c * coef
        return {k: v for k, v in out.items() if v != 0}

    new_in_old = {0: {0: s}, 1: {1: M[0][0], 2: M[0][1]}, 2: {1: M[1][0], 2: M[1][1]}}
    br = {}
    for i in range(3):
        for j in range(3):
            acc = {}
            for a, ca in new_in_old[i].items():
                for b, cb in new_in_old[j].items():
                    for k, ck in base.get((a, b), {}).items():
                        acc[k] = acc.get(k, F.zero) + F(ca) * F(cb) * F(ck)
            acc = {k: v for k, v in acc.items() if v != 0}
            if acc:
                br[(i, j)] = to_new(acc)
    return LieSuperAlgebra(F, [("h", 0), ("v", 1), ("w", 1)], br)
