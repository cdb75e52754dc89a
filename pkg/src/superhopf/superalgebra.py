"""Super-commutative algebras on finitely many homogeneous generators.

An element is a sparse dict ``exponent tuple -> scalar``.  The exponent tuple
follows the declaration order of the generators and the monomial it names is
the product of the generators *in that order*; this fixes the sign of every
term.  Odd exponents are 0 or 1.  Even generators may be declared invertible
(negative exponents allowed) or may be the inverse of an even polynomial
``q`` (``D * q = 1``), which is handled by one rewriting rule per relation.

Multiplying two monomials moves each odd factor of the right monomial past the
odd factors of the left monomial that sit later in the declaration order::

    theta2 * theta1 = -theta1 * theta2

A truncation level ``N`` works modulo all monomials of total degree above
``N`` (the ``m``-adic truncation of a power series algebra).  Tensor powers
``A^{(x)k}`` are modelled inside one algebra by renaming each generator
``x`` to ``x@1, ..., x@k`` with leg 1 declared first, so that
``a@1 * b@2`` is exactly ``a (x) b`` with the Koszul product.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .core import Field, QQF
from . import parse as _parse


class NotInvertible(ArithmeticError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int = 0
    invertible: bool = False
    inverse_of: Optional[str] = None  # text of q for a generator D with D*q = 1


def _as_generator(g) -> Generator:
    if isinstance(g, Generator):
        return g
    if isinstance(g, str):
        return Generator(g, 0)
    if isinstance(g, dict):
        return Generator(g["name"], int(g.get("parity", 0)), bool(g.get("invertible", False)), g.get("inverse_of"))
    return Generator(*g)


def gen_binomial(i: int, k: int) -> int:
    """``binom(i, k)`` for any integer ``i`` (falling factorial over k!)."""
    if k < 0:
        return 0
    num, den = 1, 1
    for j in range(k):
        num *= i - j
        den *= j + 1
    return num // den


class SuperCommutativeAlgebra:
    def __init__(self, field: Field = QQF, generators: Iterable = (), truncation: Optional[int] = None,
                 _relation_terms: Optional[dict] = None):
        self.field = field
        self.generators = [_as_generator(g) for g in generators]
        self.names = [g.name for g in self.generators]
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate generator names")
        self.n = len(self.names)
        self.index = {nm: i for i, nm in enumerate(self.names)}
        self.parities = [g.parity % 2 for g in self.generators]
        for g in self.generators:
            if g.parity % 2 and (g.invertible or g.inverse_of):
                raise ValueError(f"odd generator {g.name} cannot be invertible")
            if g.invertible and g.inverse_of:
                raise ValueError(f"{g.name}: choose either invertible or inverse_of")
        self.invertible = [g.invertible for g in self.generators]
        self.truncation = truncation
        has_rel = any(g.inverse_of for g in self.generators) or bool(_relation_terms)
        if truncation is not None and (any(self.invertible) or has_rel):
            raise ValueError("truncation cannot be combined with invertible generators")
        self.odd_positions = [i for i in range(self.n) if self.parities[i]]
        self._odd_rank = {p: r for r, p in enumerate(self.odd_positions)}
        self._mask_cache: dict = {}
        self._zero_key = (0,) * self.n
        # relations D * q = 1 stored as (d_index, lm, c_lm, rest_terms, q_terms)
        self.relations = []
        rel_terms = dict(_relation_terms or {})
        for g in self.generators:
            if g.inverse_of and g.name not in rel_terms:
                q = self._parse_plain(g.inverse_of)
                rel_terms[g.name] = q.terms
        rel_idx = {self.index[nm] for nm in rel_terms}
        for dname, qterms in rel_terms.items():
            d = self.index[dname]
            if self.parities[d]:
                raise ValueError("inverse generators must be even")
            for key in qterms:
                if any(key[i] for i in self.odd_positions):
                    raise ValueError(f"relation for {dname} involves odd generators")
                if any(key[j] for j in rel_idx):
                    raise ValueError(f"relation for {dname} involves an inverse generator")
            lm = max(qterms)
            c = qterms[lm]
            rest = {k: v for k, v in qterms.items() if k != lm}
            self.relations.append((d, lm, c, rest, dict(qterms)))
        self.relation_gens = {r[0] for r in self.relations}
        for i, (d, lm, _, _, _) in enumerate(self.relations):
            for d2, lm2, _, _, _ in self.relations[i + 1:]:
                if any(a and b for a, b in zip(lm, lm2)):
                    raise ValueError("relations need coprime leading monomials")
        self._tensor_cache: dict = {}
        self._inverse_cache: dict = {}

    # ------------------------------------------------------------ basics

    def __repr__(self):
        ev = [n for n, p in zip(self.names, self.parities) if not p]
        od = [n for n, p in zip(self.names, self.parities) if p]
        t = f", N={self.truncation}" if self.truncation is not None else ""
        return f"SuperCommutativeAlgebra(even={ev}, odd={od}{t}, {self.field})"

    def element(self, terms: dict) -> "SuperElement":
        return SuperElement(self, {k: v for k, v in terms.items() if v != 0})

    def zero(self) -> "SuperElement":
        return SuperElement(self, {})

    def one(self) -> "SuperElement":
        return self.scalar(1)

    def scalar(self, c) -> "SuperElement":
        c = self.field(c)
        return SuperElement(self, {self._zero_key: c} if c != 0 else {})

    def gen(self, name: str) -> "SuperElement":
        key = [0] * self.n
        key[self.index[name]] = 1
        return SuperElement(self, {tuple(key): self.field.one})

    def gens(self) -> list:
        return [self.gen(n) for n in self.names]

    def monomial(self, key: tuple, c=1) -> "SuperElement":
        return self.element({tuple(key): self.field(c)}).reduced()

    def parse(self, text: str) -> "SuperElement":
        return _parse.evaluate(str(text), self.gen, lambda q: self.scalar(q))

    def _parse_plain(self, text: str) -> "SuperElement":
        return _parse.evaluate(str(text), self.gen, lambda q: self.scalar(q))

    def degree(self, key: tuple) -> int:
        return sum(key)

    def odd_degree(self, key: tuple) -> int:
        return sum(key[i] for i in self.odd_positions)

    def key_parity(self, key: tuple) -> int:
        return self.odd_degree(key) % 2

    def _mask(self, key: tuple) -> int:
        m = self._mask_cache.get(key)
        if m is None:
            m = 0
            for pos in self.odd_positions:
                if key[pos]:
                    m |= 1 << self._odd_rank[pos]
            self._mask_cache[key] = m
        return m

    def mul_keys(self, a: tuple, b: tuple):
        """``(sign, key)`` of the product of two monomials, or ``None`` if zero."""
        sign = 1
        if self.odd_positions:
            ma, mb = self._mask(a), self._mask(b)
            if ma & mb:
                return None
            if ma and mb:
                cnt = 0
                x = mb
                while x:
                    low = x & -x
                    j = low.bit_length() - 1
                    cnt += (ma >> (j + 1)).bit_count()
                    x ^= low
                if cnt & 1:
                    sign = -1
        key = tuple(x + y for x, y in zip(a, b))
        if self.truncation is not None and sum(key) > self.truncation:
            return None
        return sign, key

    # ------------------------------------------------------ normal forms

    def _needs_reduction(self, key) -> Optional[tuple]:
        for rel in self.relations:
            d, lm = rel[0], rel[1]
            if key[d] >= 1 and all(k >= l for k, l in zip(key, lm) if l):
                return rel
        return None

    def reduce_terms(self, terms: dict) -> dict:
        """Rewrite ``D * lm(q)`` until no monomial is divisible by it."""
        if not self.relations:
            return {k: v for k, v in terms.items() if v != 0}
        out: dict = {}
        work = list(terms.items())
        F = self.field
        while work:
            key, c = work.pop()
            if c == 0:
                continue
            rel = self._needs_reduction(key)
            if rel is None:
                out[key] = out.get(key, F.zero) + c
                continue
            d, lm, clm, rest, _ = rel
            base = list(k - l for k, l in zip(key, lm))
            base[d] -= 1
            f = c / clm
            work.append((tuple(base), f))
            base[d] += 1
            for rk, rc in rest.items():
                work.append((tuple(b + r for b, r in zip(base, rk)), -f * rc))
        return {k: v for k, v in out.items() if v != 0}

    # ------------------------------------------------------------ tensors

    def tensor_power(self, k: int) -> "SuperCommutativeAlgebra":
        """The algebra modelling ``A^{(x)k}`` with generators ``x@1 .. x@k``."""
        if k in self._tensor_cache:
            return self._tensor_cache[k]
        gens, rels = [], {}
        for leg in range(1, k + 1):
            for g in self.generators:
                gens.append(Generator(f"{g.name}@{leg}", g.parity, g.invertible, None))
        for d, lm, c, rest, qterms in self.relations:
            for leg in range(1, k + 1):
                rels[f"{self.names[d]}@{leg}"] = {self._leg_key(key, leg, k): v for key, v in qterms.items()}
        T = SuperCommutativeAlgebra(self.field, gens, self.truncation, _relation_terms=rels)
        T.base = self
        T.legs = k
        self._tensor_cache[k] = T
        return T

    def _leg_key(self, key: tuple, leg: int, k: int) -> tuple:
        z = [0] * (self.n * k)
        z[(leg - 1) * self.n:leg * self.n] = key
        return tuple(z)

    def embed(self, a: "SuperElement", leg: int, k: int) -> "SuperElement":
        T = self.tensor_power(k)
        return SuperElement(T, {self._leg_key(key, leg, k): c for key, c in a.terms.items()})

    def tensor(self, *parts: "SuperElement") -> "SuperElement":
        """``a1 (x) a2 (x) ...`` as an element of the tensor power."""
        k = len(parts)
        out = self.tensor_power(k).one()
        for i, a in enumerate(parts, start=1):
            out = out * self.embed(a, i, k)
        return out

    def split_legs(self, a: "SuperElement", k: int) -> list:
        """Decompose an element of ``A^{(x)k}`` into ``(c, [leg keys])``."""
        n = self.n
        return [(c, [key[i * n:(i + 1) * n] for i in range(k)]) for key, c in sorted(a.terms.items())]

    # ------------------------------------------------------- even quotient

    def even_quotient(self) -> "SuperCommutativeAlgebra":
        """``A / (A_1)``: the algebra on the even generators alone."""
        if hasattr(self, "_even_q"):
            return self._even_q
        ev = [i for i in range(self.n) if not self.parities[i]]
        rels = {}
        for d, lm, c, rest, qterms in self.relations:
            rels[self.names[d]] = {tuple(key[i] for i in ev): v for key, v in qterms.items()}
        gens = [Generator(self.generators[i].name, 0, self.generators[i].invertible, None) for i in ev]
        self._even_q = SuperCommutativeAlgebra(self.field, gens, self.truncation, _relation_terms=rels)
        self._even_positions = ev
        return self._even_q

    def reduce_even(self, a: "SuperElement") -> "SuperElement":
        """Image of ``a`` in ``A / (A_1)``."""
        Q = self.even_quotient()
        ev = self._even_positions
        out = {}
        for key, c in a.terms.items():
            if any(key[i] for i in self.odd_positions):
                continue
            out[tuple(key[i] for i in ev)] = c
        return Q.element(out)

    def lift_even(self, a: "SuperElement") -> "SuperElement":
        """Inverse of :meth:`reduce_even` on odd-free elements."""
        self.even_quotient()
        ev = self._even_positions
        out = {}
        for key, c in a.terms.items():
            z = [0] * self.n
            for i, e in zip(ev, key):
                z[i] = e
            out[tuple(z)] = c
        return self.element(out)


class SuperElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: SuperCommutativeAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    # ------------------------------------------------------------ algebra

    def _coerce(self, other) -> "SuperElement":
        if isinstance(other, SuperElement):
            if other.alg is not self.alg:
                raise ValueError("elements of different algebras")
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            v = t.get(k)
            v = c if v is None else v + c
            if v == 0:
                t.pop(k, None)
            else:
                t[k] = v
        return SuperElement(self.alg, t)

    __radd__ = __add__

    def __neg__(self):
        return SuperElement(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, SuperElement):
            c = self.alg.field(other)
            if c == 0:
                return SuperElement(self.alg, {})
            return SuperElement(self.alg, {k: v * c for k, v in self.terms.items()})
        other = self._coerce(other)
        A = self.alg
        out: dict = {}
        mk = A.mul_keys
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                r = mk(ka, kb)
                if r is None:
                    continue
                s, key = r
                v = ca * cb
                if s < 0:
                    v = -v
                prev = out.get(key)
                out[key] = v if prev is None else prev + v
        if A.relations:
            out = A.reduce_terms(out)
        else:
            out = {k: v for k, v in out.items() if v != 0}
        return SuperElement(A, out)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        if e < 0:
            return invert(self) ** (-e)
        out = self.alg.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, SuperElement):
            return other.alg is self.alg and other.terms == self.terms
        try:
            return self == self.alg.scalar(other)
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def reduced(self) -> "SuperElement":
        return SuperElement(self.alg, self.alg.reduce_terms(self.terms))

    # ------------------------------------------------------------ queries

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key) -> object:
        return self.terms.get(tuple(key), self.alg.field.zero)

    def constant(self):
        return self.terms.get(self.alg._zero_key, self.alg.field.zero)

    def parity(self) -> int:
        pars = {self.alg.key_parity(k) for k in self.terms}
        if len(pars) > 1:
            raise ValueError("element is not homogeneous")
        return pars.pop() if pars else 0

    def is_homogeneous(self) -> bool:
        return len({self.alg.key_parity(k) for k in self.terms}) <= 1

    def parity_part(self, p: int) -> "SuperElement":
        return SuperElement(self.alg, {k: c for k, c in self.terms.items() if self.alg.key_parity(k) == p})

    def min_degree(self) -> int:
        return min((sum(k) for k in self.terms), default=10 ** 9)

    def truncate(self, n: int) -> "SuperElement":
        """Drop monomials of total degree above ``n``."""
        return SuperElement(self.alg, {k: c for k, c in self.terms.items() if sum(k) <= n})

    def to_text(self) -> str:
        return format_element(self)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"<{self.to_text()}>"


# ------------------------------------------------------------------ text


def format_monomial(alg: SuperCommutativeAlgebra, key: tuple) -> str:
    parts = []
    for name, e in zip(alg.names, key):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _order_key(alg, key):
    return (sum(abs(e) for e in key), tuple(-e for e in key))


def format_element(a: SuperElement) -> str:
    """Canonical, re-readable text of an element."""
    alg = a.alg
    F = alg.field
    if not a.terms:
        return "0"
    pieces = []
    for key in sorted(a.terms, key=lambda k: _order_key(alg, k)):
        c = a.terms[key]
        mono = format_monomial(alg, key)
        neg = False
        if F.p == 0 and c < 0:
            neg, c = True, -c
        cs = F.format(c)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        pieces.append((neg, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


# ----------------------------------------------------------- operations


def even_quotient(A: SuperCommutativeAlgebra) -> SuperCommutativeAlgebra:
    return A.even_quotient()


def gr_decompose(a: SuperElement) -> dict:
    """Components of ``a`` by number of odd factors (the grading of ``gr A``)."""
    out: dict = {}
    for k, c in a.terms.items():
        out.setdefault(a.alg.odd_degree(k), {})[k] = c
    return {d: SuperElement(a.alg, t) for d, t in sorted(out.items())}


def delta_k(k: int, name: str, a: SuperElement) -> SuperElement:
    """Taylor-coefficient operator: ``sum c_i T^i -> sum binom(i,k) c_i T^(i-k)``."""
    alg = a.alg
    j = alg.index[name]
    if alg.parities[j]:
        raise ValueError("delta_k is defined for even generators")
    if j in alg.relation_gens:
        raise ValueError("delta_k is not defined for an inverse generator")
    F = alg.field
    out: dict = {}
    for key, c in a.terms.items():
        e = key[j]
        if e >= 0 and e < k:
            continue
        b = gen_binomial(e, k)
        if b == 0:
            continue
        nk = list(key)
        nk[j] = e - k
        nk = tuple(nk)
        v = F(b) * c
        out[nk] = out.get(nk, F.zero) + v
    return alg.element(out)


def _split_unit(a: SuperElement):
    """``a = u + n`` with ``u`` the candidate unit part and ``n`` nilpotent."""
    alg = a.alg
    if alg.truncation is not None:
        z = alg._zero_key
        u = {z: a.terms[z]} if z in a.terms else {}
        n = {k: c for k, c in a.terms.items() if k != z}
    else:
        u = {k: c for k, c in a.terms.items() if alg.odd_degree(k) == 0}
        n = {k: c for k, c in a.terms.items() if alg.odd_degree(k) != 0}
    return SuperElement(alg, u), SuperElement(alg, n)


def _monomial_inverse(alg: SuperCommutativeAlgebra, key: tuple, c) -> Optional[SuperElement]:
    """Inverse of ``c * m`` when ``m`` only involves invertible and inverse generators."""
    out = alg.scalar(alg.field.inv(c))
    plain = [0] * alg.n
    for i, e in enumerate(key):
        if e == 0:
            continue
        if alg.invertible[i]:
            plain[i] = -e
        elif i in alg.relation_gens and e > 0:
            rel = next(r for r in alg.relations if r[0] == i)
            out = out * SuperElement(alg, dict(rel[4])) ** e
        else:
            return None
    return out * alg.monomial(tuple(plain))


def _unit_inverse(u: SuperElement) -> SuperElement:
    alg = u.alg
    if not u.terms:
        raise NotInvertible("zero is not invertible")
    acc = alg.one()
    cur = u
    for _ in range(64):
        if len(cur.terms) == 1:
            (key, c), = cur.terms.items()
            inv = _monomial_inverse(alg, key, c)
            if inv is not None:
                return acc * inv
        improved = False
        for d, lm, _, _, _ in alg.relations:
            dk = [0] * alg.n
            dk[d] = 1
            t = cur * alg.monomial(tuple(dk))
            if _complexity(alg, t) < _complexity(alg, cur):
                cur, acc = t, acc * alg.monomial(tuple(dk))
                improved = True
                break
        if not improved:
            break
    raise NotInvertible(f"{u} is not a unit")


def _complexity(alg, a: SuperElement):
    rel = alg.relation_gens
    free = max((sum(e for i, e in enumerate(k) if i not in rel and not alg.invertible[i]) for k in a.terms), default=0)
    dd = max((sum(k[i] for i in rel) for k in a.terms), default=0)
    return (free, dd, len(a.terms))


def invert(a: SuperElement) -> SuperElement:
    """Multiplicative inverse; raises :class:`NotInvertible` when there is none."""
    alg = a.alg
    cache_key = frozenset(a.terms.items())
    hit = alg._inverse_cache.get(cache_key)
    if hit is not None:
        return hit
    u, n = _split_unit(a)
    uinv = _unit_inverse(u)
    step = -(uinv * n)
    out = alg.one()
    power = alg.one()
    bound = (alg.truncation or 0) + len(alg.odd_positions) + 2
    for _ in range(bound):
        power = power * step
        if power.is_zero():
            break
        out = out + power
    out = out * uinv
    if not (out * a == alg.one()):
        raise NotInvertible(f"{a} is not a unit")
    if len(alg._inverse_cache) < 4096:
        alg._inverse_cache[cache_key] = out
    return out


def substitute(a: SuperElement, target: SuperCommutativeAlgebra, images: dict) -> SuperElement:
    """Apply the algebra map determined by ``images`` (generator name -> element).

    Inverse generators without an explicit image are sent to the inverse of
    the image of their ``q``; negative powers use :func:`invert`.
    """
    alg = a.alg
    cache: dict = {}

    def img(i):
        if i in cache:
            return cache[i]
        name = alg.names[i]
        if name in images:
            v = images[name]
            if not isinstance(v, SuperElement):
                v = target.scalar(v)
        elif i in alg.relation_gens:
            rel = next(r for r in alg.relations if r[0] == i)
            v = invert(substitute(SuperElement(alg, dict(rel[4])), target, images))
        else:
            raise KeyError(f"no image for generator {name}")
        cache[i] = v
        return v

    power_cache: dict = {}

    def pw(i, e):
        if (i, e) not in power_cache:
            power_cache[(i, e)] = img(i) ** e
        return power_cache[(i, e)]

    out = target.zero()
    for key, c in a.terms.items():
        term = target.scalar(c)
        for i, e in enumerate(key):
            if e:
                term = term * pw(i, e)
                if term.is_zero():
                    break
        out = out + term
    return out


def apply_derivation(a: SuperElement, values: dict, parity: int = 0) -> SuperElement:
    """Super-derivation ``d`` determined by its values on generators.

    Uses the rule ``d(pq) = p d(q) + (-1)^{|d||q|} d(p) q``, which is the
    form taken by the action of a primitive element through the unsigned
    pairing.  Inverse generators and negative powers follow from the chain
    rule; generators missing from ``values`` are sent to zero.
    """
    alg = a.alg
    dcache: dict = {}

    def dgen(i):
        if i in dcache:
            return dcache[i]
        name = alg.names[i]
        if name in values:
            v = values[name]
        elif i in alg.relation_gens:
            rel = next(r for r in alg.relations if r[0] == i)
            dq = apply_derivation(SuperElement(alg, dict(rel[4])), values, parity)
            dk = [0] * alg.n
            dk[i] = 2
            v = -(alg.monomial(tuple(dk)) * dq)
        else:
            v = alg.zero()
        dcache[i] = v
        return v

    out = alg.zero()
    for key, c in a.terms.items():
        factors = [i for i, e in enumerate(key) if e]
        for pos, i in enumerate(factors):
            di = dgen(i)
            if di.is_zero():
                continue
            e = key[i]
            pre = [0] * alg.n
            for j in factors[:pos]:
                pre[j] = key[j]
            suf = [0] * alg.n
            for j in factors[pos + 1:]:
                suf[j] = key[j]
            own = [0] * alg.n
            own[i] = e - 1
            suf_par = sum(suf[j] for j in alg.odd_positions) % 2
            coeff = c * alg.field(e)
            if parity and suf_par:
                coeff = -coeff
            term = alg.monomial(tuple(pre)) * (alg.monomial(tuple(own)) * di) * alg.monomial(tuple(suf))
            out = out + term * coeff
    return out


def matrix_mul(A: list, B: list, alg: SuperCommutativeAlgebra) -> list:
    rows, inner = len(A), len(B)
    cols = len(B[0]) if B else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            s = alg.zero()
            for k in range(inner):
                if A[i][k].terms and B[k][j].terms:
                    s = s + A[i][k] * B[k][j]
            row.append(s)
        out.append(row)
    return out


def _det(M: list, alg) -> SuperElement:
    n = len(M)
    if n == 0:
        return alg.one()
    if n == 1:
        return M[0][0]
    total = alg.zero()
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        t = M[0][j] * _det(minor, alg)
        total = total + (t if j % 2 == 0 else -t)
    return total


def determinant(M: list, alg: SuperCommutativeAlgebra) -> SuperElement:
    """Determinant of a matrix with even, mutually commuting entries."""
    return _det(M, alg)


def matrix_inverse(M: list, alg: SuperCommutativeAlgebra) -> list:
    """Two-sided inverse of an even supermatrix over a super-commutative algebra.

    The odd-free part is inverted through the adjugate, the rest by the
    (finite) Neumann series.
    """
    n = len(M)
    M0 = [[_split_unit(x)[0] for x in row] for row in M]
    N1 = [[M[i][j] - M0[i][j] for j in range(n)] for i in range(n)]
    dinv = invert(determinant(M0, alg))
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:i] + row[i + 1:] for k, row in enumerate(M0) if k != j]
            c = determinant(minor, alg)
            adj[i][j] = c * dinv if (i + j) % 2 == 0 else -(c * dinv)
    step = [[-x for x in row] for row in matrix_mul(adj, N1, alg)]
    out = adj
    power = adj
    for _ in range(len(alg.odd_positions) + (alg.truncation or 0) + 2):
        power = matrix_mul(step, power, alg)
        if all(x.is_zero() for row in power for x in row):
            break
        out = [[out[i][j] + power[i][j] for j in range(n)] for i in range(n)]
    return out
