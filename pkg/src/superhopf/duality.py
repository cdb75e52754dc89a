"""Level-wise duality between truncated complete algebras and hyper-super-algebras.

Both sides are kept as structure constants on matching index sets, so the
dual is a transpose: the product of one side is read off the coproduct of
the other.  With the unsigned pairing ``<f (x) g, a (x) b> = f(a) g(b)``
(used throughout)::

    (f g)(a)       = f(a_(1)) g(a_(2))
    Delta(f)(a, b) = f(a b)

Level ``n`` of the hyper side is ``(A / m^{n+1})^*`` and the ``m``-adic
degree of a basis element of ``A`` is the level of its dual.
"""
from __future__ import annotations

import re
from typing import Optional

from .core import Field, QQF, Report, inverse
from .superalgebra import SuperCommutativeAlgebra, Generator
from .hopf import HopfPresentation, GroupLaw, presentation_from_law
from .hyper import HyperSuperAlgebra, TableHyperAlgebra, as_table


class TruncatedCompleteAlgebra:
    """Super-commutative ``A / m^{N+1}`` as structure constants.

    ``mul[(i, j)] = {k: c}`` and, when a Hopf structure is present,
    ``cop[k] = {(i, j): c}`` restricted to ``deg i + deg j <= N``.
    Degrees must be adapted to the ``m``-adic filtration: ``m^n`` is spanned
    by the basis elements of degree ``>= n``.
    """

    def __init__(self, field: Field, labels: list, parities: list, degrees: list, mul: dict,
                 cop: Optional[dict], N: int, unit: int = 0, presentation: Optional[HopfPresentation] = None):
        self.field = field
        self.labels = list(labels)
        self.parities = list(parities)
        self.degrees = list(degrees)
        self.mul = mul
        self.cop = cop
        self.N = N
        self.unit = unit
        self.presentation = presentation

    @property
    def dim(self) -> int:
        return len(self.labels)

    def dims(self) -> list:
        return [sum(1 for d in self.degrees if d <= n) for n in range(self.N + 1)]

    def __repr__(self):
        return f"TruncatedCompleteAlgebra(dim={self.dim}, N={self.N}, {self.field})"


def dual_label(label: str) -> str:
    """``l -> (l)*`` with ``(l)* -> l``, so that dualizing twice restores labels."""
    if label == "1":
        return label
    if label.startswith("(") and label.endswith(")*"):
        depth = 0
        for i, ch in enumerate(label[:-1]):
            depth += {"(": 1, ")": -1}.get(ch, 0)
            if depth == 0 and i < len(label) - 2:
                break
        else:
            return label[1:-2]
    return f"({label})*"


def _monomial_keys(A: SuperCommutativeAlgebra, N: int) -> list:
    keys = []

    def rec(i, rem, cur):
        if i == A.n:
            keys.append(tuple(cur))
            return
        top = min(rem, 1) if A.parities[i] else rem
        for e in range(top + 1):
            cur.append(e)
            rec(i + 1, rem - e, cur)
            cur.pop()

    rec(0, N, [])
    return sorted(keys, key=lambda k: (sum(k), tuple(-e for e in k)))


def from_presentation(H, N: Optional[int] = None) -> TruncatedCompleteAlgebra:
    """Tables of a truncated series algebra (or a connected Hopf presentation)."""
    if isinstance(H, HopfPresentation):
        A, hopf = H.A, H
    else:
        A, hopf = H, None
    if A.truncation is None:
        raise ValueError("needs a truncated series algebra")
    N = A.truncation if N is None else N
    if N > A.truncation:
        raise ValueError("level above the truncation of the presentation")
    keys = _monomial_keys(A, N)
    pos = {k: i for i, k in enumerate(keys)}
    mul = {}
    for a in keys:
        for b in keys:
            if sum(a) + sum(b) > N:
                continue
            r = A.mul_keys(a, b)
            if r is None:
                continue
            s, k = r
            mul[(pos[a], pos[b])] = {pos[k]: A.field(s)}
    cop = None
    if hopf is not None:
        cop = {}
        for k in keys:
            d = hopf.Delta(A.monomial(k))
            entry = {}
            for c, (k1, k2) in A.split_legs(d, 2):
                if sum(k1) + sum(k2) <= N:
                    entry[(pos[k1], pos[k2])] = c
            cop[pos[k]] = entry
    from .superalgebra import format_monomial
    labels = [format_monomial(A, k) or "1" for k in keys]
    return TruncatedCompleteAlgebra(A.field, labels, [A.key_parity(k) for k in keys], [sum(k) for k in keys],
                                    mul, cop, N, pos[A._zero_key], hopf)


def continuous_dual(A, N: Optional[int] = None) -> TableHyperAlgebra:
    """``A^*`` = union of ``(A / m^{n+1})^*``, as a hyper-super-algebra."""
    if not isinstance(A, TruncatedCompleteAlgebra):
        A = from_presentation(A, N)
    if A.cop is None:
        raise ValueError("the continuous dual needs a coproduct on A")
    mul, cop = {}, {}
    for k, entry in A.cop.items():
        for (i, j), c in entry.items():
            if c != 0:
                mul.setdefault((i, j), {})[k] = c
    for (i, j), entry in A.mul.items():
        for k, c in entry.items():
            if c != 0:
                cop.setdefault(k, {})[(i, j)] = c
    labels = [dual_label(l) for l in A.labels]
    return TableHyperAlgebra(A.field, labels, A.parities, A.degrees, mul, cop, A.N, A.unit)


def dual_of_hyper(C: HyperSuperAlgebra, N: Optional[int] = None) -> TruncatedCompleteAlgebra:
    """``C^*``: product from the coproduct of ``C`` and coproduct from its product."""
    T = C if isinstance(C, TableHyperAlgebra) and N is None else as_table(C, N)
    mul, cop = {}, {}
    for k in T.basis:
        for (i, j), c in T.coproduct(k).items():
            if c != 0:
                mul.setdefault((i, j), {})[k] = c
    for (i, j), entry in T.mul_table.items():
        for k, c in entry.items():
            if c != 0:
                cop.setdefault(k, {})[(i, j)] = c
    labels = [dual_label(l) for l in T.labels]
    return TruncatedCompleteAlgebra(T.field, labels, T.pars, T.levels, mul, cop, T.N, T.unit_key)


def _norm(table: dict) -> dict:
    return {k: {kk: v for kk, v in e.items() if v != 0} for k, e in table.items() if any(v != 0 for v in e.values())}


def roundtrip_check(X) -> Report:
    """``(A^*)^* = A`` or ``(C^*)^* = C`` compared table by table."""
    rep = Report()
    if isinstance(X, (TruncatedCompleteAlgebra, HopfPresentation)):
        A = X if isinstance(X, TruncatedCompleteAlgebra) else from_presentation(X)
        back = dual_of_hyper(continuous_dual(A))
        rep.add("product", _norm(back.mul) == _norm(A.mul))
        rep.add("coproduct", _norm(back.cop or {}) == _norm(A.cop or {}))
        rep.add("levels", back.degrees == A.degrees and back.parities == A.parities)
    else:
        T = as_table(X)
        back = continuous_dual(dual_of_hyper(T))
        rep.add("product", _norm(back.mul_table) == _norm(T.mul_table))
        rep.add("coproduct", _norm({k: back.coproduct(k) for k in back.basis}) ==
                _norm({k: T.coproduct(k) for k in T.basis}))
        rep.add("levels", back.levels == T.levels and back.pars == T.pars)
    return rep


def match_tables(C1: HyperSuperAlgebra, C2: HyperSuperAlgebra, mapping: dict) -> bool:
    """Whether ``mapping`` (keys of C1 -> keys of C2) carries both tables over."""
    F = C1.field
    keys = C1.keys_up_to(min(C1.N, C2.N))
    for a in keys:
        cop1 = {(mapping[x], mapping[y]): v for (x, y), v in C1.coproduct(a).items() if v != 0}
        if cop1 != {k: v for k, v in C2.coproduct(mapping[a]).items() if v != 0}:
            return False
        for b in keys:
            if C1.level(a) + C1.level(b) > min(C1.N, C2.N):
                continue
            m1 = {mapping[k]: v for k, v in C1.mul(a, b).items() if v != 0}
            if m1 != {k: v for k, v in C2.mul(mapping[a], mapping[b]).items() if v != 0}:
                return False
    return True


# ----------------------------------------------------- back to generators


def _sanitize(label: str, used: set) -> str:
    base = re.sub(r"[^A-Za-z0-9_]", "", label) or "t"
    if not base[0].isalpha():
        base = "t" + base
    name, i = base, 1
    while name in used:
        i += 1
        name = f"{base}{i}"
    used.add(name)
    return name


def present(A: TruncatedCompleteAlgebra, names: Optional[list] = None) -> HopfPresentation:
    """Recover a generator presentation of a table whose degree-1 part generates.

    The degree-1 basis elements become generators; the monomials in them
    must form a basis of ``A`` (checked by inverting the change of basis).
    """
    F = A.field
    gens_idx = [i for i, d in enumerate(A.degrees) if d == 1]
    used: set = set()
    if names is None:
        names = [_sanitize(A.labels[i], used) for i in gens_idx]
    S = SuperCommutativeAlgebra(F, [Generator(nm, A.parities[i]) for nm, i in zip(names, gens_idx)], truncation=A.N)
    keys = _monomial_keys(S, A.N)
    if len(keys) != A.dim:
        raise ValueError("degree-1 elements do not generate freely")

    def tmul(x: dict, y: dict) -> dict:
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in A.mul.get((i, j), {}).items():
                    out[k] = out.get(k, F.zero) + a * b * c
        return {k: v for k, v in out.items() if v != 0}

    # image of each monomial in table coordinates (product in declaration order)
    images = []
    for key in keys:
        v = {A.unit: F.one}
        for g, e in zip(gens_idx, key):
            for _ in range(e):
                v = tmul(v, {g: F.one})
        images.append(v)
    M = [[img.get(r, F.zero) for img in images] for r in range(A.dim)]  # columns = monomials
    Minv = inverse(M, F)

    def to_poly(vec: dict):
        coeffs = {}
        for col in range(len(keys)):
            s = F.zero
            for r, v in vec.items():
                s += Minv[col][r] * v
            if s != 0:
                coeffs[keys[col]] = s
        return S.element(coeffs)

    coproduct = {}
    for nm, g in zip(names, gens_idx):
        d = S.tensor_power(2).zero()
        for (i, j), c in (A.cop or {}).get(g, {}).items():
            d = d + S.tensor(to_poly({i: F.one}), to_poly({j: F.one})) * c
        coproduct[nm] = d
    law = GroupLaw(S, coproduct)
    return presentation_from_law(law)
