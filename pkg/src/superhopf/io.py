"""JSON definition documents: reading, writing and digests.

Every document is a JSON object with a ``kind`` field.  Writing uses sorted
keys and a fixed indentation, so emitting the same object twice gives the
same bytes and re-reading an emitted document reproduces the object.

Hopf presentation (``kind: hopf``)::

    {"kind": "hopf", "field": "q", "name": "...", "truncation": 4 | null,
     "generators": [{"name": "T", "parity": 0, "invertible": false,
                     "inverse_of": "<expr>"}, ...],
     "coproduct": {"T": [["T", "1"], ["1", "T"]]},
     "counit": {"T": "0"},
     "antipode": {"T": "-T"}}

``antipode`` may be omitted for connected truncated presentations; it is
then solved degree by degree.

Lie super-algebra (``kind: lie``)::

    {"kind": "lie", "field": "q", "basis": [["h", 0], ["e", 1]],
     "brackets": [["e", "e", {"h": "1"}]]}

Harish-Chandra pair (``kind: hcp``)::

    {"kind": "hcp", "group": <hopf document>, "odd_space": ["v", ...],
     "coaction": {"v": [["<O_F expr>", "u"], ...]},
     "bracket": [["v", "w", {"<generator>": "c"}]], "level": 4}

Comodules and Hopf modules over an exterior algebra (``kind: comodule`` or
``kind: hopf-module``); matrices are row-major scalar lists indexed by the
labels of the exterior basis (``1``, ``w1``, ``w1*w2``, ...)::

    {"kind": "hopf-module", "field": "q", "exterior": ["w1"],
     "space": [["m1", 0], ["m2", 1]],
     "coaction": {"1": [[...]], "w1": [[...]]},
     "action": {"1": [[...]], "w1": [[...]]}}

Surjection data (``kind: surjection``)::

    {"kind": "surjection", "big": <hopf>, "small": <hopf>,
     "pi": {"a11": "t1", ...}, "W": ["w1", "w2"], "K": [["a11", "a12"], ...],
     "incl": [[1], [0]], "s": [[0, 1]], "ret": [[1, 0]],
     "base": {"field": "q", "generators": [...]},
     "sigma": {"a11": "u1", ...}, "varrho": {"t1": "u1", ...}}
"""
from __future__ import annotations

import hashlib
import json
from typing import Any

from .core import Field, FieldError, QQF, SuperSpace
from .parse import ParseError
from .superalgebra import Generator, SuperCommutativeAlgebra, SuperElement, format_monomial
from .hopf import HopfPresentation, antipode_oracle
from .hyper import LieSuperAlgebra
from .hcp import AffineGroupData, HCPData
from .hopfmod import Comodule, HopfModuleData, SurjectionData, exterior_hopf


class SchemaError(ValueError):
    """A document that does not match its schema; ``position`` is a JSON path or line:column."""

    def __init__(self, message: str, position: str):
        super().__init__(f"{position}: {message}")
        self.position = position


# ------------------------------------------------------------ raw reading


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(e.msg, f"line {e.lineno} column {e.colno}") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=True) + "\n"


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _need(doc, key, path, kind=None):
    if not isinstance(doc, dict):
        raise SchemaError("expected an object", path)
    if key not in doc:
        raise SchemaError(f"missing field {key!r}", path)
    v = doc[key]
    if kind is not None and not isinstance(v, kind):
        raise SchemaError(f"field {key!r} has the wrong type", f"{path}.{key}")
    return v


def _field(doc, path, default: Field = None) -> Field:
    spec = doc.get("field") if isinstance(doc, dict) else None
    if spec is None:
        return default or QQF
    try:
        return Field.parse(str(spec))
    except FieldError as e:
        raise SchemaError(str(e), f"{path}.field") from None


def _expr(alg: SuperCommutativeAlgebra, text, path) -> SuperElement:
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        text = str(text)
    if not isinstance(text, str):
        raise SchemaError("expected an expression string", path)
    try:
        return alg.parse(text)
    except ParseError as e:
        raise SchemaError(f"{e}", f"{path}[{e.position}]") from None
    except (KeyError, ValueError, ArithmeticError) as e:
        raise SchemaError(f"bad expression {text!r}: {e}", path) from None


def _scalar(F: Field, v, path):
    try:
        return F(str(v))
    except Exception:
        raise SchemaError(f"bad scalar {v!r}", path) from None


def _generators(doc, path) -> list:
    gens = _need(doc, "generators", path, list)
    out = []
    for i, g in enumerate(gens):
        p = f"{path}.generators[{i}]"
        if isinstance(g, str):
            g = {"name": g}
        name = _need(g, "name", p, str)
        parity = g.get("parity", 0)
        if parity not in (0, 1):
            raise SchemaError("parity must be 0 or 1", f"{p}.parity")
        out.append(Generator(name, parity, bool(g.get("invertible", False)), g.get("inverse_of")))
    return out


def _algebra(doc, path, F: Field) -> SuperCommutativeAlgebra:
    trunc = doc.get("truncation")
    if trunc is not None and (not isinstance(trunc, int) or trunc < 0):
        raise SchemaError("truncation must be a non-negative integer", f"{path}.truncation")
    gens = _generators(doc, path)
    try:
        return SuperCommutativeAlgebra(F, gens, truncation=trunc)
    except ParseError as e:
        raise SchemaError(str(e), f"{path}.generators") from None
    except ValueError as e:
        raise SchemaError(str(e), f"{path}.generators") from None


# ------------------------------------------------------------ Hopf documents


def hopf_from_doc(doc, path: str = "$", field: Field = None) -> HopfPresentation:
    F = _field(doc, path, field)
    A = _algebra(doc, path, F)
    cop_doc = _need(doc, "coproduct", path, dict)
    A2 = A.tensor_power(2)
    cop = {}
    for g, pairs in cop_doc.items():
        p = f"{path}.coproduct.{g}"
        if g not in A.index:
            raise SchemaError(f"unknown generator {g!r}", p)
        if not isinstance(pairs, list):
            raise SchemaError("expected a list of [left, right] pairs", p)
        total = A2.zero()
        for k, pr in enumerate(pairs):
            if not isinstance(pr, list) or len(pr) != 2:
                raise SchemaError("expected a [left, right] pair", f"{p}[{k}]")
            total = total + A.tensor(_expr(A, pr[0], f"{p}[{k}][0]"), _expr(A, pr[1], f"{p}[{k}][1]"))
        cop[g] = total
    cou_doc = _need(doc, "counit", path, dict)
    cou = {}
    for g, v in cou_doc.items():
        if g not in A.index:
            raise SchemaError(f"unknown generator {g!r}", f"{path}.counit.{g}")
        cou[g] = _scalar(F, v, f"{path}.counit.{g}")
    anti_doc = doc.get("antipode")
    anti = None
    if anti_doc is not None:
        if not isinstance(anti_doc, dict):
            raise SchemaError("antipode must be an object", f"{path}.antipode")
        anti = {}
        for g, v in anti_doc.items():
            if g not in A.index:
                raise SchemaError(f"unknown generator {g!r}", f"{path}.antipode.{g}")
            anti[g] = _expr(A, v, f"{path}.antipode.{g}")
    try:
        H = HopfPresentation(A, cop, cou, anti, name=str(doc.get("name", "")))
    except ValueError as e:
        raise SchemaError(str(e), path) from None
    if anti is None:
        if not H.is_connected():
            raise SchemaError("antipode required for presentations that are not connected and truncated", path)
        H.antipode = antipode_oracle(H)
    return H


def _split_pairs(H: HopfPresentation, t: SuperElement) -> list:
    A, F = H.A, H.field
    out = []
    for c, (k1, k2) in A.split_legs(t, 2):
        left = format_monomial(A, k1) or "1"
        right = format_monomial(A, k2) or "1"
        if c != 1:
            left = f"{F.format(c)}*{left}" if left != "1" else F.format(c)
        out.append([left, right])
    return out


def hopf_to_doc(H: HopfPresentation) -> dict:
    A, F = H.A, H.field
    gens = []
    for g in A.generators:
        e = {"name": g.name, "parity": g.parity}
        if g.invertible:
            e["invertible"] = True
        if g.inverse_of:
            e["inverse_of"] = g.inverse_of
        gens.append(e)
    return {
        "kind": "hopf",
        "field": F.spec(),
        "name": H.name,
        "truncation": A.truncation,
        "generators": gens,
        "coproduct": {g: _split_pairs(H, t) for g, t in H.coproduct.items()},
        "counit": {g: F.format(v) for g, v in H.counit.items()},
        "antipode": {g: v.to_text() for g, v in H.antipode_images().items()},
    }


# -------------------------------------------------------------- Lie documents


def lie_from_doc(doc, path: str = "$", field: Field = None) -> LieSuperAlgebra:
    F = _field(doc, path, field)
    basis = _need(doc, "basis", path, list)
    bas = []
    for i, b in enumerate(basis):
        if not (isinstance(b, list) and len(b) == 2 and isinstance(b[0], str) and b[1] in (0, 1)):
            raise SchemaError("expected [name, parity]", f"{path}.basis[{i}]")
        bas.append((b[0], b[1]))
    names = {b[0] for b in bas}
    brackets = {}
    for i, entry in enumerate(doc.get("brackets", [])):
        p = f"{path}.brackets[{i}]"
        if not (isinstance(entry, list) and len(entry) == 3 and isinstance(entry[2], dict)):
            raise SchemaError("expected [x, y, {z: c}]", p)
        x, y, comb = entry
        for nm in [x, y, *comb]:
            if nm not in names:
                raise SchemaError(f"unknown basis element {nm!r}", p)
        brackets[(x, y)] = {z: _scalar(F, c, f"{p}.{z}") for z, c in comb.items()}
    try:
        return LieSuperAlgebra(F, bas, brackets)
    except ValueError as e:
        raise SchemaError(str(e), path) from None


def lie_to_doc(g: LieSuperAlgebra) -> dict:
    F = g.field
    return {
        "kind": "lie",
        "field": F.spec(),
        "basis": [[n, p] for n, p in g.basis],
        "brackets": [[g.names[i], g.names[j], {g.names[k]: F.format(c) for k, c in sorted(v.items())}]
                     for (i, j), v in sorted(g.br.items())],
    }


# -------------------------------------------------------------- HCP documents


def hcp_from_doc(doc, path: str = "$", field: Field = None, level: int = None) -> HCPData:
    F = _field(doc, path, field)
    group = _need(doc, "group", path, dict)
    O_F = hopf_from_doc(group, f"{path}.group", F)
    odd = _need(doc, "odd_space", path, list)
    if not all(isinstance(v, str) for v in odd):
        raise SchemaError("odd_space must list names", f"{path}.odd_space")
    N = level if level is not None else doc.get("level", 4)
    if not isinstance(N, int) or N < 1:
        raise SchemaError("level must be a positive integer", f"{path}.level")
    try:
        Fd = AffineGroupData(O_F, N)
    except ValueError as e:
        raise SchemaError(str(e), f"{path}.group") from None
    coaction = {}
    for v, pairs in _need(doc, "coaction", path, dict).items():
        p = f"{path}.coaction.{v}"
        if not isinstance(pairs, list):
            raise SchemaError("expected a list of [expr, name] pairs", p)
        items = []
        for k, pr in enumerate(pairs):
            if not (isinstance(pr, list) and len(pr) == 2 and isinstance(pr[1], str)):
                raise SchemaError("expected [expr, name]", f"{p}[{k}]")
            items.append((_expr(O_F.A, pr[0], f"{p}[{k}][0]"), pr[1]))
        coaction[v] = items
    bracket = {}
    br = doc.get("bracket", [])
    if isinstance(br, dict):
        br = [[*k.split(","), v] for k, v in br.items()]
    for i, entry in enumerate(br):
        p = f"{path}.bracket[{i}]"
        if not (isinstance(entry, list) and len(entry) == 3 and isinstance(entry[2], dict)):
            raise SchemaError("expected [v, w, {generator: c}]", p)
        v, w, comb = entry
        bracket[(v.strip(), w.strip())] = {x: _scalar(F, c, f"{p}.{x}") for x, c in comb.items()}
    try:
        return HCPData(Fd, odd, coaction, bracket)
    except ValueError as e:
        raise SchemaError(str(e), path) from None


def hcp_to_doc(H: HCPData) -> dict:
    F = H.field
    O_F = H.F.O_F
    coaction = {}
    for i, v in enumerate(H.odd):
        coaction[v] = [[e.to_text(), H.odd[j]] for j, e in sorted(H.R[i].items())]
    bracket = [[H.odd[i], H.odd[j], {H.F.names[k]: F.format(c) for k, c in sorted(comb.items())}]
               for (i, j), comb in sorted(H.br.items())]
    return {"kind": "hcp", "field": F.spec(), "group": hopf_to_doc(O_F), "odd_space": list(H.odd),
            "coaction": coaction, "bracket": bracket, "level": H.F.D.N}


# ---------------------------------------------------------- hopfmod documents


def _matrix(F, rows, d_rows, d_cols, path):
    if not (isinstance(rows, list) and len(rows) == d_rows and all(isinstance(r, list) and len(r) == d_cols for r in rows)):
        raise SchemaError(f"expected a {d_rows}x{d_cols} matrix", path)
    return [[_scalar(F, x, f"{path}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(rows)]


def _alg_matrix(alg, rows, path):
    if not (isinstance(rows, list) and all(isinstance(r, list) for r in rows)):
        raise SchemaError("expected a matrix of expressions", path)
    return [[_expr(alg, x, f"{path}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(rows)]


def module_from_doc(doc, path: str = "$", field: Field = None):
    F = _field(doc, path, field)
    names = _need(doc, "exterior", path, list)
    R = exterior_hopf(names, F)
    space = _need(doc, "space", path, list)
    basis = []
    for i, b in enumerate(space):
        if not (isinstance(b, list) and len(b) == 2 and isinstance(b[0], str) and b[1] in (0, 1)):
            raise SchemaError("expected [name, parity]", f"{path}.space[{i}]")
        basis.append((b[0], b[1]))
    V = SuperSpace(tuple(basis))
    d = V.dim
    zero = [[F.zero] * d for _ in range(d)]

    def mats(key):
        src = _need(doc, key, path, dict)
        for lab in src:
            if lab not in R.labels:
                raise SchemaError(f"unknown exterior basis label {lab!r}", f"{path}.{key}")
        return [_matrix(F, src[lab], d, d, f"{path}.{key}.{lab}") if lab in src else [r[:] for r in zero]
                for lab in R.labels]

    C = mats("coaction")
    if doc.get("kind") == "hopf-module":
        return HopfModuleData(R, V, C, mats("action"))
    return Comodule(R, V, C)


def module_to_doc(M: Comodule) -> dict:
    F = M.R.field
    names = [lab for lab in M.R.labels if "*" not in lab and lab != "1"]
    doc = {"kind": "comodule", "field": F.spec(), "exterior": names,
           "space": [[n, p] for n, p in M.space.basis],
           "coaction": {lab: [[F.format(x) for x in r] for r in M.C[a]] for a, lab in enumerate(M.R.labels)}}
    if isinstance(M, HopfModuleData):
        doc["kind"] = "hopf-module"
        doc["action"] = {lab: [[F.format(x) for x in r] for r in M.L[a]] for a, lab in enumerate(M.R.labels)}
    return doc


def surjection_from_doc(doc, path: str = "$", field: Field = None) -> SurjectionData:
    F = _field(doc, path, field)
    big = hopf_from_doc(_need(doc, "big", path, dict), f"{path}.big", F)
    small = hopf_from_doc(_need(doc, "small", path, dict), f"{path}.small", F)
    base_doc = _need(doc, "base", path, dict)
    base = _algebra(base_doc, f"{path}.base", F)
    W = _need(doc, "W", path, list)
    n = len(W)
    K = _alg_matrix(big.A, _need(doc, "K", path), f"{path}.K")
    if len(K) != n or any(len(r) != n for r in K):
        raise SchemaError(f"expected a {n}x{n} matrix", f"{path}.K")
    incl_raw = _need(doc, "incl", path, list)
    k = len(incl_raw[0]) if incl_raw and isinstance(incl_raw[0], list) else 0
    incl = _matrix(F, incl_raw, n, k, f"{path}.incl")
    s = _matrix(F, _need(doc, "s", path, list), n - k, n, f"{path}.s")
    ret = _matrix(F, _need(doc, "ret", path, list), k, n, f"{path}.ret")

    def gens_map(key, src, dst):
        m = _need(doc, key, path, dict)
        out = {}
        for i, g in enumerate(src.names):
            if i in src.relation_gens:
                continue
            if g not in m:
                raise SchemaError(f"missing image of {g!r}", f"{path}.{key}")
            out[g] = _expr(dst, m[g], f"{path}.{key}.{g}")
        return out

    pi = gens_map("pi", big.A, small.A)
    sigma = gens_map("sigma", big.A, base)
    varrho = gens_map("varrho", small.A, base)
    space = SuperSpace(tuple((w, 1) for w in W))
    return SurjectionData(big, small, pi, space, K, incl, s, ret, base, sigma, varrho)


def surjection_to_doc(D: SurjectionData) -> dict:
    F = D.field
    fm = lambda M: [[F.format(x) for x in r] for r in M]
    base_gens = []
    for g in D.base.generators:
        e = {"name": g.name, "parity": g.parity}
        if g.invertible:
            e["invertible"] = True
        base_gens.append(e)
    tx = lambda m: {g: v.to_text() for g, v in m.items()}
    return {"kind": "surjection", "field": F.spec(), "big": hopf_to_doc(D.big), "small": hopf_to_doc(D.small),
            "pi": tx(D.pi), "W": D.W.names, "K": [[x.to_text() for x in r] for r in D.K],
            "incl": fm(D.incl), "s": fm(D.s), "ret": fm(D.ret),
            "base": {"generators": base_gens}, "sigma": tx(D.sigma), "varrho": tx(D.varrho)}


# -------------------------------------------------------------------- dispatch


_READERS = {
    "hopf": hopf_from_doc,
    "lie": lie_from_doc,
    "hcp": hcp_from_doc,
    "comodule": module_from_doc,
    "hopf-module": module_from_doc,
    "surjection": surjection_from_doc,
}


def read_document(text: str, field: Field = None):
    """Parse a document of any kind; returns ``(kind, object)``."""
    doc = load_json(text)
    if not isinstance(doc, dict):
        raise SchemaError("expected an object", "$")
    kind = doc.get("kind")
    if kind not in _READERS:
        raise SchemaError(f"unknown kind {kind!r}", "$.kind")
    return kind, _READERS[kind](doc, "$", field)


def to_document(obj) -> dict:
    if isinstance(obj, HopfPresentation):
        return hopf_to_doc(obj)
    if isinstance(obj, LieSuperAlgebra):
        return lie_to_doc(obj)
    if isinstance(obj, HCPData):
        return hcp_to_doc(obj)
    if isinstance(obj, Comodule):
        return module_to_doc(obj)
    if isinstance(obj, SurjectionData):
        return surjection_to_doc(obj)
    raise TypeError(f"unsupported object {type(obj).__name__}")


def emit(obj) -> str:
    return dumps(to_document(obj))
