"""Text dump of structure constants, stable byte for byte.

Layout::

    kind hyper|complete
    field q|fp:<p>
    N <level>
    unit <index>
    basis <count>
    <index> <parity> <level> <label>
    product
    level <L>
    <i> <j> <k> <c>          e_i e_j contains c e_k
    coproduct
    level <L>
    <i> <j> <k> <c>          Delta(e_k) contains c e_i (x) e_j

Quadruples are grouped by ``L = level(i) + level(j)`` and sorted.  Swapping
the ``product`` and ``coproduct`` sections of a dump gives the dump of the
dual object.
"""
from __future__ import annotations

from .core import Field
from .hyper import HyperSuperAlgebra, TableHyperAlgebra, as_table
from .duality import TruncatedCompleteAlgebra


class DumpError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"{message} at line {line}")
        self.line = line


def _sections(field, levels, quads):
    by_level: dict = {}
    for (i, j, k), c in quads.items():
        if c == 0:
            continue
        by_level.setdefault(levels[i] + levels[j], []).append((i, j, k, c))
    out = []
    for L in sorted(by_level):
        out.append(f"level {L}")
        for i, j, k, c in sorted(by_level[L], key=lambda t: t[:3]):
            out.append(f"{i} {j} {k} {field.format(c)}")
    return out


def dump_tables(obj) -> str:
    if isinstance(obj, TruncatedCompleteAlgebra):
        kind, F, N, unit = "complete", obj.field, obj.N, obj.unit
        labels, pars, levels = obj.labels, obj.parities, obj.degrees
        prod = {(i, j, k): c for (i, j), e in obj.mul.items() for k, c in e.items()}
        cop = {(i, j, k): c for k, e in (obj.cop or {}).items() for (i, j), c in e.items()}
    else:
        T = obj if isinstance(obj, TableHyperAlgebra) else as_table(obj)
        kind, F, N, unit = "hyper", T.field, T.N, T.unit_key
        labels, pars, levels = T.labels, T.pars, T.levels
        prod = {(i, j, k): c for (i, j), e in T.mul_table.items() for k, c in e.items()}
        cop = {(i, j, k): c for k in T.basis for (i, j), c in T.coproduct(k).items()}
    lines = [f"kind {kind}", f"field {F.spec()}", f"N {N}", f"unit {unit}", f"basis {len(labels)}"]
    for i, (p, l, lab) in enumerate(zip(pars, levels, labels)):
        lines.append(f"{i} {p} {l} {lab}")
    lines.append("product")
    lines += _sections(F, levels, prod)
    lines.append("coproduct")
    lines += _sections(F, levels, cop)
    return "\n".join(lines) + "\n"


def load_tables(text: str):
    lines = text.splitlines()
    pos = 0

    def take(prefix):
        nonlocal pos
        if pos >= len(lines) or not lines[pos].startswith(prefix):
            raise DumpError(f"expected {prefix!r}", pos + 1)
        v = lines[pos][len(prefix):].strip()
        pos += 1
        return v

    kind = take("kind ")
    F = Field.parse(take("field "))
    N = int(take("N "))
    unit = int(take("unit "))
    n = int(take("basis "))
    labels, pars, levels = [], [], []
    for _ in range(n):
        if pos >= len(lines):
            raise DumpError("truncated basis", pos + 1)
        parts = lines[pos].split(" ", 3)
        if len(parts) != 4:
            raise DumpError("bad basis line", pos + 1)
        pars.append(int(parts[1]))
        levels.append(int(parts[2]))
        labels.append(parts[3])
        pos += 1
    tables = {"product": {}, "coproduct": {}}
    current = None
    while pos < len(lines):
        ln = lines[pos].strip()
        pos += 1
        if not ln:
            continue
        if ln in tables:
            current = ln
            continue
        if ln.startswith("level "):
            continue
        parts = ln.split()
        if current is None or len(parts) != 4:
            raise DumpError("bad quadruple", pos)
        i, j, k = (int(x) for x in parts[:3])
        tables[current][(i, j, k)] = F(parts[3])
    mul, cop = {}, {}
    for (i, j, k), c in tables["product"].items():
        mul.setdefault((i, j), {})[k] = c
    for (i, j, k), c in tables["coproduct"].items():
        cop.setdefault(k, {})[(i, j)] = c
    if kind == "hyper":
        return TableHyperAlgebra(F, labels, pars, levels, mul, cop, N, unit)
    if kind == "complete":
        return TruncatedCompleteAlgebra(F, labels, pars, levels, mul, cop or None, N, unit)
    raise DumpError(f"unknown kind {kind!r}", 1)
