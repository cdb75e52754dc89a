"""Scalars, super vector spaces and exact linear algebra.

Everything in the package is exact.  A :class:`Field` wraps one of sympy's
ground domains (``QQ`` or ``GF(p)`` with ``p`` an odd prime) and is the only
place where scalars are created or printed.  Characteristic 2 is refused
because the Koszul sign rule degenerates there.

Super vector spaces are finite lists of named, homogeneous basis vectors.
Tensor products carry the Koszul swap; the pairing between a space and its
dual carries no sign at all::

    <v* (x) w*, v (x) w> = v*(v) w*(w)
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix


class FieldError(ValueError):
    pass


class Field:
    """Exact ground field: the rationals or a prime field of odd order."""

    def __init__(self, characteristic: int = 0):
        characteristic = int(characteristic)
        if characteristic == 0:
            self.domain = QQ
        elif characteristic == 2:
            raise FieldError("characteristic 2 is not supported")
        elif characteristic < 0 or not isprime(characteristic):
            raise FieldError(f"{characteristic} is not a prime")
        else:
            self.domain = GF(characteristic, symmetric=False)
        self.p = characteristic
        self.zero = self.domain.zero
        self.one = self.domain.one

    @classmethod
    def rational(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Read ``q`` or ``fp:<p>``."""
        text = text.strip().lower()
        if text in ("q", "qq", "rational"):
            return cls(0)
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise FieldError(f"bad field specification {text!r}") from None
            return cls(p)
        raise FieldError(f"bad field specification {text!r}")

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, x):
        """Coerce ints, Fractions, ``'a/b'`` strings and domain elements."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            num = self.domain.convert(x.numerator)
            den = self.domain.convert(x.denominator)
            if den == self.zero:
                raise FieldError(f"{x} has no image in {self}")
            return num / den
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return self.domain.convert(x)
        try:
            return self.domain.convert(x)
        except Exception:
            # elements of another field, e.g. an mpq into GF(p)
            return self(Fraction(int(x.numerator), int(x.denominator)))

    def inv(self, x):
        if x == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return self.one / x

    def format(self, x) -> str:
        """Canonical text: reduced ``a/b`` or a residue in ``[0, p)``."""
        if self.p:
            return str(int(x) % self.p)
        num, den = int(x.numerator), int(x.denominator)
        return str(num) if den == 1 else f"{num}/{den}"

    def to_fraction(self, x) -> Fraction:
        if self.p:
            return Fraction(int(x) % self.p)
        return Fraction(int(x.numerator), int(x.denominator))

    def elements(self) -> list:
        """All elements of a prime field (for exhaustive small checks)."""
        if not self.p:
            raise FieldError("the rationals are infinite")
        return [self(i) for i in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(QQ)" if self.p == 0 else f"Field(F_{self.p})"

    def spec(self) -> str:
        return "q" if self.p == 0 else f"fp:{self.p}"


QQF = Field(0)


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    r = 1
    for i in range(k):
        r = r * (n - i) // (i + 1)
    return r


# ---------------------------------------------------------------- spaces


@dataclass(frozen=True)
class SuperSpace:
    """A finite-dimensional super vector space with a named basis."""

    basis: tuple  # tuple of (name, parity)

    def __post_init__(self):
        names = [b[0] for b in self.basis]
        if len(set(names)) != len(names):
            raise ValueError("duplicate basis names")
        for _, par in self.basis:
            if par not in (0, 1):
                raise ValueError("parity must be 0 or 1")

    @classmethod
    def of(cls, even: Iterable[str] = (), odd: Iterable[str] = ()) -> "SuperSpace":
        return cls(tuple((n, 0) for n in even) + tuple((n, 1) for n in odd))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def sdim(self) -> tuple:
        ev = sum(1 for _, p in self.basis if p == 0)
        return (ev, self.dim - ev)

    @property
    def names(self) -> list:
        return [b[0] for b in self.basis]

    def parity(self, name: str) -> int:
        for n, p in self.basis:
            if n == name:
                return p
        raise KeyError(name)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def dual(self) -> "SuperSpace":
        return SuperSpace(tuple((n + "*", p) for n, p in self.basis))

    def even_part(self) -> "SuperSpace":
        return SuperSpace(tuple(b for b in self.basis if b[1] == 0))

    def odd_part(self) -> "SuperSpace":
        return SuperSpace(tuple(b for b in self.basis if b[1] == 1))


def tensor_spaces(V: SuperSpace, W: SuperSpace) -> SuperSpace:
    """``V (x) W`` with basis ``v(x)w`` of parity ``|v| + |w|``."""
    return SuperSpace(tuple((f"{a}⊗{b}", (p + q) % 2) for a, p in V.basis for b, q in W.basis))


@dataclass
class SuperVector:
    space: SuperSpace
    coeffs: dict  # name -> scalar

    def parity(self) -> int:
        pars = {self.space.parity(n) for n, c in self.coeffs.items() if c != 0}
        if len(pars) > 1:
            raise ValueError("vector is not homogeneous")
        return pars.pop() if pars else 0


def koszul_sign(p: int, q: int) -> int:
    return -1 if (p & q & 1) else 1


def koszul_swap(v: SuperVector, w: SuperVector):
    """``tau(v (x) w) = (-1)^{|v||w|} w (x) v`` for homogeneous ``v, w``.

    Returns ``(sign, w, v)``.
    """
    return koszul_sign(v.parity(), w.parity()), w, v


def pair(phi: SuperVector, v: SuperVector, field: Field):
    """Evaluate ``phi`` in ``V*`` on ``v`` in ``V`` (basis names ``x*``)."""
    total = field.zero
    for name, c in phi.coeffs.items():
        base = name[:-1] if name.endswith("*") else name
        if base in v.coeffs:
            total += c * v.coeffs[base]
    return total


def pair_tensor(phis: Sequence[SuperVector], vs: Sequence[SuperVector], field: Field):
    """``<f1 (x) ... (x) fk, v1 (x) ... (x) vk>`` as the plain product."""
    total = field.one
    for phi, v in zip(phis, vs):
        total *= pair(phi, v, field)
    return total


@dataclass
class SuperMap:
    """Linear map given by a matrix (rows index the codomain basis)."""

    domain: SuperSpace
    codomain: SuperSpace
    matrix: list
    parity: int = 0

    def __post_init__(self):
        if len(self.matrix) != self.codomain.dim or any(len(r) != self.domain.dim for r in self.matrix):
            raise ValueError("matrix shape does not match the spaces")
        for i, (_, pi) in enumerate(self.codomain.basis):
            for j, (_, pj) in enumerate(self.domain.basis):
                if self.matrix[i][j] != 0 and (pi - pj - self.parity) % 2:
                    raise ValueError("map does not have the declared parity")

    def __call__(self, v: SuperVector) -> SuperVector:
        out = {}
        for i, (name, _) in enumerate(self.codomain.basis):
            s = 0
            for j, (src, _) in enumerate(self.domain.basis):
                c = v.coeffs.get(src)
                if c is not None and self.matrix[i][j] != 0:
                    s = s + self.matrix[i][j] * c
            if s != 0:
                out[name] = s
        return SuperVector(self.codomain, out)

    def transpose(self) -> "SuperMap":
        """Dual map ``W* -> V*``; no sign, matching the unsigned pairing."""
        m = [[self.matrix[i][j] for i in range(self.codomain.dim)] for j in range(self.domain.dim)]
        return SuperMap(self.codomain.dual(), self.domain.dual(), m, self.parity)


# ---------------------------------------------------------- check reports


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str = ""

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        w = f" witness={self.witness}" if self.witness else ""
        return f"{self.name}: {status}{w}"


@dataclass
class Report:
    results: list = dc_field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str = "") -> CheckResult:
        r = CheckResult(name, bool(passed), witness)
        self.results.append(r)
        return r

    def extend(self, other: "Report", prefix: str = "") -> None:
        for r in other.results:
            self.results.append(CheckResult(prefix + r.name, r.passed, r.witness))

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def get(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "\n".join(r.line() for r in sorted(self.results, key=lambda r: r.name))


# ------------------------------------------------------ exact linear algebra


def _dm(rows: list, ncols: int, field: Field) -> DomainMatrix:
    return DomainMatrix([[field(x) for x in r] for r in rows] if rows else [], (len(rows), ncols), field.domain)


def rank(rows: list, ncols: int, field: Field) -> int:
    if not rows:
        return 0
    return _dm(rows, ncols, field).rank()


def nullspace(rows: list, ncols: int, field: Field) -> list:
    """Basis (list of coefficient lists) of ``{x : rows . x = 0}``."""
    if ncols == 0:
        return []
    if not rows:
        return [[field.one if i == j else field.zero for i in range(ncols)] for j in range(ncols)]
    ns = _dm(rows, ncols, field).nullspace()
    d = ns.rep.to_ddm()
    return [[field(x) for x in d[i]] for i in range(ns.shape[0])]


def solve(rows: list, rhs: list, field: Field):
    """One solution of ``rows . x = rhs`` or ``None``."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m = _dm(aug, ncols + 1, field)
    red, pivots = m.rref()
    red = red.rep.to_ddm()
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = field(red[i][ncols])
    return x


def inverse(rows: list, field: Field) -> list:
    n = len(rows)
    m = _dm(rows, n, field)
    inv = m.inv()
    d = inv.rep.to_ddm()
    return [[field(d[i][j]) for j in range(n)] for i in range(n)]


def matmul(a: list, b: list, field: Field) -> list:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for r in a:
        row = []
        for j in range(cols):
            s = field.zero
            for k in range(inner):
                if r[k] != 0 and b[k][j] != 0:
                    s += r[k] * b[k][j]
            row.append(s)
        out.append(row)
    return out


def identity(n: int, field: Field) -> list:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
