"""Command-line front end.

Every command prints a key-value report (sorted checks, no timings) or, for
``gallery`` and ``dualize``, a document.  Exit status: 0 when every check
passes, 1 when some check fails, 2 on unreadable input.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import __version__
from .core import Field, FieldError, Report
from .dump import DumpError, dump_tables, load_tables
from .duality import TruncatedCompleteAlgebra, continuous_dual, dual_of_hyper, from_presentation
from .hcp import build_B, build_C, check_affine, check_C_relations, check_hcp, eta_iso, gallery_gl
from .hopf import additive_law, check_group_law, check_hopf_axioms, group_law, multiplicative_law
from .hopfmod import (HopfModuleData, check_hopf_module, coinvariants, exterior_hopf, nu, random_hopf_module,
                      random_surjection_data, theta_retraction, xi_differs, xi_instance)
from .hyper import check_lie_axioms
from .io import SchemaError, digest, emit, hcp_from_doc, load_json, read_document
from .parse import ParseError

DEFAULT_LEVEL = 6


class InputError(Exception):
    pass


def _field_arg(text: str) -> Field:
    try:
        return Field.parse(text)
    except FieldError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None


def _load(text: str, kind: str, field: Optional[Field]):
    got, obj = read_document(text, field)
    if got != kind:
        raise SchemaError(f"expected a {kind!r} document, got {got!r}", "$.kind")
    return obj


class Outcome:
    def __init__(self, command: str, inputs: list):
        self.command = command
        self.inputs = inputs
        self.report = Report()
        self.info: list = []

    def render(self) -> str:
        lines = [f"tool: superhopf {__version__}", f"command: {self.command}"]
        lines.append(f"input.sha256: {digest(''.join(digest(t) for t in self.inputs))}")
        for k, v in self.info:
            lines.append(f"{k}: {v}")
        for r in sorted(self.report.results, key=lambda r: r.name):
            status = "pass" if r.passed else "fail"
            w = f" {r.witness}" if r.witness else ""
            lines.append(f"check.{r.name}: {status}{w}")
        lines.append(f"result: {'pass' if self.report.ok else 'fail'}")
        return "\n".join(lines) + "\n"


# --------------------------------------------------------------- commands


def cmd_check_hopf(args, out: Outcome):
    text = _read_input(args.file)
    out.inputs.append(text)
    H = _load(text, "hopf", args.field)
    level = None
    if H.A.truncation is not None:
        level = min(args.level, H.A.truncation)
    out.info.append(("presentation", H.name or "-"))
    out.info.append(("level", "exact" if level is None else level))
    out.report.extend(check_hopf_axioms(H, level))


def cmd_check_lie(args, out: Outcome):
    text = _read_input(args.file)
    out.inputs.append(text)
    g = _load(text, "lie", args.field)
    out.info.append(("dim", g.dim))
    out.report.extend(check_lie_axioms(g))


def _hcp(args, out: Outcome, path: str):
    text = _read_input(path)
    out.inputs.append(text)
    return _load_hcp(text, args)


def _load_hcp(text, args):
    doc = load_json(text)
    if not isinstance(doc, dict) or doc.get("kind") != "hcp":
        raise SchemaError("expected a 'hcp' document", "$.kind")
    return hcp_from_doc(doc, "$", args.field, args.level)


def cmd_check_hcp(args, out: Outcome):
    H = _hcp(args, out, args.file)
    out.info.append(("odd_dim", H.n))
    out.report.extend(check_hcp(H))
    out.report.extend(check_affine(H.F, level=2))
    out.report.extend(check_C_relations(build_C(H), level=2))


def cmd_build_b(args, out: Outcome):
    H = _hcp(args, out, args.file)
    B = build_B(H)
    P = B.presentation()
    doc = emit(P)
    out.info.append(("object.sha256", digest(doc)))
    out.report.extend(check_hopf_axioms(P), "B:")
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(doc)


def cmd_eta(args, out: Outcome):
    text = _read_input(args.hopf)
    out.inputs.append(text)
    O_G = _load(text, "hopf", args.field)
    H = _hcp(args, out, args.hcp)
    res = eta_iso(O_G, H)
    for g in sorted(res.images):
        out.info.append((f"eta.{g}", res.images[g].to_text()))
    out.report.extend(res.report)


def cmd_grouplaw(args, out: Outcome):
    text = _read_input(args.file)
    out.inputs.append(text)
    H = _load(text, "hopf", args.field)
    try:
        law = group_law(H)
    except ValueError as e:
        raise SchemaError(str(e), "$") from None
    for line in law.to_text().splitlines():
        name, series = line.split(" = ", 1)
        out.info.append((f"law.{name[2:]}", series))
    out.report.extend(check_group_law(law))


def cmd_hopfmod(args, out: Outcome):
    text = _read_input(args.file)
    out.inputs.append(text)
    kind, obj = read_document(text, args.field)
    if kind in ("comodule", "hopf-module"):
        if isinstance(obj, HopfModuleData):
            out.report.extend(check_hopf_module(obj), "module:")
        r = nu(obj)
        out.report.extend(r.report, "nu:")
        co = coinvariants(obj)
        out.info.append(("dim", obj.dim))
        out.info.append(("coinvariants.dim", co.dim))
        if isinstance(obj, HopfModuleData):
            out.report.extend(co.report)
            out.report.add("dimension_identity", obj.dim == co.dim * obj.R.dim,
                           "" if obj.dim == co.dim * obj.R.dim else f"{obj.dim} != {co.dim}*{obj.R.dim}")
    elif kind == "surjection":
        try:
            res = theta_retraction(obj)
        except ValueError as e:
            raise SchemaError(str(e), "$") from None
        out.report.extend(res.report)
        out.info.append(("xi_equals_ret", "no" if xi_differs(res, obj) else "yes"))
        for i, row in enumerate(res.Xi):
            out.info.append((f"Xi.row{i + 1}", ", ".join(x.to_text() for x in row)))
    else:
        raise SchemaError(f"hopfmod needs a comodule, hopf-module or surjection document, got {kind!r}", "$.kind")


def cmd_dualize(args, out: Outcome) -> str:
    text = _read_input(args.file)
    if text.lstrip().startswith("{"):
        H = _load(text, "hopf", args.field)
        if H.A.truncation is None:
            raise SchemaError("dualize needs a truncated presentation", "$.truncation")
        N = min(args.level, H.A.truncation)
        return dump_tables(continuous_dual(from_presentation(H, N)))
    obj = load_tables(text)
    if isinstance(obj, TruncatedCompleteAlgebra):
        return dump_tables(continuous_dual(obj))
    return dump_tables(dual_of_hyper(obj))


def cmd_gallery(args) -> str:
    F = args.field or Field(0)
    if args.kind == "gl":
        if len(args.params) != 2:
            raise InputError("gallery gl needs m and n")
        m, n = (int(x) for x in args.params)
        O_G, H = gallery_gl(m, n, F)
        return emit(H) if args.part == "hcp" else emit(O_G)
    if args.kind == "hopf-module":
        h = int(args.params[0]) if args.params else 1
        return emit(random_hopf_module(exterior_hopf([f"w{i + 1}" for i in range(h)], F), args.seed))
    if args.kind == "surjection":
        return emit(xi_instance(F) if args.params == ["xi"] else random_surjection_data(args.seed, F))
    if args.params:
        raise InputError(f"gallery {args.kind} takes no parameters")
    if args.kind == "additive":
        return emit(additive_law(("T",), (), args.level, F))
    return emit(multiplicative_law(args.level, F))


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=None, help="q or fp:<p> (p an odd prime)")
    common.add_argument("--out", default=None, help="write the output here instead of standard output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized instances")
    p = argparse.ArgumentParser(prog="superhopf", description="Exact checks for Hopf super-algebras.")
    p.add_argument("--version", action="version", version=f"superhopf {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, *positional, level_default=DEFAULT_LEVEL):
        sp = sub.add_parser(name, parents=[common])
        for pos in positional:
            sp.add_argument(pos)
        sp.add_argument("--level", type=int, default=level_default, help="truncation level N")
        return sp

    add("check-hopf", "file")
    add("check-lie", "file")
    add("check-hcp", "file", level_default=None)
    add("build-b", "file", level_default=None).add_argument("--emit", default=None,
                                                            help="also write the presentation of B here")
    add("eta", "hopf", "hcp", level_default=None)
    add("dualize", "file")
    add("grouplaw", "file")
    add("hopfmod", "file")
    g = add("gallery", "kind")
    g.add_argument("params", nargs="*")
    g.add_argument("--part", choices=["group", "hcp"], default="group")
    for sp in sub.choices.values():
        sp.set_defaults(parser=sp)
    return p


_GALLERY = ("gl", "additive", "multiplicative", "hopf-module", "surjection")

_REPORTS = {
    "check-hopf": cmd_check_hopf,
    "check-lie": cmd_check_lie,
    "check-hcp": cmd_check_hcp,
    "build-b": cmd_build_b,
    "eta": cmd_eta,
    "grouplaw": cmd_grouplaw,
    "hopfmod": cmd_hopfmod,
}


def run(argv: Optional[list] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    if args.command == "gallery" and args.kind not in _GALLERY:
        args.parser.error(f"unknown gallery kind {args.kind!r}")
    if args.level is not None and args.level < 0:
        args.parser.error("--level must be non-negative")
    code = 0
    try:
        if args.command in _REPORTS:
            out = Outcome(args.command, [])
            _REPORTS[args.command](args, out)
            text = out.render()
            code = 0 if out.report.ok else 1
        elif args.command == "dualize":
            text = cmd_dualize(args, Outcome(args.command, []))
        else:
            text = cmd_gallery(args)
    except (SchemaError, ParseError, DumpError, InputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, FieldError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
