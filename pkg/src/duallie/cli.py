"""Command-line driver.

Exit codes: 0 success, 1 validation or check failure, 2 I/O or parse error,
3 precondition violation (including non-nilpotent or non-triangularizable
Engel input).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import structure as st
from .algebra import LieAlgebra, validate
from .catalog import CATALOG, UnknownAlgebra, catalog
from .checks import run_checks, subspace_from_labels
from .constructions import dualize
from .engel import engel_triangularize
from .errors import DualLieError, NotNilpotent, ParseError, PreconditionError, StructuralError
from .fileformat import format_combination, format_dual_matrix, parse_document, parse_matrices, serialize
from .report import build_report, render

EXIT_OK, EXIT_INVALID, EXIT_IO, EXIT_PRECONDITION = 0, 1, 2, 3


@dataclass
class Outcome:
    code: int
    text: str


class _Fail(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None


def _load(path: str, require_valid: bool = True) -> tuple:
    """Algebra from a file path or ``catalog:<name>``; returns (algebra, line map)."""
    if path.startswith("catalog:"):
        try:
            L = catalog(path[len("catalog:"):])
        except UnknownAlgebra as exc:
            raise _Fail(EXIT_IO, str(exc.args[0])) from None
        lines = {}
    else:
        doc = parse_document(_read(path))
        L, lines = doc.algebra, doc.lines
    if require_valid:
        rep = validate(L)
        if not rep.ok:
            raise _Fail(EXIT_INVALID, "\n".join(_violation_lines(L, rep, lines)))
    return L, lines


def _violation_lines(L: LieAlgebra, rep, lines: dict) -> list:
    out = []
    for v, text in zip(rep.violations, rep.lines(L.basis)):
        refs = []
        if v.axiom == "eps_compatibility":
            i, j = v.witness
            for key in (("eps", i), ("bracket", min(i, j), max(i, j))):
                if key in lines:
                    refs.append(str(lines[key]))
        elif v.axiom == "eps_nilpotent" and ("eps", v.witness[0]) in lines:
            refs.append(str(lines[("eps", v.witness[0])]))
        elif v.axiom == "jacobi":
            i, j, k = v.witness
            for a, b in ((i, j), (j, k), (i, k)):
                if ("bracket", a, b) in lines:
                    refs.append(str(lines[("bracket", a, b)]))
        out.append(text + (f" [lines {', '.join(refs)}]" if refs else ""))
    return out


def cmd_validate(args) -> Outcome:
    L, lines = _load(args.file, require_valid=False)
    rep = validate(L)
    if rep.ok:
        return Outcome(EXIT_OK, f"{L.name}: valid (dim {L.dim}, rank eps {L.eps_rank})")
    return Outcome(EXIT_INVALID, "\n".join([f"{L.name}: invalid"] + _violation_lines(L, rep, lines)))


def cmd_report(args) -> Outcome:
    L, _ = _load(args.file)
    return Outcome(EXIT_OK, render(build_report(L, seed=args.seed, trials=args.trials), args.format).rstrip("\n"))


def cmd_check(args) -> Outcome:
    L, _ = _load(args.file)
    levi = None
    if args.levi:
        labels = args.levi.replace(",", " ").split()
        try:
            levi = subspace_from_labels(L, labels)
        except StructuralError as exc:
            raise _Fail(EXIT_IO, str(exc)) from None
    rep = run_checks(L, trials=args.trials, seed=args.seed, levi=levi)
    head = f"{L.name}: {'all checks passed' if rep.ok else 'violations found'} (seed {args.seed}, trials {args.trials})"
    return Outcome(EXIT_OK if rep.ok else EXIT_INVALID, "\n".join([head] + rep.lines()))


def cmd_dualize(args) -> Outcome:
    L, _ = _load(args.file)
    D = dualize(L, args.p, name=args.name)
    text = serialize(D)
    if args.output:
        _write(args.output, text)
        return Outcome(EXIT_OK, f"wrote {args.output}")
    return Outcome(EXIT_OK, text.rstrip("\n"))


def cmd_catalog(args) -> Outcome:
    if args.action == "list":
        width = max(len(k) for k in CATALOG)
        lines = [f"{k.ljust(width)}  {e.description}" for k, e in CATALOG.items()]
        lines.append("families: abelian:n, glnD2:n, NnD2:n, TnD2:n")
        return Outcome(EXIT_OK, "\n".join(lines))
    if not args.name:
        raise _Fail(EXIT_IO, "catalog show needs a name")
    try:
        L = catalog(args.name)
    except UnknownAlgebra as exc:
        raise _Fail(EXIT_IO, str(exc.args[0])) from None
    text = serialize(L)
    if args.output:
        _write(args.output, text)
        return Outcome(EXIT_OK, f"wrote {args.output}")
    return Outcome(EXIT_OK, text.rstrip("\n"))


def cmd_line_ideals(args) -> Outcome:
    L, _ = _load(args.file)
    res = st.find_line_ideals(L)
    out = [f"{L.name}: conclusive={'true' if res.conclusive else 'false'}"]
    if res.all_lines:
        out.append("all lines are ideals")
    elif not res.lines:
        out.append("no one-dimensional ideals over Q")
    for W in res.lines:
        out.append("line " + format_combination(W.basis[0], L.basis))
    for W in res.families:
        if 1 < W.dim < L.dim:
            out.append(f"every line in a {W.dim}-dim common eigenspace: "
                       + ", ".join(format_combination(b, L.basis) for b in W.basis))
    return Outcome(EXIT_OK, "\n".join(out))


def cmd_min_ideal(args) -> Outcome:
    L, _ = _load(args.file)
    res = st.minimal_abelian_d2_ideal(L, seed=args.seed)
    out = [
        f"{L.name}: minimal abelian D2-ideal of dim {res.dim}",
        "basis: " + ", ".join(format_combination(b, L.basis) for b in res.subspace.basis),
        f"certified minimal: {'true' if res.certified_minimal else 'false'}",
        f"note: {res.note}",
    ]
    return Outcome(EXIT_OK, "\n".join(out))


def cmd_engel(args) -> Outcome:
    rank, named = parse_matrices(_read(args.file))
    try:
        res = engel_triangularize([M for _, M in named], rank, seed=args.seed)
    except NotNilpotent as exc:
        name = named[exc.index][0]
        return Outcome(EXIT_PRECONDITION, f"not nilpotent: {name}\nrealified char poly: {exc.char_poly}")
    out = ["basis change g:"]
    out += format_dual_matrix(res.change, "  ")
    for (name, _), C in zip(named, res.conjugated):
        out.append(f"g^-1 {name} g:")
        out += format_dual_matrix(C, "  ")
    return Outcome(EXIT_OK, "\n".join(out))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="duallie", description="Lie algebras with a dual-number structure")
    sub = ap.add_subparsers(dest="command", required=True)
    src_help = "algebra file, or catalog:<name>"

    p = sub.add_parser("validate", help="check the axioms")
    p.add_argument("file", help=src_help)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("report", help="full invariant report")
    p.add_argument("file", help=src_help)
    p.add_argument("--format", choices=("text", "tree"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(fn=cmd_report)

    p = sub.add_parser("check", help="randomized property suites")
    p.add_argument("file", help=src_help)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--levi", help="basis labels spanning a semisimple subalgebra to test as a Levi factor")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("dualize", help="tensor with D_p")
    p.add_argument("file", help=src_help)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--name")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_dualize)

    p = sub.add_parser("catalog", help="list or print catalog algebras")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("find-line-ideals", help="one-dimensional ideals over Q")
    p.add_argument("file", help=src_help)
    p.set_defaults(fn=cmd_line_ideals)

    p = sub.add_parser("min-abelian-ideal", help="minimal abelian D2-ideal of a solvable algebra")
    p.add_argument("file", help=src_help)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_min_ideal)

    p = sub.add_parser("engel", help="triangularize nilpotent D2-matrices")
    p.add_argument("file", help="matrix file")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_engel)
    return ap


def run(argv=None) -> Outcome:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _Fail as exc:
        return Outcome(exc.code, f"error: {exc}")
    except ParseError as exc:
        return Outcome(EXIT_IO, f"parse error: {exc}")
    except StructuralError as exc:
        return Outcome(EXIT_IO, f"malformed algebra: {exc}")
    except PreconditionError as exc:
        return Outcome(EXIT_PRECONDITION, f"precondition failed: {exc}")
    except DualLieError as exc:
        return Outcome(EXIT_INVALID, f"error: {exc}")


def main(argv=None) -> int:
    res = run(argv)
    stream = sys.stdout if res.code == EXIT_OK else sys.stderr
    if res.text:
        print(res.text, file=stream)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
