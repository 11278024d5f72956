"""Line-oriented text formats for algebras and for lists of D2-matrices.

Algebra documents::

    # comment
    name: L4_paper
    basis: X Y eX eY
    bracket X Y = eX
    eps X = eX
    eps Y = eY
    p = 2

Bracket pairs are written in basis order, right-hand sides are sums of
``coeff*label`` terms with rational coefficients (``2*E - 1/2*F + H``).
Omitted brackets and eps images are zero.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LieAlgebra
from .dual import DualMatrix, format_dual
from .errors import ParseError
from .linalg import ZERO, Matrix

_LABEL = r"[A-Za-z_][A-Za-z0-9_]*"
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_TERM = re.compile(r"\s*([+-])?\s*(?:([^*\s+-][^*\s]*)\s*\*\s*)?(" + _LABEL + r")\s*")


def parse_rational(tok: str, line: int | None = None) -> Fraction:
    tok = tok.strip()
    if not _RATIONAL.match(tok):
        raise ParseError(f"malformed rational {tok!r}", line)
    num, _, den = tok.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {tok!r}", line)
    return Fraction(int(num), int(den) if den else 1)


def _combination(text: str, idx: dict, line: int) -> list:
    text = text.strip()
    n = len(idx)
    out = [ZERO] * n
    if text == "0":
        return out
    if not text:
        raise ParseError("empty right-hand side", line)
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot read term at {text[pos:]!r}", line)
        sign, coeff, label = m.groups()
        if sign is None and not first:
            raise ParseError(f"missing sign before {text[pos:].strip()!r}", line)
        if label not in idx:
            raise ParseError(f"unknown label {label!r}", line)
        c = parse_rational(coeff, line) if coeff is not None else Fraction(1)
        if sign == "-":
            c = -c
        out[idx[label]] += c
        pos = m.end()
        first = False
    return out


@dataclass
class ParsedDocument:
    algebra: LieAlgebra
    lines: dict = field(default_factory=dict)  # ("bracket", i, j) / ("eps", i) -> line number


def parse_document(text: str) -> ParsedDocument:
    name = None
    basis = None
    p = None
    brackets: dict = {}
    eps: dict = {}
    lines: dict = {}
    pending = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("name:"):
            if name is not None:
                raise ParseError("duplicate name line", no)
            name = line[5:].strip()
        elif line.startswith("basis:"):
            if basis is not None:
                raise ParseError("duplicate basis line", no)
            basis = line[6:].split()
            bad = [b for b in basis if not re.fullmatch(_LABEL, b)]
            if bad:
                raise ParseError(f"bad basis label {bad[0]!r}", no)
            if len(set(basis)) != len(basis):
                raise ParseError("repeated basis label", no)
        elif re.match(r"^p\s*=", line):
            if p is not None:
                raise ParseError("duplicate p line", no)
            tok = line.split("=", 1)[1].strip()
            if not tok.isdigit() or int(tok) < 2:
                raise ParseError(f"p must be an integer >= 2, got {tok!r}", no)
            p = int(tok)
        elif line.startswith("bracket ") or line.startswith("eps "):
            pending.append((no, line))
        else:
            raise ParseError(f"unrecognised line {line!r}", no)
    if basis is None:
        raise ParseError("missing basis line")
    idx = {b: k for k, b in enumerate(basis)}
    for no, line in pending:
        lhs, eq, rhs = line.partition("=")
        if not eq:
            raise ParseError("missing '='", no)
        words = lhs.split()
        if words[0] == "bracket":
            if len(words) != 3:
                raise ParseError("expected 'bracket A B = ...'", no)
            a, b = words[1], words[2]
            for lab in (a, b):
                if lab not in idx:
                    raise ParseError(f"unknown label {lab!r}", no)
            i, j = idx[a], idx[b]
            if i >= j:
                raise ParseError(f"pair ({a}, {b}) is not in basis order", no)
            if (i, j) in brackets:
                raise ParseError(f"duplicate bracket {a} {b}", no)
            brackets[(i, j)] = _combination(rhs, idx, no)
            lines[("bracket", i, j)] = no
        else:
            if len(words) != 2:
                raise ParseError("expected 'eps A = ...'", no)
            a = words[1]
            if a not in idx:
                raise ParseError(f"unknown label {a!r}", no)
            i = idx[a]
            if i in eps:
                raise ParseError(f"duplicate eps line for {a}", no)
            eps[i] = _combination(rhs, idx, no)
            lines[("eps", i)] = no
    n = len(basis)
    e = None
    if eps:
        cols = [eps.get(i, [ZERO] * n) for i in range(n)]
        e = Matrix.from_columns(cols, n)
    L = LieAlgebra(name or "unnamed", tuple(basis), tuple(brackets.items()), e, p or 2)
    return ParsedDocument(L, lines)


def parse(text: str) -> LieAlgebra:
    return parse_document(text).algebra


def format_combination(v, basis) -> str:
    parts = []
    for c, lab in zip(v, basis):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        term = lab if a == 1 else f"{a}*{lab}"
        parts.append((sign, term))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, term in parts[1:]:
        out += f" {sign} {term}"
    return out


def serialize(L: LieAlgebra) -> str:
    out = [f"name: {L.name}", "basis: " + " ".join(L.basis)]
    for (i, j), v in L.structure:
        out.append(f"bracket {L.basis[i]} {L.basis[j]} = {format_combination(v, L.basis)}")
    if L.eps is not None:
        for i in range(L.dim):
            col = L.eps.column(i)
            if any(col):
                out.append(f"eps {L.basis[i]} = {format_combination(col, L.basis)}")
    if L.eps is not None or L.p != 2:
        out.append(f"p = {L.p}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# D2-matrix lists
#
#   rank: 2
#   matrix M1
#   0 e
#   1 0


def parse_dual(tok: str, line: int | None = None) -> tuple:
    """'3/2', 'e', '-2e', '1+e', '1/2-3e' -> (real, eps) pair."""
    tok = tok.strip()
    if not tok.endswith("e"):
        return parse_rational(tok, line), ZERO
    body = tok[:-1]
    cut = max(body.rfind("+"), body.rfind("-"))
    if cut > 0:
        re_part, ep = body[:cut], body[cut:]
    else:
        re_part, ep = "", body
    if ep in ("", "+"):
        epv = Fraction(1)
    elif ep == "-":
        epv = Fraction(-1)
    else:
        epv = parse_rational(ep.rstrip("*"), line)
    rev = parse_rational(re_part, line) if re_part else ZERO
    return rev, epv


def parse_matrices(text: str) -> tuple:
    """Returns (rank, [(name, DualMatrix)])."""
    rank = None
    mats = []
    cur = None
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("rank:"):
            tok = line[5:].strip()
            if not tok.isdigit():
                raise ParseError(f"bad rank {tok!r}", no)
            rank = int(tok)
        elif line.startswith("matrix"):
            if rank is None:
                raise ParseError("rank line must come first", no)
            cur = (line[6:].strip() or f"M{len(mats) + 1}", [], no)
            mats.append(cur)
        else:
            if cur is None:
                raise ParseError("matrix row outside a matrix block", no)
            row = [parse_dual(t, no) for t in line.split()]
            if len(row) != rank:
                raise ParseError(f"row has {len(row)} entries, expected {rank}", no)
            cur[1].append(row)
    if rank is None:
        raise ParseError("missing rank line")
    out = []
    for name, rows, no in mats:
        if len(rows) != rank:
            raise ParseError(f"matrix {name} has {len(rows)} rows, expected {rank}", no)
        a = Matrix.from_rows([[x for x, _ in r] for r in rows], rank)
        b = Matrix.from_rows([[y for _, y in r] for r in rows], rank)
        out.append((name, DualMatrix(a, b)))
    return rank, out


def format_dual_matrix(M: DualMatrix, indent: str = "") -> list:
    m, n = M.shape
    cells = [[format_dual(*M.entry(i, j)) for j in range(n)] for i in range(m)]
    width = max((len(c) for r in cells for c in r), default=1)
    return [indent + " ".join(c.rjust(width) for c in r) for r in cells]


def serialize_matrices(rank: int, named) -> str:
    out = [f"rank: {rank}"]
    for name, M in named:
        out.append(f"matrix {name}")
        out.extend(format_dual_matrix(M))
    return "\n".join(out) + "\n"
