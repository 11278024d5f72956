"""Invariant reports: a nested ordered mapping rendered as text or as a key-value tree."""

from __future__ import annotations

from . import structure as st
from . import subspaces as sc
from .algebra import LieAlgebra, validate
from .checks import run_checks
from .errors import PreconditionError
from .fileformat import format_combination

REPORT_TRIALS = 20

_RANK_NOTE = (
    "rank of eps is 2 on the basis X, Y, eX, eY (a rank of 1 is sometimes quoted for this "
    "algebra); it is a free D2-module of rank 2 that is not a dualization"
)


def _vecs(L: LieAlgebra, U) -> list:
    return [format_combination(b, L.basis) for b in U.basis]


def known_notes(L: LieAlgebra) -> list:
    from .catalog import L4_paper

    notes = []
    if L.same_structure(L4_paper()):
        notes.append(_RANK_NOTE)
    return notes


def dualization_candidates(L: LieAlgebra) -> dict | None:
    """Fingerprint comparison with every dualization of a real algebra of dimension dim/2 <= 2."""
    from .catalog import abelian, aff1
    from .constructions import dualize

    if L.eps is None or L.p != 2 or not st.is_free_module(L) or L.dim > 4:
        return None
    m = L.dim // 2
    cands = {"abelian:1": abelian(1)} if m == 1 else {"abelian:2": abelian(2), "aff1": aff1()}
    duals = {f"{k}(x)D2": dualize(v) for k, v in cands.items()}
    ex = st.exclude_dualizations(L, duals)
    return {"candidates": {k: ("fingerprint equal" if v else "fingerprint differs") for k, v in ex.candidates.items()},
            "excluded": ex.excluded}


def build_report(L: LieAlgebra, seed: int = 0, trials: int = REPORT_TRIALS) -> dict:
    rep: dict = {}
    rep["algebra"] = {"name": L.name, "dim": L.dim, "basis": " ".join(L.basis), "p": L.p}
    v = validate(L)
    rep["validation"] = {"ok": v.ok, "violations": v.lines(L.basis)}
    if not v.ok:
        return rep
    fp = st.fingerprint(L)
    rep["fingerprint"] = fp.as_dict()
    rep["series"] = {
        "derived": [U.dim for U in sc.derived_series(L)],
        "lower_central": [U.dim for U in sc.lower_central_series(L)],
        "upper_central": [U.dim for U in sc.upper_central_series(L)],
    }
    rep["eps"] = {
        "rank": L.eps_rank,
        "image": _vecs(L, L.eps_image),
        "kernel_dim": L.eps_kernel.dim,
        "image_in_kernel": L.eps_image <= L.eps_kernel,
    }
    try:
        ess = st.essential(L)
        rep["essential"] = {"d": ess.d, "basis": [format_combination(b, L.basis) for b in ess.basis]}
    except PreconditionError as exc:
        rep["essential"] = {"skipped": str(exc)}
    rep["center"] = _vecs(L, sc.center(L))
    rep["radical"] = _vecs(L, st.radical(L))
    rep["nilradical"] = _vecs(L, st.nilradical(L, seed=seed))
    w = st.non_real_spectrum_witness(L)
    tri = {"triangular": fp.triangular}
    if w is not None:
        tri["non_real_spectrum_witness"] = L.basis[w[0]]
        tri["char_poly"] = str(w[1])
    rep["triangularity"] = tri
    li = st.find_line_ideals(L)
    rep["line_ideals"] = {
        "all_lines": li.all_lines,
        "lines": [] if li.all_lines else [format_combination(W.basis[0], L.basis) for W in li.lines],
        "eigenspaces": [U.dim for U in li.families],
        "conclusive": li.conclusive,
    }
    try:
        mi = st.minimal_abelian_d2_ideal(L, seed=seed)
        rep["minimal_abelian_d2_ideal"] = {
            "dim": mi.dim,
            "basis": _vecs(L, mi.subspace),
            "certified": mi.certified_minimal,
            "note": mi.note,
        }
    except PreconditionError as exc:
        rep["minimal_abelian_d2_ideal"] = {"skipped": str(exc)}
    dc = dualization_candidates(L)
    if dc is not None:
        rep["dualization_search"] = dc
    checks = run_checks(L, trials=trials, seed=seed)
    rep["checks"] = {"seed": seed, "trials": trials, "ok": checks.ok, "results": checks.lines()}
    rep["notes"] = known_notes(L)
    return rep


def _scalar(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, tuple)) and all(not isinstance(y, (dict, list, tuple)) for y in x):
        if all(isinstance(y, int) and not isinstance(y, bool) for y in x):
            return "[" + ", ".join(str(y) for y in x) + "]"
    return str(x)


def render_tree(rep: dict) -> str:
    """Indented ``key: value`` lines, two spaces per level; list items as ``- item``."""
    out: list = []

    def walk(node, depth: int) -> None:
        pad = "  " * depth
        for k, v in node.items():
            if isinstance(v, dict):
                out.append(f"{pad}{k}:")
                walk(v, depth + 1)
            elif isinstance(v, list) and v and not all(isinstance(y, int) and not isinstance(y, bool) for y in v):
                out.append(f"{pad}{k}:")
                for y in v:
                    out.append(f"{pad}  - {_scalar(y)}")
            elif isinstance(v, list) and not v:
                out.append(f"{pad}{k}: []")
            else:
                out.append(f"{pad}{k}: {_scalar(v)}")

    walk(rep, 0)
    return "\n".join(out) + "\n"


def render_text(rep: dict) -> str:
    out: list = []
    for section, body in rep.items():
        out.append(f"== {section}")
        if isinstance(body, dict):
            width = max((len(k) for k in body), default=0)
            for k, v in body.items():
                if isinstance(v, dict):
                    out.append(f"  {k}")
                    for kk, vv in v.items():
                        out.append(f"    {kk}: {_scalar(vv)}")
                elif isinstance(v, list) and v and not all(isinstance(y, int) for y in v):
                    out.append(f"  {k.ljust(width)} :")
                    out.extend(f"      {_scalar(y)}" for y in v)
                else:
                    out.append(f"  {k.ljust(width)} : {_scalar(v)}")
        elif isinstance(body, list):
            out.extend(f"  {_scalar(y)}" for y in body)
            if not body:
                out.append("  (none)")
        else:
            out.append(f"  {_scalar(body)}")
    return "\n".join(out) + "\n"


def render(rep: dict, fmt: str = "text") -> str:
    if fmt == "tree":
        return render_tree(rep)
    if fmt == "text":
        return render_text(rep)
    raise ValueError(f"unknown report format {fmt!r}")
