"""Named example algebras with hand-derived invariant values.

Parametrized families are addressed as ``name:n`` (e.g. ``TnD2:3``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .algebra import LieAlgebra, direct_sum
from .constructions import ComplexAlgebraDef, d2_matrix_algebra, dualize, realify, semidirect
from .errors import StructuralError
from .linalg import Matrix


class UnknownAlgebra(KeyError):
    pass


def abelian(n: int, labels=None) -> LieAlgebra:
    labels = labels or (("X",) if n == 1 else tuple(f"X{k + 1}" for k in range(n)))
    return LieAlgebra(f"abelian:{n}", tuple(labels), ())


def aff1() -> LieAlgebra:
    return LieAlgebra.from_table("aff1", ["X", "Y"], {("X", "Y"): {"Y": 1}})


def heis3() -> LieAlgebra:
    return LieAlgebra.from_table("heis3", ["U", "V", "W"], {("U", "V"): {"W": 1}})


def sl2R() -> LieAlgebra:
    return LieAlgebra.from_table(
        "sl2R",
        ["H", "E", "F"],
        {("H", "E"): {"E": 2}, ("H", "F"): {"F": -2}, ("E", "F"): {"H": 1}},
    )


def su2() -> LieAlgebra:
    return LieAlgebra.from_table(
        "su2",
        ["A", "B", "C"],
        {("A", "B"): {"C": 1}, ("B", "C"): {"A": 1}, ("C", "A"): {"B": 1}},
    )


def e2() -> LieAlgebra:
    so2 = LieAlgebra("so2", ("J",), ())
    rot = Matrix.from_rows([[0, -1], [1, 0]])
    return semidirect(so2, [rot], 2, ("P1", "P2"), name="e2")


def L4_paper() -> LieAlgebra:
    return LieAlgebra.from_table(
        "L4_paper",
        ["X", "Y", "eX", "eY"],
        {("X", "Y"): {"eX": 1}},
        eps={"X": {"eX": 1}, "Y": {"eY": 1}},
    )


def borel_cx() -> ComplexAlgebraDef:
    """C + C^2 with T acting on C^2 by diag(1, i)."""
    return ComplexAlgebraDef(
        "borel_cx",
        ("T", "Z1", "Z2"),
        {("T", "Z1"): {"Z1": (1, 0)}, ("T", "Z2"): {"Z2": (0, 1)}},
    )


def sl2C() -> ComplexAlgebraDef:
    return ComplexAlgebraDef(
        "sl2C",
        ("H", "E", "F"),
        {("H", "E"): {"E": 2}, ("H", "F"): {"F": -2}, ("E", "F"): {"H": 1}},
    )


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    build: Callable[[], LieAlgebra]
    expected: dict = field(default_factory=dict)  # Fingerprint fields -> golden values
    description: str = ""


def _entries() -> dict:
    R = lambda: abelian(1, ("Z",))  # noqa: E731
    items = [
        CatalogEntry("abelian:1", lambda: abelian(1), dict(dim=1, rank_eps=0, essential_dim=1, nilpotent=True),
                     "the real line"),
        CatalogEntry("abelian:2", lambda: abelian(2), dict(dim=2, essential_dim=2, center_dim=2), "R^2"),
        CatalogEntry(
            "dual_numbers",
            lambda: dualize(abelian(1), 2, "dual_numbers"),
            dict(dim=2, rank_eps=1, essential_dim=1, nilpotent=True, free_d2_module=True),
            "D2 itself",
        ),
        CatalogEntry(
            "dual_numbers_plus_R",
            lambda: direct_sum(dualize(abelian(1), 2, "dual_numbers"), R(), "dual_numbers_plus_R"),
            dict(dim=3, rank_eps=1, essential_dim=2, nilpotent=True, free_d2_module=False),
            "D2 + R",
        ),
        CatalogEntry(
            "aff1",
            aff1,
            dict(dim=2, center_dim=0, nilradical_dim=1, killing_signature=(1, 0, 1), solvable=True, nilpotent=False),
            "[X, Y] = Y",
        ),
        CatalogEntry(
            "heis3",
            heis3,
            dict(dim=3, lcs_dims=(3, 1, 0), center_dim=1, killing_signature=(0, 0, 3), nilpotent=True),
            "[U, V] = W",
        ),
        CatalogEntry("sl2R", sl2R, dict(dim=3, killing_signature=(2, 1, 0), semisimple=True, radical_dim=0),
                     "split real form of sl2"),
        CatalogEntry("su2", su2, dict(dim=3, killing_signature=(0, 3, 0), semisimple=True), "compact form"),
        CatalogEntry(
            "e2",
            e2,
            dict(dim=3, killing_signature=(0, 1, 2), center_dim=0, nilradical_dim=2, triangular=False, solvable=True),
            "so(2) + R^2",
        ),
        CatalogEntry(
            "L4_paper",
            L4_paper,
            dict(dim=4, rank_eps=2, essential_dim=2, lcs_dims=(4, 1, 0), center_dim=2, nilpotent=True,
                 free_d2_module=True),
            "[X, Y] = eX with e: X -> eX, Y -> eY",
        ),
        CatalogEntry(
            "heis3_plus_R",
            lambda: direct_sum(heis3(), R(), "heis3_plus_R"),
            dict(dim=4, lcs_dims=(4, 1, 0), center_dim=2, nilpotent=True),
            "heis3 + R",
        ),
        CatalogEntry(
            "sl2R_dual",
            lambda: dualize(sl2R(), 2, "sl2R_dual"),
            dict(dim=6, rank_eps=3, essential_dim=3, radical_dim=3, nilradical_dim=3, center_dim=0,
                 killing_signature=(2, 1, 3), solvable=False, semisimple=False),
            "sl2R tensor D2",
        ),
        CatalogEntry(
            "su2_dual",
            lambda: dualize(su2(), 2, "su2_dual"),
            dict(dim=6, rank_eps=3, essential_dim=3, radical_dim=3, nilradical_dim=3, center_dim=0,
                 killing_signature=(0, 3, 3), solvable=False, semisimple=False),
            "su2 tensor D2",
        ),
        CatalogEntry(
            "e2_dual",
            lambda: dualize(e2(), 2, "e2_dual"),
            dict(dim=6, rank_eps=3, nilradical_dim=5, center_dim=0, killing_signature=(0, 1, 5), solvable=True,
                 triangular=False),
            "e2 tensor D2",
        ),
        CatalogEntry(
            "glnD2:2",
            lambda: d2_matrix_algebra(2, "gl", "glnD2:2"),
            dict(dim=8, rank_eps=4, radical_dim=5, nilradical_dim=5, center_dim=2, killing_signature=(2, 1, 5),
                 free_d2_module=True),
            "2x2 matrices over D2",
        ),
        CatalogEntry(
            "NnD2:3",
            lambda: d2_matrix_algebra(3, "n", "NnD2:3"),
            dict(dim=6, rank_eps=3, lcs_dims=(6, 2, 0), center_dim=2, nilpotent=True),
            "strictly upper triangular 3x3 over D2",
        ),
        CatalogEntry(
            "TnD2:2",
            lambda: d2_matrix_algebra(2, "t", "TnD2:2"),
            dict(dim=6, rank_eps=3, solvable=True, triangular=True, nilpotent=False),
            "upper triangular 2x2 over D2",
        ),
        CatalogEntry(
            "TnD2:3",
            lambda: d2_matrix_algebra(3, "t", "TnD2:3"),
            dict(dim=12, rank_eps=6, solvable=True, triangular=True),
            "upper triangular 3x3 over D2",
        ),
        CatalogEntry(
            "borel_cx_realified",
            lambda: realify(borel_cx(), "borel_cx_realified"),
            dict(dim=6, nilradical_dim=4, center_dim=0, solvable=True, triangular=False),
            "C + C^2, T acting by diag(1, i), over R",
        ),
        CatalogEntry(
            "sl2C_realified",
            lambda: realify(sl2C(), "sl2C_realified"),
            dict(dim=6, semisimple=True, killing_signature=(3, 3, 0)),
            "sl2C over R",
        ),
    ]
    return {e.name: e for e in items}


CATALOG = _entries()

_FAMILIES = {
    "abelian": (lambda n: abelian(n), 1, 16),
    "glnD2": (lambda n: d2_matrix_algebra(n, "gl", f"glnD2:{n}"), 1, 3),
    "NnD2": (lambda n: d2_matrix_algebra(n, "n", f"NnD2:{n}"), 2, 5),
    "TnD2": (lambda n: d2_matrix_algebra(n, "t", f"TnD2:{n}"), 1, 4),
}


def names() -> list:
    return list(CATALOG)


def catalog(name: str) -> LieAlgebra:
    """Build a catalog algebra by name; families accept ``family:n``."""
    if name in CATALOG:
        return CATALOG[name].build()
    fam, _, arg = name.partition(":")
    if fam in _FAMILIES and arg:
        build, lo, hi = _FAMILIES[fam]
        try:
            n = int(arg)
        except ValueError:
            raise UnknownAlgebra(f"bad parameter in {name!r}") from None
        if not lo <= n <= hi:
            raise StructuralError(f"{fam} is available for {lo} <= n <= {hi}")
        return build(n)
    raise UnknownAlgebra(f"unknown catalog algebra {name!r}")
