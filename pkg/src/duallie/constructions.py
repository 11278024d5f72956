"""Builders: dualization by truncated polynomial rings, semidirect sums,
realification of algebras over the Gaussian rationals, and D2-matrix algebras."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import LieAlgebra, validate
from .dual import DualMatrix
from .errors import NotARepresentation, PreconditionError, StructuralError
from .linalg import ZERO, Matrix, commutator, frac, solve


def eps_label(label: str, a: int) -> str:
    if a == 0:
        return label
    return f"e{label}" if a == 1 else f"e{a}{label}"


def dualize(L: LieAlgebra, p: int = 2, name: str | None = None) -> LieAlgebra:
    """L tensor R[e]/(e^p) on the basis x_1..x_n, e x_1..e x_n, ..., e^{p-1} x_n."""
    if L.eps is not None:
        raise PreconditionError(f"{L.name} already carries a dual structure")
    if p < 2:
        raise PreconditionError("nilpotency index must be at least 2")
    n = L.dim
    N = n * p
    structure = []
    for a in range(p):
        for b in range(p):
            if a + b >= p:
                continue
            for (i, j), v in L.structure:
                # [x_i e^a, x_j e^b] = e^(a+b) [x_i, x_j]
                ii, jj = a * n + i, b * n + j
                coeff = 1
                if ii > jj:
                    ii, jj, coeff = jj, ii, -1
                w = [ZERO] * N
                for k, c in enumerate(v):
                    w[(a + b) * n + k] = coeff * c
                structure.append(((ii, jj), w))
    merged: dict = {}
    for key, w in structure:
        if key in merged:
            merged[key] = [x + y for x, y in zip(merged[key], w)]
        else:
            merged[key] = w
    eps_cols = []
    for a in range(p):
        for i in range(n):
            col = [ZERO] * N
            if a + 1 < p:
                col[(a + 1) * n + i] = Fraction(1)
            eps_cols.append(col)
    eps = Matrix.from_columns(eps_cols, N) if N else None
    basis = tuple(eps_label(x, a) for a in range(p) for x in L.basis)
    suffix = "D2" if p == 2 else f"D{p}"
    return LieAlgebra(name or f"{L.name}(x){suffix}", basis, tuple(merged.items()), eps, p)


def semidirect(
    L: LieAlgebra,
    rho: Sequence[Matrix],
    v_dim: int,
    labels: Sequence[str] | None = None,
    name: str | None = None,
) -> LieAlgebra:
    """L + R^v_dim with [x, v] = rho(x) v and an abelian R^v_dim."""
    n = L.dim
    if len(rho) != n:
        raise StructuralError(f"need one matrix per basis element ({n}), got {len(rho)}")
    for m in rho:
        if m.shape != (v_dim, v_dim):
            raise StructuralError(f"representation matrix of shape {m.shape}, expected {(v_dim, v_dim)}")
    for i in range(n):
        for j in range(i + 1, n):
            lhs = Matrix.zeros(v_dim, v_dim)
            for k, c in enumerate(L.basis_bracket(i, j)):
                if c:
                    lhs = lhs + rho[k].scale(c)
            if lhs != commutator(rho[i], rho[j]):
                raise NotARepresentation(
                    f"rho[{L.basis[i]}, {L.basis[j]}] != [rho {L.basis[i]}, rho {L.basis[j]}]", (i, j)
                )
    labels = tuple(labels) if labels is not None else tuple(f"v{k + 1}" for k in range(v_dim))
    N = n + v_dim
    structure = [((i, j), tuple(v) + (ZERO,) * v_dim) for (i, j), v in L.structure]
    for i in range(n):
        for k in range(v_dim):
            col = rho[i].column(k)
            if any(col):
                structure.append(((i, n + k), (ZERO,) * n + tuple(col)))
    return LieAlgebra(name or f"{L.name}+V", tuple(L.basis) + labels, tuple(structure), None, 2)


# ---------------------------------------------------------------------------
# Gaussian rationals and realification


def gauss(z) -> tuple:
    """Normalize a Gaussian rational given as a number or an (re, im) pair."""
    if isinstance(z, tuple):
        return (frac(z[0]), frac(z[1]))
    if isinstance(z, complex):
        return (frac(z.real), frac(z.imag))
    return (frac(z), ZERO)


@dataclass(frozen=True)
class ComplexAlgebraDef:
    """Structure constants over Q(i): ``brackets[(a, b)] = {label: (re, im)}``."""

    name: str
    basis: tuple
    brackets: dict

    @property
    def dim(self) -> int:
        return len(self.basis)


def realify(cdef: ComplexAlgebraDef, name: str | None = None) -> LieAlgebra:
    """Underlying real algebra on x_1..x_n, i x_1..i x_n (labels 'i' + x)."""
    n = cdef.dim
    idx = {b: k for k, b in enumerate(cdef.basis)}
    table: dict = {}
    for (a, b), rhs in cdef.brackets.items():
        if a not in idx or b not in idx:
            raise StructuralError(f"unknown label in bracket ({a}, {b})")
        i, j = idx[a], idx[b]
        coeffs = [(ZERO, ZERO)] * n
        for lab, z in rhs.items():
            if lab not in idx:
                raise StructuralError(f"unknown label {lab!r}")
            re, im = gauss(z)
            k = idx[lab]
            coeffs[k] = (coeffs[k][0] + re, coeffs[k][1] + im)
        if i > j:
            i, j = j, i
            coeffs = [(-r, -s) for r, s in coeffs]
        if i == j:
            raise StructuralError(f"bracket of {a} with itself")
        table[(i, j)] = coeffs
    N = 2 * n

    def real_vec(coeffs, times_i: int) -> list:
        # multiply the complex vector by i^times_i, then split into real coordinates
        out = [ZERO] * N
        for k, (re, im) in enumerate(coeffs):
            for _ in range(times_i % 4):
                re, im = -im, re
            out[k] = re
            out[n + k] = im
        return out

    structure: dict = {}

    def put(r: int, s: int, v: list) -> None:
        if r == s:
            return
        if r > s:
            r, s, v = s, r, [-x for x in v]
        structure[(r, s)] = v

    for (i, j), coeffs in table.items():
        put(i, j, real_vec(coeffs, 0))  # [x_i, x_j]
        put(n + i, j, real_vec(coeffs, 1))  # [i x_i, x_j] = i c
        put(i, n + j, real_vec(coeffs, 1))  # [x_i, i x_j] = i c
        put(n + i, n + j, real_vec(coeffs, 2))  # [i x_i, i x_j] = -c
    basis = tuple(cdef.basis) + tuple(f"i{b}" for b in cdef.basis)
    L = LieAlgebra(name or f"{cdef.name}_R", basis, tuple(structure.items()))
    rep = validate(L)
    if not rep.ok:
        raise StructuralError(f"complex structure constants are not a Lie algebra: {rep.lines(basis)[0]}")
    return L


# ---------------------------------------------------------------------------
# Lie algebras of D2-matrices


def _flat(M: DualMatrix) -> tuple:
    return tuple(x for r in M.a.rows for x in r) + tuple(x for r in M.b.rows for x in r)


def matrix_lie_algebra(name: str, labels: Sequence[str], mats: Sequence[DualMatrix]) -> LieAlgebra:
    """Algebra spanned by D2-matrices with the commutator bracket and e = multiplication by e.

    The span must be closed under brackets and under multiplication by e.
    """
    n = len(mats)
    if not n:
        return LieAlgebra(name, (), ())
    cols = Matrix.from_columns([_flat(M) for M in mats])
    if cols.rank() != n:
        raise StructuralError("matrices are linearly dependent")

    def coords(M: DualMatrix) -> tuple:
        x = solve(cols, _flat(M))
        if x is None:
            raise StructuralError("span is not closed")
        return x

    structure = []
    for i in range(n):
        for j in range(i + 1, n):
            structure.append(((i, j), coords(mats[i].bracket(mats[j]))))
    eps = Matrix.from_columns([coords(M.times_eps()) for M in mats], n)
    return LieAlgebra(name, tuple(labels), tuple(structure), eps, 2)


def _unit(n: int, i: int, j: int, eps_part: bool) -> DualMatrix:
    E = Matrix.from_rows([[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)])
    Z = Matrix.zeros(n, n)
    return DualMatrix(Z, E) if eps_part else DualMatrix(E, Z)


def _positions(n: int, kind: str) -> list:
    if kind == "gl":
        return [(i, j) for i in range(n) for j in range(n)]
    if kind == "t":
        return [(i, j) for i in range(n) for j in range(i, n)]
    if kind == "n":
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    raise ValueError(kind)


def d2_matrix_algebra(n: int, kind: str, name: str) -> LieAlgebra:
    """gl(n, D2), upper triangular t(n, D2) or strictly upper triangular n(n, D2)."""
    pos = _positions(n, kind)
    mats = [_unit(n, i, j, False) for i, j in pos] + [_unit(n, i, j, True) for i, j in pos]
    labels = [f"E{i + 1}{j + 1}" for i, j in pos]
    labels = labels + ["e" + x for x in labels]
    return matrix_lie_algebra(name, labels, mats)
