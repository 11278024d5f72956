"""Finite-dimensional Lie algebras over Q with an optional dual structure operator.

An algebra is given by structure constants ``[x_i, x_j] = sum_k c_ij^k x_k``
stored only for ``i < j``; antisymmetry is implied by the storage. The dual
structure is a matrix ``eps`` on the same basis (column j is the image of
``x_j``) with nilpotency index ``p`` (2 for dual numbers). A missing ``eps``
means the zero operator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from .dual import DualMatrix
from .errors import NotAnIdeal, NotEpsInvariant, PluralIndexUnsupported, StructuralError
from .linalg import (
    ZERO,
    DimensionMismatch,
    Matrix,
    Subspace,
    frac,
    is_zero_vector,
    kernel,
    span,
    unit_vector,
    vector,
)


@dataclass(frozen=True)
class LieAlgebra:
    name: str
    basis: tuple
    structure: tuple  # sorted ((i, j), Vector) with i < j and nonzero Vector
    eps: Matrix | None = None
    p: int = 2

    def __post_init__(self):
        n = len(self.basis)
        if len(set(self.basis)) != n:
            raise StructuralError("basis labels must be distinct")
        clean = {}
        for (i, j), v in self.structure:
            if not (0 <= i < j < n):
                raise StructuralError(f"structure constant index ({i}, {j}) must satisfy 0 <= i < j < {n}")
            if (i, j) in clean:
                raise StructuralError(f"duplicate structure constants for ({i}, {j})")
            v = vector(v)
            if len(v) != n:
                raise StructuralError(f"bracket ({i}, {j}) has {len(v)} coordinates, expected {n}")
            if not is_zero_vector(v):
                clean[(i, j)] = v
        object.__setattr__(self, "structure", tuple(sorted(clean.items())))
        object.__setattr__(self, "basis", tuple(self.basis))
        if self.eps is not None:
            if self.eps.shape != (n, n):
                raise StructuralError(f"eps has shape {self.eps.shape}, expected {(n, n)}")
            if self.eps.is_zero():
                object.__setattr__(self, "eps", None)
        if self.p < 2:
            raise StructuralError("nilpotency index p must be at least 2")

    @classmethod
    def from_table(
        cls,
        name: str,
        basis: Sequence[str],
        brackets: Mapping = (),
        eps: Mapping | None = None,
        p: int = 2,
    ) -> "LieAlgebra":
        """Build from label-keyed data.

        ``brackets`` maps ``(a, b)`` label pairs to ``{label: coeff}``; a pair
        given in reverse basis order is negated. ``eps`` maps labels to
        ``{label: coeff}`` images.
        """
        basis = tuple(basis)
        idx = {b: i for i, b in enumerate(basis)}
        n = len(basis)

        def combo(d) -> list:
            v = [ZERO] * n
            for lab, c in dict(d).items():
                if lab not in idx:
                    raise StructuralError(f"unknown basis label {lab!r}")
                v[idx[lab]] += frac(c)
            return v

        table = {}
        for (a, b), rhs in dict(brackets).items():
            i, j = idx.get(a), idx.get(b)
            if i is None or j is None:
                raise StructuralError(f"unknown basis label in bracket ({a}, {b})")
            if i == j:
                raise StructuralError(f"bracket of {a} with itself is zero by antisymmetry")
            v = combo(rhs)
            if i > j:
                i, j, v = j, i, [-x for x in v]
            if (i, j) in table:
                raise StructuralError(f"bracket ({basis[i]}, {basis[j]}) given twice")
            table[(i, j)] = v
        e = None
        if eps:
            cols = [[ZERO] * n for _ in range(n)]
            for lab, img in dict(eps).items():
                if lab not in idx:
                    raise StructuralError(f"unknown basis label {lab!r}")
                cols[idx[lab]] = combo(img)
            e = Matrix.from_columns(cols, n)
        return cls(name, basis, tuple(table.items()), e, p)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _table(self) -> list:
        n = self.dim
        t = [[() for _ in range(n)] for _ in range(n)]
        for (i, j), v in self.structure:
            nz = tuple((k, c) for k, c in enumerate(v) if c)
            t[i][j] = nz
            t[j][i] = tuple((k, -c) for k, c in nz)
        return t

    @property
    def eps_matrix(self) -> Matrix:
        return self.eps if self.eps is not None else Matrix.zeros(self.dim, self.dim)

    @property
    def has_eps(self) -> bool:
        return self.eps is not None

    @cached_property
    def eps_rank(self) -> int:
        return self.eps.rank() if self.eps is not None else 0

    def index(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError:
            raise StructuralError(f"unknown basis label {label!r}") from None

    def e(self, label_or_index) -> tuple:
        """Coordinate vector of a basis element."""
        i = label_or_index if isinstance(label_or_index, int) else self.index(label_or_index)
        return unit_vector(self.dim, i)

    def vec(self, combo: Mapping) -> tuple:
        v = [ZERO] * self.dim
        for lab, c in combo.items():
            v[self.index(lab)] += frac(c)
        return tuple(v)

    def basis_bracket(self, i: int, j: int) -> tuple:
        v = [ZERO] * self.dim
        for k, c in self._table[i][j]:
            v[k] = c
        return tuple(v)

    def _check_vec(self, x) -> None:
        if len(x) != self.dim:
            raise DimensionMismatch(f"vector of length {len(x)} in an algebra of dimension {self.dim}")

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> tuple:
        self._check_vec(x)
        self._check_vec(y)
        out = [ZERO] * self.dim
        t = self._table
        for i, a in enumerate(x):
            if not a:
                continue
            ti = t[i]
            for j, b in enumerate(y):
                if not b or not ti[j]:
                    continue
                ab = a * b
                for k, c in ti[j]:
                    out[k] += ab * c
        return tuple(out)

    @cached_property
    def ad_basis(self) -> tuple:
        n = self.dim
        mats = []
        for i in range(n):
            rows = [[ZERO] * n for _ in range(n)]
            for j in range(n):
                for k, c in self._table[i][j]:
                    rows[k][j] = c
            mats.append(Matrix(tuple(tuple(r) for r in rows), n))
        return tuple(mats)

    def ad(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of y -> [x, y]."""
        self._check_vec(x)
        n = self.dim
        rows = [[ZERO] * n for _ in range(n)]
        for i, a in enumerate(x):
            if not a:
                continue
            for r, row in enumerate(self.ad_basis[i].rows):
                acc = rows[r]
                for j, c in enumerate(row):
                    if c:
                        acc[j] += a * c
        return Matrix(tuple(tuple(r) for r in rows), n)

    def apply_eps(self, x: Sequence[Fraction]) -> tuple:
        if self.eps is None:
            return (ZERO,) * self.dim
        return self.eps.apply(x)

    @cached_property
    def eps_image(self) -> Subspace:
        if self.eps is None:
            return Subspace.zero(self.dim)
        return span(self.eps.columns(), self.dim)

    @cached_property
    def eps_kernel(self) -> Subspace:
        return kernel(self.eps_matrix)

    def realified(self) -> "LieAlgebra":
        """Same real Lie algebra with the dual structure forgotten."""
        return LieAlgebra(self.name, self.basis, self.structure, None, 2)

    def renamed(self, name: str) -> "LieAlgebra":
        return LieAlgebra(name, self.basis, self.structure, self.eps, self.p)

    def transformed(self, g: Matrix, name: str | None = None) -> "LieAlgebra":
        """Same algebra on the basis given by the columns of the invertible matrix g."""
        n = self.dim
        if g.shape != (n, n):
            raise DimensionMismatch(f"basis change of shape {g.shape} for dimension {n}")
        gi = g.inverse()
        cols = g.columns()
        table = {}
        for i in range(n):
            for j in range(i + 1, n):
                table[(i, j)] = gi.apply(self.bracket(cols[i], cols[j]))
        e = None if self.eps is None else gi @ self.eps @ g
        return LieAlgebra(name or self.name, self.basis, tuple(table.items()), e, self.p)

    def with_eps(self, eps: Matrix | None, p: int = 2) -> "LieAlgebra":
        return LieAlgebra(self.name, self.basis, self.structure, eps, p)

    def require_dual(self, what: str) -> None:
        if self.eps is not None and self.p > 2:
            raise PluralIndexUnsupported(f"{what} assumes eps^2 = 0; got nilpotency index p = {self.p}")

    def same_structure(self, other: "LieAlgebra") -> bool:
        return (self.basis, self.structure, self.eps, self.p if self.eps is not None else 2) == (
            other.basis,
            other.structure,
            other.eps,
            other.p if other.eps is not None else 2,
        )

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name!r}, dim={self.dim}, rank_eps={self.eps_rank})"


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple  # basis indices
    detail: str


@dataclass
class ValidationReport:
    algebra: str
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self, basis: Sequence[str]) -> list:
        out = []
        for v in self.violations:
            labels = ", ".join(basis[i] for i in v.witness)
            out.append(f"{v.axiom}: ({labels}) {v.detail}")
        return out


def validate(L: LieAlgebra) -> ValidationReport:
    """Check Jacobi, eps^p = 0 and [eps x, y] = [x, eps y] = eps[x, y] on basis elements."""
    rep = ValidationReport(L.name)
    n = L.dim
    t = L._table
    for i in range(n):
        if t[i][i]:
            rep.violations.append(Violation("antisymmetry", (i,), "[x, x] != 0"))

    def br_vec(i: int, v: dict) -> dict:
        out: dict = {}
        for l, c in v.items():
            for k, d in t[i][l]:
                out[k] = out.get(k, ZERO) + c * d
        return out

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                acc: dict = {}
                for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = dict(t[b][c])
                    for m, val in br_vec(a, inner).items():
                        acc[m] = acc.get(m, ZERO) + val
                if any(acc.values()):
                    rep.violations.append(Violation("jacobi", (i, j, k), "cyclic sum is nonzero"))

    if L.eps is not None:
        e = L.eps
        pw = e.power(L.p)
        for j in range(n):
            if any(pw.column(j)):
                rep.violations.append(Violation("eps_nilpotent", (j,), f"eps^{L.p} does not vanish here"))
        ecols = e.columns()
        for i in range(n):
            ex = ecols[i]
            for j in range(n):
                lhs = L.bracket(ex, unit_vector(n, j))
                rhs = e.apply(L.basis_bracket(i, j))
                if lhs != rhs:
                    rep.violations.append(
                        Violation("eps_compatibility", (i, j), "[eps x, y] != eps [x, y]")
                    )
    return rep


# ---------------------------------------------------------------------------
# subquotients and sums


def is_ideal(L: LieAlgebra, I: Subspace) -> bool:
    return all(I.contains(L.bracket(L.e(i), b)) for b in I.basis for i in range(L.dim))


def quotient(L: LieAlgebra, I: Subspace, name: str | None = None) -> LieAlgebra:
    """L / I on the basis of standard vectors complementary to the pivots of I."""
    if I.ambient_dim != L.dim:
        raise DimensionMismatch("ideal lives in a different space")
    if not is_ideal(L, I):
        raise NotAnIdeal("subspace is not an ideal")
    if L.eps is not None and not all(I.contains(L.apply_eps(b)) for b in I.basis):
        raise NotEpsInvariant("ideal is not eps-invariant")
    keep = I.complement_indices()

    def project(v) -> tuple:
        r = I.reduce(v)
        return tuple(r[k] for k in keep)

    structure = []
    for a, i in enumerate(keep):
        for b in range(a + 1, len(keep)):
            j = keep[b]
            structure.append(((a, b), project(L.basis_bracket(i, j))))
    eps = None
    if L.eps is not None:
        eps = Matrix.from_columns([project(L.eps.column(i)) for i in keep], len(keep)) if keep else None
    return LieAlgebra(name or f"{L.name}/I", tuple(L.basis[i] for i in keep), tuple(structure), eps, L.p)


def _disambiguate(labels1: Sequence[str], labels2: Sequence[str]) -> tuple:
    taken = set(labels1)
    out = []
    for lab in labels2:
        new = lab
        k = 2
        while new in taken:
            new = f"{lab}_{k}"
            k += 1
        taken.add(new)
        out.append(new)
    return tuple(labels1) + tuple(out)


def direct_sum(L1: LieAlgebra, L2: LieAlgebra, name: str | None = None) -> LieAlgebra:
    n1, n2 = L1.dim, L2.dim
    n = n1 + n2
    structure = []
    for (i, j), v in L1.structure:
        structure.append(((i, j), tuple(v) + (ZERO,) * n2))
    for (i, j), v in L2.structure:
        structure.append(((i + n1, j + n1), (ZERO,) * n1 + tuple(v)))
    eps = None
    if L1.eps is not None or L2.eps is not None:
        eps = Matrix.block(
            [[L1.eps_matrix, Matrix.zeros(n1, n2)], [Matrix.zeros(n2, n1), L2.eps_matrix]]
        ) if n1 and n2 else (L1.eps_matrix if n1 else L2.eps_matrix)
    p = max(L1.p if L1.eps is not None else 2, L2.p if L2.eps is not None else 2)
    return LieAlgebra(name or f"{L1.name}+{L2.name}", _disambiguate(L1.basis, L2.basis), tuple(structure), eps, p)


def zero_algebra(name: str = "0") -> LieAlgebra:
    return LieAlgebra(name, (), ())


# ---------------------------------------------------------------------------
# morphisms and the adjoint representation


@dataclass(frozen=True)
class MorphismCheck:
    source: LieAlgebra
    target: LieAlgebra
    map: Matrix  # target.dim x source.dim


@dataclass(frozen=True)
class MorphismReport:
    is_morphism: bool
    is_injective: bool
    is_equivariant: bool
    bracket_witness: tuple | None  # (i, j) with map[x_i, x_j] != [map x_i, map x_j]
    eps_witness: int | None  # i with map eps x_i != eps map x_i


def verify_morphism(check: MorphismCheck) -> MorphismReport:
    S, T, f = check.source, check.target, check.map
    if f.shape != (T.dim, S.dim):
        raise DimensionMismatch(f"map has shape {f.shape}, expected {(T.dim, S.dim)}")
    cols = f.columns()
    witness = None
    for i in range(S.dim):
        for j in range(i + 1, S.dim):
            if f.apply(S.basis_bracket(i, j)) != T.bracket(cols[i], cols[j]):
                witness = (i, j)
                break
        if witness:
            break
    eps_w = None
    for i in range(S.dim):
        if f.apply(S.apply_eps(unit_vector(S.dim, i))) != T.apply_eps(cols[i]):
            eps_w = i
            break
    return MorphismReport(witness is None, f.rank() == S.dim, eps_w is None, witness, eps_w)


@dataclass(frozen=True)
class AdjointRepresentation:
    matrices: tuple  # ad(x_i) on the original basis
    faithful: bool
    free_basis: Matrix | None = None  # columns c_1..c_m, eps c_1..eps c_m
    dual_matrices: tuple | None = None  # ad(x_i) over D2 in the free basis


def free_basis(L: LieAlgebra) -> Matrix | None:
    """Columns c_1..c_m, eps c_1..eps c_m when L is a free D2-module, else None."""
    L.require_dual("free basis")
    n = L.dim
    if n == 0 or n % 2 or L.eps_rank != n // 2:
        return None
    img = L.eps_image
    gens = [unit_vector(n, k) for k in img.complement_indices()]
    return Matrix.from_columns(gens + [L.apply_eps(g) for g in gens], n)


def adjoint_representation(L: LieAlgebra) -> AdjointRepresentation:
    n = L.dim
    mats = L.ad_basis
    center = kernel(Matrix(tuple(r for m in mats for r in m.rows), n)) if n else Subspace.zero(0)
    faithful = center.is_zero()
    fb = free_basis(L) if L.eps is not None and L.p == 2 else None
    duals = None
    if fb is not None:
        m = n // 2
        inv = fb.inverse()
        duals = []
        for ad in mats:
            g = inv @ ad @ fb
            a = g.submatrix(range(m), range(m))
            b = g.submatrix(range(m, n), range(m))
            if not g.submatrix(range(m), range(m, n)).is_zero() or g.submatrix(range(m, n), range(m, n)) != a:
                raise StructuralError("adjoint operator does not commute with eps")
            duals.append(DualMatrix(a, b))
        duals = tuple(duals)
    return AdjointRepresentation(mats, faithful, fb, duals)
