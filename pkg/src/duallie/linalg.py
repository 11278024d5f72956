"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`, vectors are plain tuples of
fractions and :class:`Matrix` is an immutable dense row-major matrix.
:class:`Subspace` keeps its basis in reduced row echelon form, so two
subspaces compare equal exactly when they are the same subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Vector = tuple  # tuple[Fraction, ...]
ScalarLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionMismatch(ValueError):
    pass


def frac(x: ScalarLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(x)


def vector(xs: Iterable[ScalarLike]) -> Vector:
    return tuple(frac(x) for x in xs)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return not any(v)


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Fraction, v: Sequence[Fraction]) -> Vector:
    if not c:
        return (ZERO,) * len(v)
    return tuple(c * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def lincomb(coeffs: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], n: int) -> Vector:
    acc = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                acc[k] += c * a
    return tuple(acc)


@dataclass(frozen=True)
class Matrix:
    """Immutable rational matrix; ``ncols`` is kept so 0-row matrices have a shape."""

    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[ScalarLike]], ncols: int | None = None) -> "Matrix":
        rs = tuple(vector(r) for r in rows)
        if ncols is None:
            if not rs:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rs[0])
        for r in rs:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix rows")
        return cls(rs, ncols)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[ScalarLike]], nrows: int | None = None) -> "Matrix":
        cols = [vector(c) for c in cols]
        if nrows is None:
            if not cols:
                raise ValueError("nrows is required for a matrix without columns")
            nrows = len(cols[0])
        return cls(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(tuple((ZERO,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(unit_vector(n, i) for i in range(n)), n)

    @classmethod
    def diag(cls, entries: Sequence[ScalarLike]) -> "Matrix":
        n = len(entries)
        es = vector(entries)
        return cls(tuple(tuple(es[i] if i == j else ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        rows = []
        for brow in blocks:
            for i in range(brow[0].nrows):
                rows.append(tuple(x for b in brow for x in b.rows[i]))
        ncols = sum(b.ncols for b in blocks[0])
        return cls(tuple(rows), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple:
        return (len(self.rows), self.ncols)

    def is_square(self) -> bool:
        return len(self.rows) == self.ncols

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        if not self.rows:
            return Matrix(tuple(() for _ in range(self.ncols)), 0)
        return Matrix(tuple(zip(*self.rows)), len(self.rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(tuple(vadd(a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(tuple(vsub(a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-x for x in r) for r in self.rows), self.ncols)

    def scale(self, c: ScalarLike) -> "Matrix":
        c = frac(c)
        return Matrix(tuple(vscale(c, r) for r in self.rows), self.ncols)

    def __rmul__(self, c: ScalarLike) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            return Matrix(matmul_rows(self.rows, other.rows, other.ncols), other.ncols)
        return self.apply(other)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for a {self.shape} matrix")
        return tuple(dot(r, v) for r in self.rows)

    def trace(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.ncols)), ZERO)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def is_symmetric(self) -> bool:
        n = self.ncols
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i + 1, n)
        )

    def power(self, k: int) -> "Matrix":
        out = Matrix.identity(self.ncols)
        for _ in range(k):
            out = out @ self
        return out

    def rank(self) -> int:
        return len(rref(self)[1])

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.ncols
        aug = Matrix.block([[self, Matrix.identity(n)]])
        r, piv = rref(aug)
        if piv[:n] != tuple(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix(tuple(row[n:] for row in r.rows), n)

    def det(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        n = self.ncols
        d = ONE
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c]), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            d *= m[c][c]
            inv = ONE / m[c][c]
            for i in range(c + 1, n):
                f = m[i][c] * inv
                if f:
                    mi, mc = m[i], m[c]
                    for j in range(c, n):
                        mi[j] -= f * mc[j]
        return d

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows), len(cols))

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"


def matmul_rows(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]], ncols: int) -> tuple:
    out = []
    for ra in a:
        acc = [ZERO] * ncols
        for k, x in enumerate(ra):
            if not x:
                continue
            for j, y in enumerate(b[k]):
                if y:
                    acc[j] += x * y
        out.append(tuple(acc))
    return tuple(out)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def trace_product(a: Matrix, b: Matrix) -> Fraction:
    """trace(a @ b) without forming the product."""
    s = ZERO
    for i, ra in enumerate(a.rows):
        for k, x in enumerate(ra):
            if x:
                y = b.rows[k][i]
                if y:
                    s += x * y
    return s


def _rref_rows(rows: list, ncols: int) -> tuple:
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pr = m[r]
        inv = ONE / pr[c]
        if inv != ONE:
            for j in range(c, ncols):
                if pr[j]:
                    pr[j] *= inv
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    mi = m[i]
                    for j in range(c, ncols):
                        if pr[j]:
                            mi[j] -= f * pr[j]
        pivots.append(c)
        r += 1
    return m, tuple(pivots)


def rref(m: Matrix) -> tuple:
    """Reduced row echelon form and the pivot columns."""
    rows, pivots = _rref_rows(list(m.rows), m.ncols)
    return Matrix(tuple(tuple(r) for r in rows), m.ncols), pivots


def kernel(m: Matrix) -> "Subspace":
    """Right null space {x : m x = 0} as a subspace of Q^ncols."""
    rows, pivots = _rref_rows(list(m.rows), m.ncols)
    n = m.ncols
    pset = set(pivots)
    basis = []
    for f in range(n):
        if f in pset:
            continue
        v = [ZERO] * n
        v[f] = ONE
        for i, c in enumerate(pivots):
            if rows[i][f]:
                v[c] = -rows[i][f]
        basis.append(v)
    return span(basis, n)


def solve(m: Matrix, b: Sequence[Fraction]) -> Vector | None:
    """One particular solution of m x = b, or None when inconsistent."""
    aug = [tuple(r) + (bi,) for r, bi in zip(m.rows, vector(b))]
    rows, pivots = _rref_rows(aug, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [ZERO] * m.ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][m.ncols]
    return tuple(x)


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n stored by the RREF rows of any spanning set."""

    ambient_dim: int
    basis: tuple  # RREF rows, tuple of Vector
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> Matrix:
        return Matrix(self.basis, self.ambient_dim)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, (), ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)), tuple(range(n)))

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Remainder of v modulo the subspace (zero on the pivot columns)."""
        w = list(v)
        for row, c in zip(self.basis, self.pivots):
            f = w[c]
            if f:
                for j, a in enumerate(row):
                    if a:
                        w[j] -= f * a
        return tuple(w)

    def contains(self, v: Sequence[Fraction]) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length differs from ambient dimension")
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence[Fraction]) -> Vector:
        """Coefficients of v in the RREF basis; v must lie in the subspace."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[c] for c in self.pivots)

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other.contains(b) for b in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return span(self.basis + other.basis, self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def annihilator(self) -> Matrix:
        """Rows spanning the functionals that vanish on the subspace."""
        if not self.basis:
            return Matrix.identity(self.ambient_dim)
        k = kernel(self.matrix)
        return Matrix(k.basis, self.ambient_dim)

    def complement_indices(self) -> tuple:
        ps = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in ps)

    def complement(self) -> "Subspace":
        n = self.ambient_dim
        return span([unit_vector(n, i) for i in self.complement_indices()], n)

    def image(self, m: Matrix) -> "Subspace":
        return span([m.apply(b) for b in self.basis], m.nrows)

    def __repr__(self) -> str:
        rows = ", ".join("(" + ", ".join(str(x) for x in b) + ")" for b in self.basis)
        return f"Subspace(dim={self.dim}/{self.ambient_dim}: {rows})"


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.ambient_dim != v.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {u.ambient_dim} and {v.ambient_dim}")


def span(vectors: Iterable[Sequence[ScalarLike]], n: int | None = None) -> Subspace:
    vs = [vector(v) for v in vectors]
    if n is None:
        if not vs:
            raise ValueError("ambient dimension required for an empty spanning set")
        n = len(vs[0])
    for v in vs:
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)} in Q^{n}")
    if not vs:
        return Subspace.zero(n)
    rows, pivots = _rref_rows(vs, n)
    return Subspace(n, tuple(tuple(r) for r in rows[: len(pivots)]), pivots)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Intersection as the common kernel of both annihilators."""
    _check_ambient(u, v)
    if u.is_zero() or v.is_zero():
        return Subspace.zero(u.ambient_dim)
    stacked = Matrix(u.annihilator().rows + v.annihilator().rows, u.ambient_dim)
    return kernel(stacked)


def preimage(m: Matrix, target: Subspace, domain: Subspace | None = None) -> Subspace:
    """{x in domain : m x in target}."""
    if m.nrows != target.ambient_dim:
        raise DimensionMismatch("target lives in a different space")
    ann = target.annihilator()
    cond = ann @ m
    ker = kernel(cond)
    if domain is not None:
        ker = intersect(ker, domain)
    return ker


def signature(m: Matrix) -> tuple:
    """Inertia (n_plus, n_minus, n_zero) of a symmetric matrix by congruence."""
    if not m.is_symmetric():
        raise ValueError("signature needs a symmetric matrix")
    a = [list(r) for r in m.rows]
    pos = neg = 0
    while a:
        n = len(a)
        p = next((i for i in range(n) if a[i][i]), None)
        if p is None:
            hit = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j]), None)
            if hit is None:
                break
            i, j = hit
            # row/col i += row/col j makes a[i][i] = 2 a[i][j] != 0
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            p = i
        d = a[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [k for k in range(n) if k != p]
        a = [[a[r][c] - a[r][p] * a[p][c] / d for c in rest] for r in rest]
    return (pos, neg, m.ncols - pos - neg)


class EchelonBasis:
    """Incrementally grown basis in semi-echelon form (cheap membership tests)."""

    def __init__(self, n: int):
        self.n = n
        self.rows: list = []
        self.pivots: list = []

    def reduce(self, v: Sequence[Fraction]) -> list:
        w = list(v)
        for row, c in zip(self.rows, self.pivots):
            f = w[c]
            if f:
                for j, a in enumerate(row):
                    if a:
                        w[j] -= f * a
        return w

    def add(self, v: Sequence[Fraction]) -> bool:
        w = self.reduce(v)
        c = next((j for j, a in enumerate(w) if a), None)
        if c is None:
            return False
        inv = ONE / w[c]
        self.rows.append([a * inv for a in w])
        self.pivots.append(c)
        return True

    def __len__(self) -> int:
        return len(self.rows)

    def subspace(self) -> Subspace:
        return span(self.rows, self.n)
