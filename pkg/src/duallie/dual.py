"""Matrices over the dual numbers D2 = Q[e]/(e^2), stored as a + e*b."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import StructuralError
from .linalg import ZERO, Matrix, frac


@dataclass(frozen=True)
class DualMatrix:
    a: Matrix
    b: Matrix

    def __post_init__(self):
        if self.a.shape != self.b.shape:
            raise StructuralError(f"real part {self.a.shape} and e-part {self.b.shape} differ")

    @classmethod
    def from_rows(cls, a_rows, b_rows=None) -> "DualMatrix":
        a = Matrix.from_rows(a_rows)
        b = Matrix.from_rows(b_rows) if b_rows is not None else Matrix.zeros(*a.shape)
        return cls(a, b)

    @classmethod
    def identity(cls, m: int) -> "DualMatrix":
        return cls(Matrix.identity(m), Matrix.zeros(m, m))

    @classmethod
    def zeros(cls, m: int, n: int | None = None) -> "DualMatrix":
        n = m if n is None else n
        return cls(Matrix.zeros(m, n), Matrix.zeros(m, n))

    @classmethod
    def eps_scalar(cls, m: int, c=1) -> "DualMatrix":
        return cls(Matrix.zeros(m, m), Matrix.identity(m).scale(c))

    @property
    def shape(self) -> tuple:
        return self.a.shape

    @property
    def rank(self) -> int:
        return self.a.ncols

    def entry(self, i: int, j: int) -> tuple:
        return (self.a[i, j], self.b[i, j])

    def __add__(self, other: "DualMatrix") -> "DualMatrix":
        return DualMatrix(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DualMatrix") -> "DualMatrix":
        return DualMatrix(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "DualMatrix":
        return DualMatrix(-self.a, -self.b)

    def scale(self, re, ep=0) -> "DualMatrix":
        """Multiply by the dual number re + e*ep."""
        re, ep = frac(re), frac(ep)
        return DualMatrix(self.a.scale(re), self.b.scale(re) + self.a.scale(ep))

    def __matmul__(self, other: "DualMatrix") -> "DualMatrix":
        return DualMatrix(self.a @ other.a, self.a @ other.b + self.b @ other.a)

    def bracket(self, other: "DualMatrix") -> "DualMatrix":
        return self @ other - other @ self

    def times_eps(self) -> "DualMatrix":
        return DualMatrix(Matrix.zeros(*self.shape), self.a)

    def is_invertible(self) -> bool:
        return self.a.is_square() and self.a.det() != 0

    def inverse(self) -> "DualMatrix":
        ai = self.a.inverse()
        return DualMatrix(ai, -(ai @ self.b @ ai))

    def conjugate_by(self, g: "DualMatrix") -> "DualMatrix":
        """g^{-1} self g."""
        return g.inverse() @ self @ g

    def is_upper_triangular(self) -> bool:
        m, n = self.shape
        return all(not self.a[i, j] and not self.b[i, j] for i in range(m) for j in range(min(i, n)))

    def diagonal_in_eps(self) -> bool:
        return all(not self.a[i, i] for i in range(min(self.shape)))

    def realify(self) -> Matrix:
        """2m x 2n real matrix with one cell [[a, b], [0, a]] per entry."""
        m, n = self.shape
        rows = []
        for i in range(m):
            top, bottom = [], []
            for j in range(n):
                x, y = self.a[i, j], self.b[i, j]
                top += [x, y]
                bottom += [ZERO, x]
            rows += [tuple(top), tuple(bottom)]
        return Matrix(tuple(rows), 2 * n)

    @classmethod
    def from_realified(cls, r: Matrix) -> "DualMatrix":
        """Inverse of :meth:`realify`; rejects matrices that are not D2-linear."""
        if r.nrows % 2 or r.ncols % 2:
            raise StructuralError("realified matrix must have even shape")
        m, n = r.nrows // 2, r.ncols // 2
        a, b = [], []
        for i in range(m):
            ra, rb = [], []
            for j in range(n):
                x, y = r[2 * i, 2 * j], r[2 * i, 2 * j + 1]
                if r[2 * i + 1, 2 * j] != 0 or r[2 * i + 1, 2 * j + 1] != x:
                    raise StructuralError(f"cell ({i}, {j}) is not of the form [[a, b], [0, a]]")
                ra.append(x)
                rb.append(y)
            a.append(tuple(ra))
            b.append(tuple(rb))
        return cls(Matrix(tuple(a), n), Matrix(tuple(b), n))


def format_dual(x: Fraction, y: Fraction) -> str:
    """Text form of x + e*y: '0', '3/2', 'e', '-2e', '1+e', '1/2-3e'."""
    if not y:
        return str(x)
    if y == 1:
        ep = "e"
    elif y == -1:
        ep = "-e"
    else:
        ep = f"{y}e"
    if not x:
        return ep
    return f"{x}{ep}" if ep.startswith("-") else f"{x}+{ep}"
