"""Simultaneous triangularization of nilpotent operators on a free D2-module.

Target form: upper triangular with every diagonal entry in eR. At each step
we look for a free vector v = v0 + e*u with M v = e*c_M v for all inputs M
(v0 real, nonzero). Writing M = A + eB this is the system

    A v0 = 0,    A u + B v0 = c_M v0,

bilinear only through the products c_M v0. The search fixes the scalars c_M
one operator at a time from rational roots of determinantal pencils, then
solves linearly; dead ends backtrack. Such a vector need not exist even for
a nilpotent set (e.g. [[0, e], [1, 0]] squares to e*I but fixes no free
line), in which case :class:`NotTriangularizable` is raised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .dual import DualMatrix
from .errors import NotNilpotent, NotTriangularizable, StructuralError, VerificationError
from .linalg import ONE, ZERO, Matrix, Subspace, intersect, kernel, lincomb, solve, span, unit_vector
from .poly import Polynomial, char_poly, interpolate, poly_gcd, rational_roots


@dataclass(frozen=True)
class EngelResult:
    change: DualMatrix  # g, with g^{-1} M g triangular
    conjugated: tuple

    @property
    def diagonals(self) -> tuple:
        return tuple(tuple(M.entry(i, i) for i in range(M.shape[0])) for M in self.conjugated)


def certify_nilpotent(mats) -> None:
    for i, M in enumerate(mats):
        cp = char_poly(M.realify())
        n = 2 * M.shape[0]
        if cp != Polynomial.x() ** n:
            raise NotNilpotent(f"matrix {i} is not nilpotent: char poly {cp}", i, cp)


def _stack(blocks, ncols: int) -> Matrix:
    rows = [r for b in blocks for r in b.rows]
    return Matrix(tuple(rows), ncols)


def _v0_part(S: Subspace, m: int) -> Subspace:
    return span([b[:m] for b in S.basis], m)


def _system(mats, cs: dict, m: int) -> Matrix:
    """Equations in (v0, u) for operators with a fixed c; A v0 = 0 for all."""
    blocks = []
    zero = Matrix.zeros(m, m)
    for M in mats:
        blocks.append(Matrix.block([[M.a, zero]]))
    eye = Matrix.identity(m)
    for i, c in cs.items():
        M = mats[i]
        blocks.append(Matrix.block([[M.b - eye.scale(c), M.a]]))
    return _stack(blocks, 2 * m)


def _det_poly(rows_fn, k: int) -> Polynomial:
    """Determinant of a k x k matrix affine in c, via interpolation at k + 1 points."""
    pts = []
    for x in range(k + 1):
        pts.append((Fraction(x), rows_fn(Fraction(x)).det()))
    return interpolate(pts)


def _pencil_roots(M: DualMatrix, K: Subspace):
    """Rational c admitting v0 in K with (B - c) v0 in Im A; None if every c does."""
    m = M.shape[0]
    k = K.dim
    coker = span(M.a.columns(), m).annihilator()  # rows: functionals killing Im A
    Kb = Matrix.from_columns(K.basis, m)
    eye = Matrix.identity(m)
    base = coker @ M.b @ Kb
    shift = coker @ eye @ Kb
    g = Polynomial(())
    for rows in combinations(range(base.nrows), k):
        sub_b = base.submatrix(rows, range(k))
        sub_s = shift.submatrix(rows, range(k))
        p = _det_poly(lambda c: sub_b - sub_s.scale(c), k)
        g = poly_gcd(g, p) if not p.is_zero() else g
        if not p.is_zero() and g.degree == 0:
            return []
    if g.is_zero():
        return None
    return rational_roots(g)


def _families(mats, m: int) -> list:
    """Scalar assignments cs for which some free v has M_i v = e cs[i] v.

    Each returned cs comes with the solution space of (v0, u) pairs.
    """
    s = len(mats)
    out = []

    def record(cs: dict):
        S = kernel(_system(mats, cs, m))
        if not _v0_part(S, m).is_zero():
            key = tuple(sorted(cs.items()))
            if key not in [k for k, _ in out]:
                out.append((key, S))

    def branch(cs: dict, depth: int):
        if len(out) >= 12 or depth > 2 * s + 2:
            return
        S = kernel(_system(mats, cs, m))
        V0 = _v0_part(S, m)
        if V0.is_zero():
            return
        free = [i for i in range(s) if i not in cs]
        if not free:
            record(cs)
            return
        if V0.dim == 1:
            solved = _solve_line(V0.basis[0], cs, free)
            if solved is not None:
                record(solved)
            return
        for i in free:
            roots = _pencil_roots(mats[i], V0)
            if roots is None:
                continue
            for r in roots:
                branch({**cs, i: r}, depth + 1)
            return
        # every remaining pencil is singular on V0: any value is admissible, try a few
        for c in (ZERO, ONE, -ONE):
            branch({**cs, **{i: c for i in free}}, depth + 1)

    def _solve_line(v0, cs: dict, free: list):
        # unknowns (u, c_free): A u - c v0 = -B v0 (free) and A u = c v0 - B v0 (fixed)
        nf = len(free)
        rows, rhs = [], []
        for i in range(s):
            M = mats[i]
            bv = M.b.apply(v0)
            for r in range(m):
                row = list(M.a.rows[r]) + [ZERO] * nf
                if i in cs:
                    rhs.append(cs[i] * v0[r] - bv[r])
                else:
                    row[m + free.index(i)] = -v0[r]
                    rhs.append(-bv[r])
                rows.append(tuple(row))
        x = solve(Matrix(tuple(rows), m + nf), rhs)
        if x is None:
            return None
        full = dict(cs)
        for j, i in enumerate(free):
            full[i] = x[m + j]
        return full

    # c = 0 first keeps already-triangular inputs fixed
    record({i: ZERO for i in range(s)})
    branch({}, 0)
    return out


def _image_chain(mats, m: int) -> list:
    """V, AV, A^2 V, ... for the associative algebra A generated by the inputs,
    in (v0, u) coordinates, deepest term first."""
    reals = [M.realify() for M in mats]
    # realified coordinates interleave (e-part, real part) per entry
    perm = [2 * k + 1 for k in range(m)] + [2 * k for k in range(m)]

    def to_vu(x):
        return tuple(x[j] for j in perm)

    chain = [Subspace.full(2 * m)]
    cur = Subspace.full(2 * m)
    while True:
        nxt = span([R.apply(b) for b in cur.basis for R in reals], 2 * m)
        if nxt.is_zero() or nxt == cur:
            break
        chain.append(span([to_vu(b) for b in nxt.basis], 2 * m))
        cur = nxt
    return chain[::-1]


def _picks(S: Subspace, chain: list, m: int, rng: random.Random, tries: int):
    """Elements (v0, u) of S with v0 != 0, deepest image term first.

    Within a term: its RREF basis, then random combinations.
    """
    seen = set()
    for level in chain:
        T = intersect(S, level)
        gen = [b for b in T.basis]
        for _ in range(tries):
            gen.append(lincomb([Fraction(rng.randint(-3, 3)) for _ in T.basis], T.basis, 2 * m))
        for x in gen:
            if any(x[:m]) and x not in seen:
                seen.add(x)
                yield x[:m], x[m:]


def _basis_change(v0, u, m: int) -> DualMatrix:
    fill = [unit_vector(m, i) for i in range(m)]
    cols = [v0]
    for e in fill:
        if len(cols) == m:
            break
        if span(cols + [e], m).dim == len(cols) + 1:
            cols.append(e)
    a = Matrix.from_columns(cols, m)
    b = Matrix.from_columns([u] + [(ZERO,) * m] * (m - 1), m)
    return DualMatrix(a, b)


def _lower_right(M: DualMatrix) -> DualMatrix:
    m = M.shape[0]
    idx = range(1, m)
    return DualMatrix(M.a.submatrix(idx, idx), M.b.submatrix(idx, idx))


def _embed(h: DualMatrix) -> DualMatrix:
    k = h.shape[0]
    one = Matrix.identity(1)
    a = Matrix.block([[one, Matrix.zeros(1, k)], [Matrix.zeros(k, 1), h.a]])
    b = Matrix.block([[Matrix.zeros(1, 1), Matrix.zeros(1, k)], [Matrix.zeros(k, 1), h.b]])
    return DualMatrix(a, b)


def _triangularize(mats, m: int, rng: random.Random, tries: int) -> DualMatrix:
    if m == 0:
        return DualMatrix.identity(0)
    if not mats:
        return DualMatrix.identity(m)
    chain = _image_chain(mats, m)
    for _, S in _families(mats, m):
        for v0, u in _picks(S, chain, m, rng, tries):
            g = _basis_change(v0, u, m)
            if m == 1:
                return g
            conj = [M.conjugate_by(g) for M in mats]
            try:
                h = _triangularize([_lower_right(C) for C in conj], m - 1, rng, tries)
            except NotTriangularizable:
                continue
            return g @ _embed(h)
    raise NotTriangularizable(f"no free vector v with M v in eR v for all inputs (rank {m})")


def is_eps_triangular(M: DualMatrix) -> bool:
    return M.is_upper_triangular() and M.diagonal_in_eps()


def engel_triangularize(mats, m: int | None = None, seed: int = 0, tries: int = 6) -> EngelResult:
    """Basis change g with every g^{-1} M g upper triangular, diagonal in eR.

    ``tries`` random elements of each solution family are tried after the
    canonical ones before backtracking.
    """
    mats = list(mats)
    if m is None:
        if not mats:
            raise StructuralError("rank is required when no matrices are given")
        m = mats[0].shape[0]
    for M in mats:
        if M.shape != (m, m):
            raise StructuralError(f"matrix of shape {M.shape} on a module of rank {m}")
    certify_nilpotent(mats)
    g = _triangularize(mats, m, random.Random(seed), tries)
    conj = tuple(M.conjugate_by(g) for M in mats)
    if not all(is_eps_triangular(C) for C in conj):
        raise VerificationError("conjugated matrices are not eps-triangular")
    return EngelResult(g, conj)


# ---------------------------------------------------------------------------
# random test families


def _rand_matrix(rng: random.Random, m: int, keep, lo: int = -3, hi: int = 3) -> Matrix:
    return Matrix.from_rows([[rng.randint(lo, hi) if keep(i, j) else 0 for j in range(m)] for i in range(m)], m)


def random_invertible(rng: random.Random, m: int) -> DualMatrix:
    while True:
        a = _rand_matrix(rng, m, lambda i, j: True, -2, 2)
        if a.det():
            return DualMatrix(a, _rand_matrix(rng, m, lambda i, j: True, -2, 2))


def random_nilpotent_family(rng: random.Random, m: int, k: int, eps_diagonal: bool = False) -> tuple:
    """k conjugates g^{-1} T g of random triangular D2-matrices T with the same random g.

    The T are strictly upper triangular, or with ``eps_diagonal`` upper
    triangular with diagonal in eR. Returns (conjugated matrices, g).
    """
    g = random_invertible(rng, m)
    out = []
    for _ in range(k):
        a = _rand_matrix(rng, m, lambda i, j: j > i)
        b = _rand_matrix(rng, m, (lambda i, j: j >= i) if eps_diagonal else (lambda i, j: j > i))
        out.append(DualMatrix(a, b).conjugate_by(g.inverse()))
    return tuple(out), g
