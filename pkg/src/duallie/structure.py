"""Structure theory: Killing form, radicals, class predicates and invariants.

Radical and nilradical are computed by single linear solves and then
re-verified against their defining properties; a failed re-check raises
:class:`~duallie.errors.VerificationError`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import subspaces as sc
from .algebra import LieAlgebra, quotient
from .errors import NotASubalgebra, NotSemisimple, NotSolvable, VerificationError
from .linalg import (
    ZERO,
    EchelonBasis,
    Matrix,
    Subspace,
    intersect,
    kernel,
    signature,
    span,
    trace_product,
    unit_vector,
)
from .poly import char_poly, factor_poly, rational_roots, real_root_count, real_roots_rational


# ---------------------------------------------------------------------------
# Killing form and class predicates


def killing_form(L: LieAlgebra) -> Matrix:
    ads = L.ad_basis
    n = L.dim
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = trace_product(ads[i], ads[j])
            rows[i][j] = rows[j][i] = v
    return Matrix(tuple(tuple(r) for r in rows), n)


def is_semisimple(L: LieAlgebra) -> bool:
    return killing_form(L).det() != 0


def is_solvable(L: LieAlgebra) -> bool:
    return sc.derived_series(L)[-1].is_zero()


def is_nilpotent(L: LieAlgebra) -> bool:
    return sc.lower_central_series(L)[-1].is_zero()


@dataclass(frozen=True)
class ClassFlags:
    abelian: bool
    nilpotent: bool
    solvable: bool
    semisimple: bool


def class_flags(L: LieAlgebra) -> ClassFlags:
    full = sc.full(L)
    abelian = sc.bracket_space(L, full, full).is_zero()
    return ClassFlags(abelian, is_nilpotent(L), is_solvable(L), is_semisimple(L))


def subalgebra(L: LieAlgebra, S: Subspace, name: str | None = None) -> LieAlgebra:
    """The Lie algebra S (a subalgebra of L) on its RREF basis; eps kept when S is eps-stable."""
    if not sc.is_subalgebra(L, S):
        raise NotASubalgebra("subspace is not closed under the bracket")
    k = S.dim
    vecs = S.basis
    structure = []
    for a in range(k):
        for b in range(a + 1, k):
            structure.append(((a, b), S.coordinates(L.bracket(vecs[a], vecs[b]))))
    eps = None
    if L.eps is not None and sc.is_eps_invariant(L, S):
        eps = Matrix.from_columns([S.coordinates(L.apply_eps(v)) for v in vecs], k) if k else None
    labels = tuple(f"s{i + 1}" for i in range(k))
    return LieAlgebra(name or f"{L.name}|S", labels, tuple(structure), eps, L.p)


def _derived_of(L: LieAlgebra, U: Subspace) -> list:
    out = [U]
    while True:
        nxt = sc.bracket_space(L, out[-1], out[-1])
        if nxt == out[-1]:
            return out
        out.append(nxt)


def _lower_central_of(L: LieAlgebra, U: Subspace) -> list:
    out = [U]
    while True:
        nxt = sc.bracket_space(L, U, out[-1])
        if nxt == out[-1]:
            return out
        out.append(nxt)


def is_solvable_subspace(L: LieAlgebra, U: Subspace) -> bool:
    return _derived_of(L, U)[-1].is_zero()


def is_nilpotent_subspace(L: LieAlgebra, U: Subspace) -> bool:
    return _lower_central_of(L, U)[-1].is_zero()


# ---------------------------------------------------------------------------
# radical and nilradical


def radical(L: LieAlgebra, verify: bool = True) -> Subspace:
    """Killing-orthogonal complement of [L, L]."""
    n = L.dim
    K = killing_form(L)
    D = sc.bracket_space(L, sc.full(L), sc.full(L))
    if D.is_zero():
        R = Subspace.full(n)
    else:
        R = kernel(Matrix(tuple(K.apply(d) for d in D.basis), n))
    if verify:
        _verify_radical(L, R)
    return R


def _verify_radical(L: LieAlgebra, R: Subspace) -> None:
    if not sc.is_ideal(L, R):
        raise VerificationError("radical candidate is not an ideal")
    if not is_solvable_subspace(L, R):
        raise VerificationError("radical candidate is not solvable")
    if not R.is_full() and not is_semisimple(quotient(L.realified(), R)):
        raise VerificationError("quotient by the radical candidate is not semisimple")
    if L.eps is not None and not sc.is_eps_invariant(L, R):
        raise VerificationError("radical is not eps-invariant")


def associative_envelope(mats) -> list:
    """Basis of the (non-unital) associative algebra generated by ``mats``."""
    mats = [m for m in mats if not m.is_zero()]
    if not mats:
        return []
    n = mats[0].ncols
    eb = EchelonBasis(n * n)
    basis = []

    def push(m: Matrix) -> bool:
        if eb.add([x for r in m.rows for x in r]):
            basis.append(m)
            return True
        return False

    frontier = [m for m in mats if push(m)]
    while frontier:
        new = []
        for b in frontier:
            for g in mats:
                prod = b @ g
                if push(prod):
                    new.append(prod)
        frontier = new
    return basis


def nilradical(L: LieAlgebra, verify: bool = True, seed: int = 0) -> Subspace:
    """{x : ad x lies in the trace radical of the envelope of ad L}."""
    n = L.dim
    ads = L.ad_basis
    env = associative_envelope(ads)
    if not env:
        N = Subspace.full(n)
    else:
        rows = [tuple(trace_product(a, b) for a in ads) for b in env]
        N = kernel(Matrix(tuple(rows), n))
    if verify:
        _verify_nilradical(L, N, seed)
    return N


def _verify_nilradical(L: LieAlgebra, N: Subspace, seed: int) -> None:
    if not sc.is_ideal(L, N):
        raise VerificationError("nilradical candidate is not an ideal")
    if not is_nilpotent_subspace(L, N):
        raise VerificationError("nilradical candidate is not nilpotent")
    if not L.eps_image <= N:
        raise VerificationError("image of eps is not inside the nilradical")
    if L.eps is not None and not sc.is_eps_invariant(L, N):
        raise VerificationError("nilradical is not eps-invariant")
    # maximality spot check on complement vectors of N inside R and random radical elements
    R = radical(L, verify=False)
    rng = random.Random(seed)
    witnesses = [v for v in R.basis if not N.contains(v)]
    for _ in range(20):
        coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(R.dim)]
        v = tuple(sum((c * b[k] for c, b in zip(coeffs, R.basis)), ZERO) for k in range(L.dim))
        if not N.contains(v):
            witnesses.append(v)
    for v in witnesses:
        bigger = N + span([v], L.dim)
        if sc.is_ideal(L, bigger) and is_nilpotent_subspace(L, bigger):
            raise VerificationError("nilradical candidate is not maximal")


# ---------------------------------------------------------------------------
# essential parameters, triangularity


@dataclass(frozen=True)
class Essential:
    d: int
    basis: tuple  # vectors projecting onto a basis of L / Im eps


def essential(L: LieAlgebra) -> Essential:
    L.require_dual("essential basis")
    n = L.dim
    idx = L.eps_image.complement_indices()
    return Essential(n - L.eps_rank, tuple(unit_vector(n, i) for i in idx))


def non_real_spectrum_witness(L: LieAlgebra):
    """First basis index whose ad operator has a non-real eigenvalue, with its char poly."""
    for i, ad in enumerate(L.ad_basis):
        cp = char_poly(ad)
        if real_root_count(cp) < L.dim:
            return i, cp
    return None


def has_real_spectrum(L: LieAlgebra, x) -> bool:
    return real_root_count(char_poly(L.ad(x))) == L.dim


def is_triangular(L: LieAlgebra) -> bool:
    """Solvable with every ad x_i having only real eigenvalues.

    For solvable L the eigenvalues of ad x are the values at x of the
    (complex) weights of the adjoint module, which are linear; real values on
    a basis therefore mean real values everywhere.
    """
    return is_solvable(L) and non_real_spectrum_witness(L) is None


# ---------------------------------------------------------------------------
# semisimple subalgebras


@dataclass(frozen=True)
class LeviReport:
    dim_s: int
    dim_a: int
    semisimple: bool
    eps_meets_trivially: bool  # eps S  /\ S = 0
    eps_image_abelian: bool
    saturation_is_direct: bool  # dim(S + eps S) = dim S + dim eps S
    eps_image_ideal_in_saturation: bool
    eps_image_ideal_in_algebra: bool
    levi_decomposition: bool | None  # L = S + rad L (direct), None when dims do not add up

    @property
    def ok(self) -> bool:
        return (
            self.eps_meets_trivially
            and self.eps_image_abelian
            and self.saturation_is_direct
            and self.eps_image_ideal_in_saturation
            and self.levi_decomposition is not False
        )

    @property
    def dim_a_at_least_dim_s(self) -> bool:
        return self.dim_a >= self.dim_s


def semidirect_check(L: LieAlgebra, S: Subspace) -> LeviReport:
    """Structure of S + eps S for a subalgebra S, without requiring S semisimple."""
    L.require_dual("semidirect check")
    if not sc.is_subalgebra(L, S):
        raise NotASubalgebra("S is not a subalgebra")
    A = sc.eps_image(L, S)
    Shat = S + A
    sem = S.dim > 0 and is_semisimple(subalgebra(L, S))
    levi = None
    if sem:
        R = radical(L)
        if S.dim + R.dim == L.dim:
            levi = intersect(S, R).is_zero()
    return LeviReport(
        dim_s=S.dim,
        dim_a=A.dim,
        semisimple=sem,
        eps_meets_trivially=intersect(A, S).is_zero(),
        eps_image_abelian=sc.is_abelian(L, A),
        saturation_is_direct=Shat.dim == S.dim + A.dim,
        eps_image_ideal_in_saturation=sc.bracket_space(L, Shat, A) <= A,
        eps_image_ideal_in_algebra=sc.is_ideal(L, A),
        levi_decomposition=levi,
    )


def levi_check(L: LieAlgebra, S: Subspace) -> LeviReport:
    if not sc.is_subalgebra(L, S):
        raise NotASubalgebra("S is not a subalgebra")
    if S.dim == 0 or not is_semisimple(subalgebra(L, S)):
        raise NotSemisimple("S is not semisimple")
    return semidirect_check(L, S)


# ---------------------------------------------------------------------------
# one-dimensional ideals


@dataclass(frozen=True)
class LineIdeals:
    """Common eigenspaces of ad L; every line inside one of them is an ideal."""

    families: tuple
    conclusive: bool

    @property
    def lines(self) -> tuple:
        return tuple(W for W in self.families if W.dim == 1)

    @property
    def all_lines(self) -> bool:
        return any(W.is_full() for W in self.families)

    @property
    def empty(self) -> bool:
        return not self.families


def find_line_ideals(L: LieAlgebra) -> LineIdeals:
    n = L.dim
    if n == 0:
        return LineIdeals((), True)
    families = [Subspace.full(n)]
    conclusive = True
    eye = Matrix.identity(n)
    for M in L.ad_basis:
        cp = char_poly(M)
        if not real_roots_rational(cp):
            conclusive = False
        roots = rational_roots(cp)
        refined = []
        for W in families:
            for r in roots:
                K = intersect(W, kernel(M - eye.scale(r)))
                if not K.is_zero():
                    refined.append(K)
        families = refined
        if not families:
            break
    return LineIdeals(tuple(families), conclusive)


# ---------------------------------------------------------------------------
# minimal abelian D2-ideals of solvable algebras


@dataclass(frozen=True)
class MinimalIdeal:
    subspace: Subspace
    certified_minimal: bool
    note: str

    @property
    def dim(self) -> int:
        return self.subspace.dim


def _restrict(M: Matrix, W: Subspace) -> Matrix:
    cols = [W.coordinates(M.apply(b)) for b in W.basis]
    return Matrix.from_columns(cols, W.dim)


def _lift(W: Subspace, coord_space: Subspace) -> Subspace:
    n = W.ambient_dim
    vecs = []
    for c in coord_space.basis:
        v = [ZERO] * n
        for a, b in zip(c, W.basis):
            if a:
                for k, x in enumerate(b):
                    if x:
                        v[k] += a * x
        vecs.append(v)
    return span(vecs, n)


def _spin(mats, v, k: int) -> Subspace:
    eb = EchelonBasis(k)
    eb.add(v)
    frontier = [tuple(v)]
    while frontier:
        new = []
        for w in frontier:
            for m in mats:
                u = m.apply(w)
                if eb.add(u):
                    new.append(u)
        frontier = new
    return eb.subspace()


def minimal_commuting_submodule(mats, W: Subspace, seed: int = 0) -> tuple:
    """Minimal nonzero subspace of W invariant under commuting operators ``mats``.

    Returns ``(subspace, certified)``. Certification means some element of the
    operator algebra acts on the result with an irreducible characteristic
    polynomial, which rules out proper invariant subspaces.
    """
    rng = random.Random(seed)
    for _ in range(4 * (W.ambient_dim + 1)):
        k = W.dim
        if k <= 1:
            return W, True
        res = [_restrict(M, W) for M in mats]
        combos = [
            sum((m.scale(rng.randint(-5, 5)) for m in res[1:]), res[0].scale(rng.randint(1, 5)))
            for _ in range(8)
        ] if res else []
        narrowed = None
        for a in res + combos:
            facs = factor_poly(char_poly(a))
            f, mult = facs[0]
            if len(facs) > 1:
                narrowed = kernel(f.eval_matrix(a))
                break
            if mult == 1:
                return W, True
            fa = f.eval_matrix(a)
            if not fa.is_zero():
                narrowed = kernel(fa)
                break
        if narrowed is None:
            spun = _spin(res, unit_vector(k, 0), k)
            if spun.dim < k:
                narrowed = spun
        if narrowed is None:
            continue
        W = _lift(W, narrowed)
    return W, False


def minimal_abelian_d2_ideal(L: LieAlgebra, seed: int = 0) -> MinimalIdeal:
    L.require_dual("minimal abelian D2-ideal")
    if not is_solvable(L):
        raise NotSolvable("minimal abelian D2-ideal search needs a solvable algebra")
    if L.dim == 0:
        return MinimalIdeal(Subspace.zero(0), True, "zero algebra")
    if L.eps is not None:
        P = L.eps_image
    else:
        P = [U for U in sc.derived_series(L) if not U.is_zero()][-1]
    D = sc.bracket_space(L, sc.full(L), sc.full(L))
    W0 = P
    for d in D.basis:
        W0 = intersect(W0, kernel(L.ad(d)))
    if W0.is_zero():
        raise VerificationError("derived algebra has no common null vector on the ideal")
    W, certified = minimal_commuting_submodule(list(L.ad_basis), W0, seed)
    if not sc.is_ideal(L, W) or not sc.is_abelian(L, W) or not sc.is_eps_invariant(L, W):
        raise VerificationError("minimal subspace is not an abelian eps-stable ideal")
    if W.dim <= 2:
        note = "rational"
    else:
        note = "irrational spectrum; a real invariant refinement of dimension <= 2 exists"
    if not certified:
        note += " (minimality not certified)"
    return MinimalIdeal(W, certified, note)


# ---------------------------------------------------------------------------
# dualizations and freeness


def is_free_module(L: LieAlgebra) -> bool:
    """eps acts freely: m Jordan blocks of size p, i.e. rank eps = dim (p-1)/p."""
    n, p = L.dim, L.p if L.eps is not None else 2
    return n % p == 0 and L.eps_rank * p == n * (p - 1)


def dualization_witness(L: LieAlgebra, S: Subspace) -> bool:
    """True when S is a subalgebra with L = S + eps S direct and eps injective on S."""
    L.require_dual("dualization witness")
    if S.ambient_dim != L.dim:
        from .linalg import DimensionMismatch

        raise DimensionMismatch("S lives in a different space")
    if not sc.is_subalgebra(L, S):
        return False
    A = sc.eps_image(L, S)
    return A.dim == S.dim and 2 * S.dim == L.dim and intersect(S, A).is_zero()


# ---------------------------------------------------------------------------
# fingerprints


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    rank_eps: int
    essential_dim: int
    derived_dims: tuple
    lcs_dims: tuple
    center_dim: int
    radical_dim: int
    nilradical_dim: int
    killing_signature: tuple
    solvable: bool
    nilpotent: bool
    semisimple: bool
    triangular: bool
    free_d2_module: bool

    def real_part(self) -> tuple:
        """Entries that do not depend on the dual structure."""
        return (
            self.dim,
            self.derived_dims,
            self.lcs_dims,
            self.center_dim,
            self.radical_dim,
            self.nilradical_dim,
            self.killing_signature,
            self.solvable,
            self.nilpotent,
            self.semisimple,
            self.triangular,
        )

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "rank_eps": self.rank_eps,
            "essential_dim": self.essential_dim,
            "derived_dims": list(self.derived_dims),
            "lcs_dims": list(self.lcs_dims),
            "center_dim": self.center_dim,
            "radical_dim": self.radical_dim,
            "nilradical_dim": self.nilradical_dim,
            "killing_signature": list(self.killing_signature),
            "solvable": self.solvable,
            "nilpotent": self.nilpotent,
            "semisimple": self.semisimple,
            "triangular": self.triangular,
            "free_d2_module": self.free_d2_module,
        }


def fingerprint(L: LieAlgebra) -> Fingerprint:
    derived = tuple(U.dim for U in sc.derived_series(L))
    lcs = tuple(U.dim for U in sc.lower_central_series(L))
    solvable = derived[-1] == 0
    nilpotent = lcs[-1] == 0
    sem = is_semisimple(L)
    return Fingerprint(
        dim=L.dim,
        rank_eps=L.eps_rank,
        essential_dim=L.dim - L.eps_rank,
        derived_dims=derived,
        lcs_dims=lcs,
        center_dim=sc.center(L).dim,
        radical_dim=radical(L).dim,
        nilradical_dim=nilradical(L).dim,
        killing_signature=signature(killing_form(L)),
        solvable=solvable,
        nilpotent=nilpotent,
        semisimple=sem,
        triangular=solvable and non_real_spectrum_witness(L) is None,
        free_d2_module=is_free_module(L),
    )


@dataclass
class DualizationExclusion:
    """Outcome of comparing L with the dualizations of a complete candidate list."""

    candidates: dict = field(default_factory=dict)  # name -> fingerprints equal?

    @property
    def excluded(self) -> bool:
        return not any(self.candidates.values())


def exclude_dualizations(L: LieAlgebra, candidates: dict) -> DualizationExclusion:
    """``candidates`` maps names to already-dualized algebras; any fingerprint mismatch excludes one."""
    fp = fingerprint(L)
    return DualizationExclusion({name: fingerprint(C) == fp for name, C in candidates.items()})
