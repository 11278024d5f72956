import random

import pytest
from hypothesis import given, strategies as hst

from duallie.algebra import (
    LieAlgebra,
    MorphismCheck,
    adjoint_representation,
    direct_sum,
    quotient,
    validate,
    verify_morphism,
    zero_algebra,
)
from duallie.catalog import abelian, catalog, heis3, sl2R
from duallie.dual import DualMatrix
from duallie.errors import NotAnIdeal, NotEpsInvariant, StructuralError
from duallie.linalg import DimensionMismatch, Matrix, Subspace, span
from duallie.structure import fingerprint
from duallie import subspaces as sc

from conftest import CATALOG_NAMES, matrices, vectors


def test_abelian_valid():
    assert validate(abelian(2)).ok


def test_L4_valid(algebras):
    L = algebras["L4_paper"]
    assert validate(L).ok
    assert L.eps_rank == 2


def test_bad_eps_reports_witness():
    h = heis3().with_eps(Matrix.from_rows([[1, 0, 0], [0, 0, 0], [0, 0, 0]]))
    rep = validate(h)
    assert not rep.ok
    axioms = {v.axiom for v in rep.violations}
    assert "eps_nilpotent" in axioms
    nil = [v for v in rep.violations if v.axiom == "eps_nilpotent"]
    assert nil[0].witness == (0,)


def test_jacobi_violation_detected():
    bad = LieAlgebra.from_table("bad", ["A", "B", "C"], {("A", "B"): {"A": 1}, ("B", "C"): {"A": 1}, ("A", "C"): {"C": 1}})
    rep = validate(bad)
    assert any(v.axiom == "jacobi" and v.witness == (0, 1, 2) for v in rep.violations)


def test_eps_shape_mismatch():
    with pytest.raises(StructuralError):
        LieAlgebra("x", ("A", "B"), (), Matrix.zeros(3, 3))


def test_zero_eps_normalized():
    L = LieAlgebra("x", ("A",), (), Matrix.zeros(1, 1))
    assert L.eps is None


def test_bracket_examples(algebras):
    h = algebras["heis3"]
    assert h.bracket(h.e("U"), h.e("V")) == h.e("W")
    x = (1, 2, 3)
    assert not any(h.bracket(x, x))
    L = algebras["L4_paper"]
    assert not any(L.bracket(L.e("Y"), L.e("eX")))


def test_bracket_length_mismatch(algebras):
    with pytest.raises(DimensionMismatch):
        algebras["heis3"].bracket((1, 0), (0, 1, 0))


def test_ad_examples(algebras):
    h = algebras["heis3"]
    assert h.ad(h.e("W")).is_zero()
    adU = h.ad(h.e("U"))
    assert adU.apply(h.e("V")) == h.e("W")
    assert adU.rank() == 1
    s = algebras["sl2R"]
    assert s.ad(s.e("H")) == Matrix.diag([0, 2, -2])


def test_quotient_examples(algebras):
    h = algebras["heis3"]
    assert quotient(h, sc.full(h)).dim == 0
    D = algebras["sl2R_dual"]
    Q = quotient(D, D.eps_image)
    assert Q.eps is None
    assert Q.same_structure(sl2R().renamed(Q.name))
    L = algebras["L4_paper"]
    Q = quotient(L, span([L.e("eY")], 4))
    assert Q.dim == 3 and Q.eps_rank == 1
    assert Q.bracket(Q.e("X"), Q.e("Y")) == Q.e("eX")
    assert validate(Q).ok


def test_quotient_errors(algebras):
    s = algebras["sl2R"]
    with pytest.raises(NotAnIdeal):
        quotient(s, span([s.e("H")], 3))
    L = algebras["L4_paper"]
    # span(eX, eY, X) is an ideal but not eps-stable
    I = span([L.e("X"), L.e("eX"), L.e("eY")], 4)
    assert sc.is_ideal(L, I)
    Y_only = span([L.e("eX"), L.e("eY")], 4)
    assert sc.is_eps_invariant(L, Y_only)
    h = algebras["heis3"].with_eps(Matrix.from_rows([[0, 0, 0], [0, 0, 0], [0, 0, 0]]))
    assert h.eps is None
    N = algebras["NnD2:3"]
    J = span([N.e("E13")], N.dim)  # central but eps E13 = eE13 is outside
    assert sc.is_ideal(N, J)
    with pytest.raises(NotEpsInvariant):
        quotient(N, J)


def test_direct_sum_examples(algebras):
    S = direct_sum(algebras["heis3"], abelian(1, ("Z",)))
    assert validate(S).ok and S.dim == 4
    assert fingerprint(S).real_part() == fingerprint(algebras["L4_paper"].realified()).real_part()
    h = algebras["heis3"]
    assert direct_sum(h, zero_algebra()).same_structure(h.renamed(direct_sum(h, zero_algebra()).name))
    DR = direct_sum(algebras["dual_numbers"], abelian(1, ("Z",)))
    assert DR.dim == 3 and DR.eps_rank == 1 and fingerprint(DR).center_dim == 3


def test_direct_sum_label_collision():
    S = direct_sum(abelian(1), abelian(1))
    assert S.basis == ("X", "X_2")


def test_morphism_examples(algebras):
    s = algebras["sl2R"]
    rep = verify_morphism(MorphismCheck(s, s, Matrix.identity(3)))
    assert rep.is_morphism and rep.is_injective and rep.is_equivariant
    h = algebras["heis3"]
    bad = verify_morphism(MorphismCheck(h, h, Matrix.diag([1, 1, 2])))
    assert not bad.is_morphism and bad.bracket_witness == (0, 1)


def test_morphism_shape_mismatch(algebras):
    with pytest.raises(DimensionMismatch):
        verify_morphism(MorphismCheck(algebras["heis3"], algebras["heis3"], Matrix.identity(2)))


def test_adjoint_is_representation_of_gl(algebras):
    # the adjoint map into gl(L), checked as a morphism of Lie algebras
    s = algebras["sl2R"]
    ad = adjoint_representation(s)
    assert ad.faithful
    for i in range(3):
        for j in range(3):
            lhs = s.ad(s.basis_bracket(i, j))
            assert lhs == ad.matrices[i] @ ad.matrices[j] - ad.matrices[j] @ ad.matrices[i]


def test_adjoint_examples(algebras):
    a = adjoint_representation(abelian(2))
    assert not a.faithful and all(m.is_zero() for m in a.matrices)
    D = algebras["sl2R_dual"]
    r = adjoint_representation(D)
    assert r.faithful and r.dual_matrices is not None
    # the D2 form realifies back to the adjoint matrices in the free basis
    fb = r.free_basis
    for ad, dm in zip(r.matrices, r.dual_matrices):
        assert fb.inverse() @ ad @ fb == Matrix.block([[dm.a, Matrix.zeros(3, 3)], [dm.b, dm.a]])
    assert adjoint_representation(algebras["heis3"]).dual_matrices is None


def _rand_vec(rng, n):
    from fractions import Fraction

    return tuple(Fraction(rng.randint(-3, 3)) for _ in range(n))


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_jacobi_random_vectors(name, algebras):
    L = algebras[name]
    rng = random.Random(hash(name) % 1000)
    for _ in range(10):
        x, y, z = (_rand_vec(rng, L.dim) for _ in range(3))
        terms = [L.bracket(x, L.bracket(y, z)), L.bracket(y, L.bracket(z, x)), L.bracket(z, L.bracket(x, y))]
        assert not any(sum(t[k] for t in terms) for k in range(L.dim))


@pytest.mark.parametrize("name", [n for n in CATALOG_NAMES if catalog(n).eps is not None])
def test_eps_commutes_with_ad(name, algebras):
    L = algebras[name]
    E = L.eps_matrix
    rng = random.Random(1)
    for _ in range(5):
        x = _rand_vec(rng, L.dim)
        assert L.ad(L.apply_eps(x)) == E @ L.ad(x) == L.ad(x) @ E


@given(hst.integers(1, 3).flatmap(lambda m: hst.tuples(*(matrices(m, m) for _ in range(4)))))
def test_realify_is_multiplicative(mats):
    a, b, c, d = mats
    M, N = DualMatrix(a, b), DualMatrix(c, d)
    assert (M @ N).realify() == M.realify() @ N.realify()
    assert DualMatrix.from_realified(M.realify()) == M


@given(hst.integers(1, 3).flatmap(lambda m: hst.tuples(matrices(m, m), matrices(m, m))))
def test_dual_inverse(pair):
    a, b = pair
    M = DualMatrix(a, b)
    if not M.is_invertible():
        return
    assert M @ M.inverse() == DualMatrix.identity(a.ncols)


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_quotients_by_series_terms_validate(name, algebras):
    L = algebras[name]
    for kind in ("derived", "lower_central", "upper_central"):
        for T in sc.series(L, kind):
            Q = quotient(L, T)
            assert validate(Q).ok
