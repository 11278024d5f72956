import random

import pytest
from hypothesis import given, strategies as hst

from duallie import subspaces as sc
from duallie.catalog import abelian, catalog
from duallie.linalg import DimensionMismatch, Subspace, span

from conftest import CATALOG_NAMES


def test_eps_image_examples(algebras):
    A = abelian(3)
    assert sc.eps_image(A, sc.full(A)).is_zero()
    L = algebras["L4_paper"]
    assert sc.eps_image(L, span([L.e("X"), L.e("Y")], 4)) == span([L.e("eX"), L.e("eY")], 4)
    D = algebras["sl2R_dual"]
    P = sc.eps_image(D, sc.full(D))
    assert P.dim == 3 and sc.is_abelian(D, P)


def test_ambient_mismatch(algebras):
    with pytest.raises(DimensionMismatch):
        sc.eps_image(algebras["L4_paper"], Subspace.full(3))


def test_saturate_examples(algebras):
    L = algebras["L4_paper"]
    assert sc.saturate(L, span([L.e("X")], 4)) == span([L.e("X"), L.e("eX")], 4)
    P = L.eps_image
    assert sc.saturate(L, P) == P
    D = algebras["sl2R_dual"]
    S = span([D.e(x) for x in ("H", "E", "F")], 6)
    assert sc.saturate(D, S).is_full()


def test_classify_examples(algebras):
    D = algebras["sl2R_dual"]
    c = sc.classify_subspace(D, span([D.e("H")], 6))
    assert c.is_subalgebra and not c.is_d2_invariant
    for name in CATALOG_NAMES:
        L = algebras[name]
        c = sc.classify_subspace(L, L.eps_image)
        assert c.is_ideal and c.is_abelian and c.is_d2_invariant
    c = sc.classify_subspace(D, Subspace.zero(6))
    assert c.is_subalgebra and c.is_ideal and c.is_abelian and c.is_d2_invariant


def test_generated_examples(algebras):
    L = algebras["L4_paper"]
    U = sc.generated_subalgebra(L, [L.e("eX")])
    assert U.dim == 1 and sc.is_abelian(L, U)
    assert sc.generated_d2_subalgebra(L, [L.e("X")]) == span([L.e("X"), L.e("eX")], 4)
    s = algebras["sl2R"]
    assert sc.generated_subalgebra(s, [s.e("E"), s.e("F")]).is_full()
    assert sc.generated_ideal(s, [s.e("H")]).is_full()


def test_center_centralizer_normalizer(algebras):
    h = algebras["heis3"]
    assert sc.center(h) == span([h.e("W")], 3)
    assert sc.center(algebras["sl2R_dual"]).is_zero()
    for name in ("aff1", "sl2R", "L4_paper"):
        L = algebras[name]
        assert sc.normalizer(L, sc.full(L)).is_full()
    s = algebras["sl2R"]
    H = span([s.e("H")], 3)
    assert sc.centralizer(s, H) == H
    assert sc.normalizer(s, span([s.e("E")], 3)) == span([s.e("H"), s.e("E")], 3)


def test_series_examples(algebras):
    A = abelian(2)
    assert [U.dim for U in sc.derived_series(A)] == [2, 0]
    h = algebras["heis3"]
    lcs = sc.lower_central_series(h)
    assert lcs[1] == span([h.e("W")], 3) and [U.dim for U in lcs] == [3, 1, 0]
    L = algebras["L4_paper"]
    lcs = sc.lower_central_series(L)
    assert lcs[1] == span([L.e("eX")], 4) and lcs[-1].is_zero()
    assert [U.dim for U in sc.upper_central_series(h)] == [0, 1, 3]
    with pytest.raises(ValueError):
        sc.series(h, "bogus")


def test_heis3_p3_series():
    from duallie.constructions import dualize

    D = dualize(catalog("heis3"), 3)
    assert D.dim == 9 and D.eps_matrix.power(3).is_zero() and not D.eps_matrix.power(2).is_zero()
    # [L, L] = W (x) D3, then zero
    assert [U.dim for U in sc.lower_central_series(D)] == [9, 3, 0]


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_series_terms_eps_invariant_ideals(name, algebras):
    L = algebras[name]
    for kind in ("derived", "lower_central", "upper_central"):
        for T in sc.series(L, kind):
            assert sc.is_ideal(L, T) and sc.is_eps_invariant(L, T)


@pytest.mark.parametrize("name", ["aff1", "heis3", "e2", "e2_dual", "TnD2:2", "borel_cx_realified"])
def test_derived_series_of_solvable_reaches_zero(name, algebras):
    assert sc.derived_series(algebras[name])[-1].is_zero()


_EPS_NAMES = [n for n in CATALOG_NAMES if catalog(n).eps is not None]


@given(name=hst.sampled_from(_EPS_NAMES), seed=hst.integers(0, 10**6))
def test_eps_image_of_any_subspace_is_abelian(name, seed):
    L = catalog(name)
    U = sc.random_subspace(random.Random(seed), L.dim)
    assert sc.is_abelian(L, sc.eps_image(L, U))


@given(name=hst.sampled_from(_EPS_NAMES), seed=hst.integers(0, 10**6))
def test_ideal_images_and_saturations(name, seed):
    L = catalog(name)
    rng = random.Random(seed)
    I = sc.generated_ideal(L, [sc.random_vector(rng, L.dim)])
    assert sc.is_ideal(L, sc.eps_image(L, I))
    S = sc.saturate(L, I)
    assert sc.is_ideal(L, S) and sc.is_eps_invariant(L, S)
    assert sc.bracket_space(L, S, sc.full(L)) <= I


@given(name=hst.sampled_from(_EPS_NAMES), seed=hst.integers(0, 10**6))
def test_saturation_of_subalgebra_is_d2_subalgebra(name, seed):
    L = catalog(name)
    rng = random.Random(seed)
    U = sc.generated_subalgebra(L, [sc.random_vector(rng, L.dim) for _ in range(rng.randint(1, 2))])
    c = sc.classify_subspace(L, sc.saturate(L, U))
    assert c.is_subalgebra and c.is_d2_invariant


def test_saturation_of_arbitrary_subspace_counterexample(algebras):
    # U = span(E, eF): U + eU = span(E, eE, eF) misses [E, eF] = eH
    D = algebras["sl2R_dual"]
    U = span([D.e("E"), D.e("eF")], 6)
    S = sc.saturate(D, U)
    assert sc.is_eps_invariant(D, S)
    assert not sc.is_subalgebra(D, S)


@given(name=hst.sampled_from(_EPS_NAMES), seed=hst.integers(0, 10**6))
def test_centralizer_normalizer_eps_invariant(name, seed):
    L = catalog(name)
    rng = random.Random(seed)
    U = sc.generated_d2_subalgebra(L, [sc.random_vector(rng, L.dim)])
    assert sc.is_eps_invariant(L, sc.centralizer(L, U))
    assert sc.is_eps_invariant(L, sc.normalizer(L, U))


@given(name=hst.sampled_from(CATALOG_NAMES), seed=hst.integers(0, 10**6))
def test_saturate_idempotent_and_minimal(name, seed):
    L = catalog(name)
    U = sc.random_subspace(random.Random(seed), L.dim)
    S = sc.saturate(L, U)
    assert U <= S and sc.saturate(L, S) == S
