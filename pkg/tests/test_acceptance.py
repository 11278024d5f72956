"""Acceptance criteria 1-12. Run with ``pytest tests/test_acceptance.py``; the
terminal summary prints one PASS/FAIL line per criterion."""

import random
import time

import pytest

from duallie import structure as st
from duallie import subspaces as sc
from duallie.algebra import quotient, validate
from duallie.catalog import CATALOG, abelian, aff1, catalog
from duallie.checks import run_checks
from duallie.cli import run
from duallie.constructions import dualize
from duallie.engel import engel_triangularize, is_eps_triangular, random_nilpotent_family
from duallie.linalg import intersect, span
from duallie.report import build_report

NAMES = list(CATALOG)
EPS_NAMES = [n for n in NAMES if catalog(n).eps is not None]
criterion = pytest.mark.criterion


@criterion(1, title="axioms hold for every catalog entry, < 1 s each up to dim 12")
def test_criterion_1_axioms():
    names = NAMES + ["NnD2:4", "glnD2:3", "abelian:12"]
    for name in names:
        t0 = time.perf_counter()
        L = catalog(name)
        rep = validate(L)
        elapsed = time.perf_counter() - t0
        assert rep.ok, (name, rep.lines(L.basis))
        if L.dim <= 12:
            assert elapsed < 1.0, (name, elapsed)


_SUITES = (
    "eps_image_abelian",
    "ideal_eps_image_is_ideal",
    "ideal_saturation_is_ideal",
    "ideal_saturation_bracket_into_ideal",
    "saturation_of_subalgebra",
    "centralizer_normalizer_eps_invariant",
)


@pytest.fixture(scope="module")
def seed0_reports():
    return {name: run_checks(catalog(name), trials=200, seed=0) for name in NAMES}


@criterion(2, title="randomized suites, seed 0, 200 trials: zero violations")
def test_criterion_2_randomized_suites(seed0_reports):
    for name, rep in seed0_reports.items():
        for suite in _SUITES:
            r = rep.get(suite)
            assert r.violations == 0, (name, r.line())
            assert r.trials == 200 or r.skipped, (name, r.line())


@criterion("2-literal", title="saturation of an arbitrary subspace is a D2-subalgebra (known false)")
@pytest.mark.xfail(
    strict=True,
    reason="U = span(E, eF) in sl2R_dual has U + eU = span(E, eE, eF), which misses [E, eF] = eH",
)
def test_criterion_2_literal_saturation_of_subspaces(seed0_reports):
    bad = {n: r.get("saturation_of_subspace").violations for n, r in seed0_reports.items()}
    assert not any(bad.values()), bad


@criterion(3, title="nonzero eps never semisimple")
def test_criterion_3_not_semisimple():
    for name in EPS_NAMES:
        assert not st.is_semisimple(catalog(name)), name


@criterion(4, title="radical/nilradical eps-invariant, Im eps in nilradical, radical verified")
def test_criterion_4_radical_and_nilradical():
    for name in NAMES:
        L = catalog(name)
        R = st.radical(L, verify=True)
        N = st.nilradical(L, verify=True)
        assert sc.is_eps_invariant(L, R) and sc.is_eps_invariant(L, N), name
        assert L.eps_image <= N, name
        # independent cross-check of the Killing-perp answer
        assert sc.is_ideal(L, R) and sc.derived_series(st.subalgebra(L, R))[-1].is_zero()
        Q = quotient(L, R)
        assert Q.dim == 0 or st.is_semisimple(Q), name


@criterion(5, title="S = L(x)1 meets eS trivially, S + eS semidirect; Levi for semisimple S")
def test_criterion_5_semisimple_part():
    for name, real_name in (("sl2R_dual", "sl2R"), ("su2_dual", "su2"), ("e2_dual", "e2")):
        L = catalog(name)
        S = span([L.e(x) for x in catalog(real_name).basis], L.dim)
        assert intersect(sc.eps_image(L, S), S).is_zero()
        r = st.semidirect_check(L, S)
        assert r.saturation_is_direct and r.eps_image_abelian and r.eps_image_ideal_in_saturation
        assert r.eps_image_ideal_in_algebra
        if real_name != "e2":
            lv = st.levi_check(L, S)
            assert lv.ok and lv.levi_decomposition is True
            assert (S + st.radical(L)).is_full()


@criterion(6, title="50 conjugated nilpotent D2 sets (ranks 2-4) triangularized, exact, < 10 s")
def test_criterion_6_engel():
    rng = random.Random(0)
    t0 = time.perf_counter()
    for trial in range(50):
        m = 2 + trial % 3
        mats, _ = random_nilpotent_family(rng, m, rng.randint(1, 3))
        res = engel_triangularize(mats, m, seed=trial)
        for M, C in zip(mats, res.conjugated):
            assert M.conjugate_by(res.change) == C
            assert is_eps_triangular(C)
    assert time.perf_counter() - t0 < 10


@criterion(7, title="minimal abelian D2-ideals: e2_dual dim 2, L4_paper dim 1")
def test_criterion_7_minimal_abelian_ideal():
    for name, d in (("e2_dual", 2), ("L4_paper", 1)):
        L = catalog(name)
        W = st.minimal_abelian_d2_ideal(L).subspace
        assert W.dim == d and W <= L.eps_image
        assert sc.bracket_space(L, sc.full(L), W) <= W
        assert sc.bracket_space(L, W, W).is_zero()


@criterion(8, title="classification facts for small algebras")
def test_criterion_8_classification():
    fR, fD = st.fingerprint(abelian(1)), st.fingerprint(catalog("dual_numbers"))
    assert fR.essential_dim == fD.essential_dim == 1 and fR != fD
    five = [abelian(1), abelian(2), catalog("dual_numbers"), catalog("heis3"), catalog("dual_numbers_plus_R")]
    fps = [st.fingerprint(L) for L in five]
    assert len(set(fps)) == 5 and all(f.nilpotent and f.dim <= 3 for f in fps)
    fs, fu = st.fingerprint(catalog("sl2R_dual")), st.fingerprint(catalog("su2_dual"))
    for f in (fs, fu):
        assert not f.solvable and f.dim == 6 and f.essential_dim == 3
    assert fs != fu


@criterion(9, title="e2_dual has no line ideals (conclusive), 1000 random lines rejected")
def test_criterion_9_line_ideals():
    out = run(["find-line-ideals", "catalog:e2_dual"])
    assert out.code == 0 and "conclusive=true" in out.text and "no one-dimensional ideals" in out.text
    L = catalog("e2_dual")
    res = st.find_line_ideals(L)
    assert res.conclusive and res.empty
    rng = random.Random(0)
    rejected = 0
    while rejected < 1000:
        v = sc.random_vector(rng, L.dim)
        if any(v):
            assert not sc.is_ideal(L, span([v], L.dim))
            rejected += 1


@criterion(10, title="L4_paper is not a dualization; realification matches heis3 + R; rank note")
def test_criterion_10_L4():
    L = catalog("L4_paper")
    ex = st.exclude_dualizations(L, {"abelian:2": dualize(abelian(2)), "aff1": dualize(aff1())})
    assert ex.excluded and set(ex.candidates) == {"abelian:2", "aff1"}
    assert st.fingerprint(L.realified()).real_part() == st.fingerprint(catalog("heis3_plus_R")).real_part()
    assert L.eps_rank == 2
    rep = build_report(L)
    assert rep["dualization_search"]["excluded"] is True
    assert any("rank of eps is 2" in n for n in rep["notes"])


@criterion(11, title="TnD2(2), TnD2(3) triangular; e2, borel_cx_realified not, with witness")
def test_criterion_11_triangularity():
    assert st.is_triangular(catalog("TnD2:2")) and st.is_triangular(catalog("TnD2:3"))
    assert not st.is_triangular(catalog("e2"))
    B = catalog("borel_cx_realified")
    assert not st.is_triangular(B)
    out = run(["report", "catalog:borel_cx_realified"])
    assert "non_real_spectrum_witness : T" in out.text
    i, cp = st.non_real_spectrum_witness(B)
    assert B.basis[i] == "T" and str(cp) in out.text


@criterion(12, title="report --seed 0 byte-identical across runs for every entry")
def test_criterion_12_determinism():
    for name in NAMES:
        for fmt in ("text", "tree"):
            a = run(["report", f"catalog:{name}", "--seed", "0", "--format", fmt])
            b = run(["report", f"catalog:{name}", "--seed", "0", "--format", fmt])
            assert a.code == 0 and a.text.encode() == b.text.encode(), name


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
