"""Randomized property suites for the subspace and structure statements.

Random subspaces come from ``random.Random(seed)`` (Mersenne Twister) with
coordinates in -3..3, so transcripts are reproducible for a given seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import structure as st
from . import subspaces as sc
from .algebra import LieAlgebra
from .errors import NotASubalgebra, NotSemisimple
from .linalg import Subspace, span


@dataclass
class CheckResult:
    name: str
    trials: int = 0
    violations: int = 0
    witness: str | None = None
    informational: bool = False  # reported but never fails the suite
    skipped: str | None = None

    def record(self, ok: bool, witness=None) -> None:
        self.trials += 1
        if not ok:
            self.violations += 1
            if self.witness is None and witness is not None:
                self.witness = witness

    @property
    def passed(self) -> bool:
        return self.skipped is not None or self.informational or self.violations == 0

    def line(self) -> str:
        if self.skipped:
            return f"{self.name}: skipped ({self.skipped})"
        tag = "info" if self.informational else ("ok" if self.violations == 0 else "FAIL")
        out = f"{self.name}: {tag} {self.violations}/{self.trials} violations"
        if self.witness:
            out += f"; first witness {self.witness}"
        return out


@dataclass
class CheckReport:
    algebra: str
    seed: int
    trials: int
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def get(self, name: str) -> CheckResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def lines(self) -> list:
        return [r.line() for r in self.results]


def _fmt(L: LieAlgebra, U: Subspace) -> str:
    from .fileformat import format_combination

    return "span(" + ", ".join(format_combination(b, L.basis) for b in U.basis) + ")"


def _random_vectors(rng: random.Random, n: int, k: int) -> list:
    return [sc.random_vector(rng, n) for _ in range(k)]


def run_checks(L: LieAlgebra, trials: int = 200, seed: int = 0, levi: Subspace | None = None) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport(L.name, seed, trials)
    n = L.dim
    dual_ok = L.eps is None or L.p == 2
    full = sc.full(L)

    eps_abelian = CheckResult("eps_image_abelian")
    for _ in range(trials):
        U = sc.random_subspace(rng, n)
        A = sc.eps_image(L, U)
        eps_abelian.record(sc.is_abelian(L, A), _fmt(L, U))
    rep.results.append(eps_abelian)

    ideal_img = CheckResult("ideal_eps_image_is_ideal")
    ideal_sat = CheckResult("ideal_saturation_is_ideal")
    ideal_into = CheckResult("ideal_saturation_bracket_into_ideal")
    for _ in range(trials):
        U = sc.generated_ideal(L, _random_vectors(rng, n, rng.randint(1, 2)))
        ideal_img.record(sc.is_ideal(L, sc.eps_image(L, U)), _fmt(L, U))
        if dual_ok:
            S = sc.saturate(L, U)
            ideal_sat.record(sc.is_ideal(L, S), _fmt(L, U))
            ideal_into.record(sc.bracket_space(L, S, full) <= U, _fmt(L, U))
    rep.results.append(ideal_img)
    for r in (ideal_sat, ideal_into):
        if not dual_ok:
            r.skipped = "needs e^2 = 0"
        rep.results.append(r)

    sat_sub = CheckResult("saturation_of_subalgebra")
    sat_any = CheckResult("saturation_of_subspace", informational=True)
    if dual_ok:
        for _ in range(trials):
            U = sc.generated_subalgebra(L, _random_vectors(rng, n, rng.randint(1, 2)))
            c = sc.classify_subspace(L, sc.saturate(L, U))
            sat_sub.record(c.is_subalgebra and c.is_d2_invariant, _fmt(L, U))
        for _ in range(trials):
            U = sc.random_subspace(rng, n)
            c = sc.classify_subspace(L, sc.saturate(L, U))
            sat_any.record(c.is_subalgebra and c.is_d2_invariant, _fmt(L, U))
    else:
        sat_sub.skipped = sat_any.skipped = "needs e^2 = 0"
    rep.results += [sat_sub, sat_any]

    cent = CheckResult("centralizer_normalizer_eps_invariant")
    if dual_ok:
        for _ in range(trials):
            U = sc.generated_d2_subalgebra(L, _random_vectors(rng, n, rng.randint(1, 2)))
            ok = sc.is_eps_invariant(L, sc.centralizer(L, U)) and sc.is_eps_invariant(L, sc.normalizer(L, U))
            cent.record(ok, _fmt(L, U))
    else:
        cent.skipped = "needs e^2 = 0"
    rep.results.append(cent)

    ser = CheckResult("series_terms_eps_invariant_ideals")
    for kind in ("derived", "lower_central", "upper_central"):
        for T in sc.series(L, kind):
            ser.record(sc.is_ideal(L, T) and sc.is_eps_invariant(L, T), f"{kind} term {_fmt(L, T)}")
    rep.results.append(ser)

    cor = CheckResult("nonzero_eps_not_semisimple")
    cor.record(L.eps is None or not st.is_semisimple(L), "Killing form nondegenerate")
    rep.results.append(cor)

    lem1 = CheckResult("radical_nilradical_eps_invariant")
    lem2 = CheckResult("eps_image_in_nilradical")
    R = st.radical(L)
    N = st.nilradical(L, seed=seed)
    lem1.record(sc.is_eps_invariant(L, R), "radical")
    lem1.record(sc.is_eps_invariant(L, N), "nilradical")
    lem2.record(L.eps_image <= N, _fmt(L, L.eps_image))
    rep.results += [lem1, lem2]

    lv = CheckResult("levi_factor")
    if levi is None:
        lv.skipped = "no --levi subalgebra given"
    elif not dual_ok:
        lv.skipped = "needs e^2 = 0"
    else:
        try:
            r = st.levi_check(L, levi)
            lv.record(r.ok, None if r.ok else str(r))
        except (NotASubalgebra, NotSemisimple) as exc:
            lv.record(False, str(exc))
    rep.results.append(lv)
    return rep


def subspace_from_labels(L: LieAlgebra, labels) -> Subspace:
    return span([L.e(lab) for lab in labels], L.dim)
