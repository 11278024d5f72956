"""Subspace-level operators on a Lie algebra with dual structure.

Everything here is a linear solve or a closure iteration over exact
subspaces; closures grow strictly, so ``dim L`` rounds always suffice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import LieAlgebra
from .linalg import (
    DimensionMismatch,
    Matrix,
    Subspace,
    kernel,
    span,
    unit_vector,
)


def _check(L: LieAlgebra, U: Subspace) -> None:
    if U.ambient_dim != L.dim:
        raise DimensionMismatch(f"subspace of Q^{U.ambient_dim} in an algebra of dimension {L.dim}")


def full(L: LieAlgebra) -> Subspace:
    return Subspace.full(L.dim)


def bracket_space(L: LieAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """[U, V] = span of brackets of basis vectors."""
    _check(L, U)
    _check(L, V)
    return span([L.bracket(u, v) for u in U.basis for v in V.basis], L.dim)


def eps_image(L: LieAlgebra, U: Subspace) -> Subspace:
    _check(L, U)
    return span([L.apply_eps(u) for u in U.basis], L.dim)


def saturate(L: LieAlgebra, U: Subspace) -> Subspace:
    """U + eps U, the smallest eps-stable subspace containing U when eps^2 = 0."""
    _check(L, U)
    L.require_dual("saturation")
    return U + eps_image(L, U)


@dataclass(frozen=True)
class SubspaceClassification:
    is_subalgebra: bool
    is_ideal: bool
    is_d2_invariant: bool
    is_abelian: bool


def is_subalgebra(L: LieAlgebra, U: Subspace) -> bool:
    return bracket_space(L, U, U) <= U


def is_ideal(L: LieAlgebra, U: Subspace) -> bool:
    return bracket_space(L, full(L), U) <= U


def is_eps_invariant(L: LieAlgebra, U: Subspace) -> bool:
    return eps_image(L, U) <= U


def is_abelian(L: LieAlgebra, U: Subspace) -> bool:
    return bracket_space(L, U, U).is_zero()


def classify_subspace(L: LieAlgebra, U: Subspace) -> SubspaceClassification:
    _check(L, U)
    sq = bracket_space(L, U, U)
    return SubspaceClassification(
        is_subalgebra=sq <= U,
        is_ideal=is_ideal(L, U),
        is_d2_invariant=is_eps_invariant(L, U),
        is_abelian=sq.is_zero(),
    )


def _closure(L: LieAlgebra, start: Subspace, step) -> Subspace:
    cur = start
    for _ in range(L.dim + 1):
        nxt = cur + step(cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise AssertionError("closure did not stabilise within dim L rounds")


def generated_subalgebra(L: LieAlgebra, vectors) -> Subspace:
    start = span(list(vectors), L.dim)
    return _closure(L, start, lambda U: bracket_space(L, U, U))


def generated_d2_subalgebra(L: LieAlgebra, vectors) -> Subspace:
    L.require_dual("D2-closure")
    start = span(list(vectors), L.dim)
    return _closure(L, start, lambda U: bracket_space(L, U, U) + eps_image(L, U))


def generated_ideal(L: LieAlgebra, vectors) -> Subspace:
    start = span(list(vectors), L.dim)
    return _closure(L, start, lambda U: bracket_space(L, full(L), U))


def _bracket_condition(L: LieAlgebra, U: Subspace, target: Subspace) -> Subspace:
    """{x in L : [x, u] in target for all u in U}."""
    _check(L, U)
    n = L.dim
    if n == 0:
        return Subspace.full(0)
    ann = target.annihilator()
    rows = []
    for u in U.basis:
        # column i of this block is [x_i, u]
        cols = Matrix.from_columns([L.bracket(unit_vector(n, i), u) for i in range(n)], n)
        rows.extend((ann @ cols).rows)
    if not rows:
        return Subspace.full(n)
    return kernel(Matrix(tuple(rows), n))


def center(L: LieAlgebra) -> Subspace:
    return _bracket_condition(L, full(L), Subspace.zero(L.dim))


def centralizer(L: LieAlgebra, U: Subspace) -> Subspace:
    return _bracket_condition(L, U, Subspace.zero(L.dim))


def normalizer(L: LieAlgebra, U: Subspace) -> Subspace:
    return _bracket_condition(L, U, U)


def derived_series(L: LieAlgebra) -> list:
    out = [full(L)]
    while True:
        nxt = bracket_space(L, out[-1], out[-1])
        if nxt == out[-1]:
            return out
        out.append(nxt)


def lower_central_series(L: LieAlgebra) -> list:
    out = [full(L)]
    while True:
        nxt = bracket_space(L, full(L), out[-1])
        if nxt == out[-1]:
            return out
        out.append(nxt)


def upper_central_series(L: LieAlgebra) -> list:
    out = [Subspace.zero(L.dim)]
    while True:
        nxt = _bracket_condition(L, full(L), out[-1])
        if nxt == out[-1]:
            return out
        out.append(nxt)


def series(L: LieAlgebra, kind: str) -> list:
    try:
        fn = {
            "derived": derived_series,
            "lower_central": lower_central_series,
            "upper_central": upper_central_series,
        }[kind]
    except KeyError:
        raise ValueError(f"unknown series kind {kind!r}") from None
    return fn(L)


def random_vector(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> tuple:
    return tuple(Fraction(rng.randint(lo, hi)) for _ in range(n))


def random_subspace(rng: random.Random, n: int, dim: int | None = None) -> Subspace:
    """Span of ``dim`` random vectors with entries in -3..3 (dim drawn uniformly if omitted)."""
    k = rng.randint(0, n) if dim is None else dim
    return span([random_vector(rng, n) for _ in range(k)], n)

