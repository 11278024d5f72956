"""Exact computations with finite-dimensional Lie algebras carrying a dual-number structure."""

from .algebra import LieAlgebra, direct_sum, quotient, validate
from .catalog import catalog
from .constructions import dualize, realify, semidirect
from .dual import DualMatrix
from .linalg import Matrix, Subspace, span
from .structure import fingerprint

__all__ = [
    "DualMatrix",
    "LieAlgebra",
    "Matrix",
    "Subspace",
    "catalog",
    "direct_sum",
    "dualize",
    "fingerprint",
    "quotient",
    "realify",
    "semidirect",
    "span",
    "validate",
]

__version__ = "0.1.0"
