"""Exact parallel-spinor computations for pseudo-Riemannian holonomy algebras.

Arithmetic is exact over Q(i, sqrt2); no floating point enters any result.
"""

from .catalog import ConstraintError, HolonomyId, algebra
from .clifford import Signature, build_rep, e_matrix, lift
from .engine import fixed_space, orientation_variants, theorem_table
from .numfield import FieldMatrix, FieldScalar, kernel_basis, span_equal
from .spinors import Spinor, chirality, gram_report, inner, u_spinor

__all__ = [
    "ConstraintError",
    "FieldMatrix",
    "FieldScalar",
    "HolonomyId",
    "Signature",
    "Spinor",
    "algebra",
    "build_rep",
    "chirality",
    "e_matrix",
    "fixed_space",
    "gram_report",
    "inner",
    "kernel_basis",
    "lift",
    "orientation_variants",
    "span_equal",
    "theorem_table",
    "u_spinor",
]
