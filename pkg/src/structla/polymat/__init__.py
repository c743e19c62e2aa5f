"""Polynomial matrices: shifted degrees, normal forms, approximant and kernel bases."""

from .approximant import approximant_basis, inv_apply_mod, kernel_basis
from .matrix import (
    PolyMat,
    col_reverse,
    form_predicate,
    leading_matrix,
    row_reverse,
    shifted_cdeg,
    shifted_rdeg,
)
from .reduction import module_membership, popov_normalize, weak_popov_transform

__all__ = [
    "PolyMat",
    "approximant_basis",
    "col_reverse",
    "form_predicate",
    "inv_apply_mod",
    "kernel_basis",
    "leading_matrix",
    "module_membership",
    "popov_normalize",
    "row_reverse",
    "shifted_cdeg",
    "shifted_rdeg",
    "weak_popov_transform",
]
