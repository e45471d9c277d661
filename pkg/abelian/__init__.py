# abelian/__init__.py
"""Exact integer linear algebra: Smith normal form, presented groups, homomorphisms."""

from .exact import ExactnessCheck, exact_at, is_exact
from .groups import (
    AbHom,
    CanonicalForm,
    FgAbGroup,
    Presentation,
    cokernel,
    hom_cokernel,
    hom_image,
    hom_kernel,
)
from .matrix import IntMatrix, block_diagonal, hstack, vstack
from .snf import (
    SnfDecomposition,
    column_lattice_basis,
    in_column_span,
    kernel_basis,
    matrix_rank,
    smith_normal_form,
    solve_integer,
)

__all__ = [
    "IntMatrix", "hstack", "vstack", "block_diagonal",
    "SnfDecomposition", "smith_normal_form", "matrix_rank",
    "kernel_basis", "column_lattice_basis", "solve_integer", "in_column_span",
    "FgAbGroup", "Presentation", "CanonicalForm", "AbHom",
    "cokernel", "hom_kernel", "hom_image", "hom_cokernel",
    "ExactnessCheck", "exact_at", "is_exact",
]
