"""Exact cellular-algebra analysis: Gram matrices, decomposition numbers and
quasi-heredity over Z, Q, F_p and Z/m."""

from ._core import (
    CellkitError,
    CellularAlgebra,
    alpha_p,
    determinant,
    findim_schur_mod_m,
    gldim_schur,
    load_spec,
    run_cli,
    schur,
    smith_normal_form,
    temperley_lieb,
)

__all__ = [
    "CellkitError",
    "CellularAlgebra",
    "alpha_p",
    "determinant",
    "findim_schur_mod_m",
    "gldim_schur",
    "load_spec",
    "run_cli",
    "schur",
    "smith_normal_form",
    "temperley_lieb",
]
