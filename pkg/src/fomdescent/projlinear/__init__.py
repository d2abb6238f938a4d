"""Projective matrices, finite groups and the named group catalog."""

from .catalog import CATALOG_NAMES, CatalogKey, catalog, hessian_matrices, icosahedral_matrices, klein_matrices
from .group import (
    DEFAULT_CLOSURE_CAP,
    MatGroup,
    all_subgroups,
    conjugates_group,
    get_closure_cap,
    group_closure,
    normalizes,
    orbit,
    set_closure_cap,
    stabilizer,
    subgroup,
)
from .matrix import (
    ProjMat,
    ProjPoint,
    block_lift,
    context_of,
    diagonal,
    identity,
    pmat_make,
    point,
    symmetric_square,
)

__all__ = [
    "CATALOG_NAMES",
    "CatalogKey",
    "catalog",
    "hessian_matrices",
    "icosahedral_matrices",
    "klein_matrices",
    "DEFAULT_CLOSURE_CAP",
    "MatGroup",
    "all_subgroups",
    "get_closure_cap",
    "set_closure_cap",
    "conjugates_group",
    "group_closure",
    "normalizes",
    "orbit",
    "stabilizer",
    "subgroup",
    "ProjMat",
    "ProjPoint",
    "block_lift",
    "context_of",
    "diagonal",
    "identity",
    "pmat_make",
    "point",
    "symmetric_square",
]
