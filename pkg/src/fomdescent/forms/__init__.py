"""Binary and ternary forms, univariate polynomials and rational invariants."""

from .homform import FormMapTester, HomForm, InvarianceTester, act, fixes_form, linear_form, proj_eq, proportionality
from .invariants import (
    GRUNDFORM_KEYS,
    RatFunc,
    binary_gcd,
    binary_resultant,
    binary_squarefree,
    dihedral_invariant,
    grundform,
    induced_map,
    is_invariant,
    orbit_form,
    psl2_invariant,
    stabilizer_form,
    tetrahedral_invariant,
)
from .poly import UPoly, determinant, is_squarefree, nullspace, poly_gcd, resultant, sylvester_matrix

__all__ = [
    "FormMapTester",
    "HomForm",
    "InvarianceTester",
    "act",
    "fixes_form",
    "linear_form",
    "proj_eq",
    "proportionality",
    "GRUNDFORM_KEYS",
    "RatFunc",
    "binary_gcd",
    "binary_resultant",
    "binary_squarefree",
    "dihedral_invariant",
    "grundform",
    "induced_map",
    "is_invariant",
    "orbit_form",
    "psl2_invariant",
    "stabilizer_form",
    "tetrahedral_invariant",
    "UPoly",
    "determinant",
    "is_squarefree",
    "nullspace",
    "poly_gcd",
    "resultant",
    "sylvester_matrix",
]
