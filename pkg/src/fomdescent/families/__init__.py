"""Counterexample families and their verification bundles."""

from .bundle import Bundle
from .ch5 import Ch5Instance, Ch5Params, ch5_build, ch5_witness, condition_report, expected_lambda, inversion_family_build
from .diag import ch7_diag_build, diag_generators
from .hessian import (
    G18Params,
    G36Params,
    g18_build,
    g18_form,
    g36_build,
    g36_form,
    hessian_invariants,
    square_in_eisenstein,
    surjection_lattice_check,
)

__all__ = [
    "Bundle",
    "Ch5Instance",
    "Ch5Params",
    "ch5_build",
    "ch5_witness",
    "condition_report",
    "expected_lambda",
    "inversion_family_build",
    "ch7_diag_build",
    "diag_generators",
    "G18Params",
    "G36Params",
    "g18_build",
    "g18_form",
    "g36_build",
    "g36_form",
    "hessian_invariants",
    "square_in_eisenstein",
    "surjection_lattice_check",
]
