"""Galois descent: cocycle verification and search, norm-equation helpers."""

from .cocycle import (
    CocycleFamily,
    cocycle_pair,
    cocycle_search,
    cocycle_verify,
    identity_witness,
    validate_witness,
)
from .formal import FormalUnit, GammaMonomial, act_formal, formal_proportional, identity_monomial
from .galois import GalQuotient
from .normeq import (
    NoneWithinBound,
    NormEqProblem,
    Solution,
    all_solutions_naive,
    find_obstruction_modulus,
    mod_certificate_verify,
    norm_eq_search,
    norm_eq_solutions,
)

__all__ = [
    "CocycleFamily",
    "FormalUnit",
    "GalQuotient",
    "GammaMonomial",
    "NoneWithinBound",
    "NormEqProblem",
    "Solution",
    "act_formal",
    "all_solutions_naive",
    "cocycle_pair",
    "cocycle_search",
    "cocycle_verify",
    "find_obstruction_modulus",
    "formal_proportional",
    "identity_monomial",
    "identity_witness",
    "mod_certificate_verify",
    "norm_eq_search",
    "norm_eq_solutions",
    "validate_witness",
]
