"""Smooth plane curves: certificates, conjugates and isomorphism checks."""

from .curve import PlaneCurve, conj_plane, isom_candidates_check
from .smooth import SmoothCert, bezout_bound, diag_family_smooth, smooth_by_symmetry, split_diagonal

__all__ = [
    "PlaneCurve",
    "SmoothCert",
    "bezout_bound",
    "conj_plane",
    "diag_family_smooth",
    "isom_candidates_check",
    "smooth_by_symmetry",
    "split_diagonal",
]
