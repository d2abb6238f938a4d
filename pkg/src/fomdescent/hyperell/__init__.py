"""Hyperelliptic curves: models, isomorphisms, and descent."""

from .curve import HyperCurve, conj_curve, curve_from_json, make_curve
from .weil import mainhyp_classify, weil_search_C2, weil_verify
from .witness import IsomWitness, RedAutGroup, isomorphisms, moebius_from_triples, reduced_aut, structure_label

__all__ = [
    "HyperCurve",
    "IsomWitness",
    "RedAutGroup",
    "conj_curve",
    "curve_from_json",
    "isomorphisms",
    "mainhyp_classify",
    "make_curve",
    "moebius_from_triples",
    "reduced_aut",
    "structure_label",
    "weil_search_C2",
    "weil_verify",
]
