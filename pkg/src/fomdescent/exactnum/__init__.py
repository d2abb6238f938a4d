"""Exact arithmetic: rationals, cyclotomic fields, quadratic surds, finite fields."""

from fractions import Fraction as Rat

from .cyclotomic import CycCtx, CycElt, GaloisAuto, cyc_ctx, cyc_make, embed, galois_apply
from .encoding import decode_elt, encode_elt
from .finite import FqCtx, FqElt, fq_ctx
from .interval import (
    DEFAULT_PRECISION_CAP,
    ComplexBox,
    Interval,
    certified_sign,
    complex_interval,
    get_precision_cap,
    set_precision_cap,
)
from .quadratic import (
    QuadExtElt,
    conjugation_image,
    embed_quadratic,
    quadext_conj,
    quadratic_conductor,
    squarefree_part,
)

__all__ = [
    "Rat",
    "CycCtx",
    "CycElt",
    "GaloisAuto",
    "cyc_ctx",
    "cyc_make",
    "embed",
    "galois_apply",
    "FqCtx",
    "FqElt",
    "fq_ctx",
    "ComplexBox",
    "Interval",
    "complex_interval",
    "certified_sign",
    "DEFAULT_PRECISION_CAP",
    "get_precision_cap",
    "set_precision_cap",
    "QuadExtElt",
    "quadext_conj",
    "conjugation_image",
    "embed_quadratic",
    "quadratic_conductor",
    "squarefree_part",
    "encode_elt",
    "decode_elt",
]
