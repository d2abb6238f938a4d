"""JSON encodings for field elements.

Cyclotomic: ``{"N": 312, "coeffs": ["1/2", "0", ...]}``.
Finite field: ``{"p": 3, "r": 1, "coeffs": [2]}``.
"""

from fractions import Fraction

from ..errors import ValidationError
from .cyclotomic import CycElt, cyc_ctx, cyc_make
from .finite import FqElt, fq_ctx


def _trim(values, zero):
    values = list(values)
    while values and values[-1] == zero:
        values.pop()
    return values


def encode_elt(x):
    if isinstance(x, CycElt):
        return {"N": x.ctx.N, "coeffs": [str(c) for c in _trim(x.coeffs, 0)]}
    if isinstance(x, FqElt):
        return {"p": x.ctx.p, "r": x.ctx.r, "coeffs": list(_trim(x.c, 0))}
    raise TypeError(f"no JSON encoding for {type(x).__name__}")


def decode_elt(data, ctx=None):
    """Inverse of :func:`encode_elt`; bare numbers/strings need ``ctx``."""
    try:
        if isinstance(data, dict):
            if "N" in data:
                c = cyc_ctx(int(data["N"]))
                if ctx is not None and ctx is not c:
                    raise ValidationError(f"element of Q(zeta_{c.N}) where {ctx} was expected")
                return cyc_make(c, [Fraction(v) for v in data.get("coeffs", [])])
            if "p" in data:
                c = fq_ctx(int(data["p"]), int(data.get("r", 1)))
                return c(tuple(int(v) for v in data.get("coeffs", [])))
        if ctx is not None and isinstance(data, (int, str)):
            return ctx(Fraction(data)) if not hasattr(ctx, "p") else ctx(int(data))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad field element {data!r}: {exc}") from exc
    raise ValidationError(f"cannot decode field element {data!r}")
