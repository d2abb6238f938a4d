"""Hyperelliptic models y^2 = f(x) with an optional explicit root list."""

from fractions import Fraction

from ..errors import ValidationError
from ..exactnum import decode_elt, encode_elt, galois_apply
from ..forms import HomForm, UPoly, is_squarefree
from ..projlinear.matrix import ProjPoint


class HyperCurve:
    """y^2 = f(x) of genus g >= 2.

    ``F`` is f homogenized in degree 2g+2, so an odd-degree f contributes a
    branch point at infinity through the factor X1.
    """

    __slots__ = ("ctx", "f", "roots", "genus", "F")

    def __init__(self, f, roots=None):
        self.ctx = f.ctx
        self.f = f
        self.roots = None if roots is None else tuple(roots)
        self.genus = (f.degree - 1) // 2
        self.F = HomForm.from_univariate(f, 2 * self.genus + 2)

    @property
    def includes_infinity(self):
        return self.f.degree % 2 == 1

    @property
    def has_roots(self):
        return self.roots is not None

    def branch_points(self):
        """Roots as points [r:1], plus [1:0] for odd degree."""
        if self.roots is None:
            raise ValidationError("this operation needs the roots of f explicitly")
        one = self.ctx.one
        pts = [ProjPoint._canonical(self.ctx, (r, one)) for r in self.roots]
        if self.includes_infinity:
            pts.append(ProjPoint._canonical(self.ctx, (one, self.ctx.zero)))
        return pts

    def __eq__(self, other):
        return isinstance(other, HyperCurve) and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return f"HyperCurve(genus={self.genus}, f={self.f})"

    def to_json(self):
        out = {"coeffs": [encode_elt(c) for c in self.f.c]}
        if self.roots is not None:
            out["roots"] = [encode_elt(r) for r in self.roots]
        return out


def _as_poly(f, ctx):
    if isinstance(f, UPoly):
        return f
    if ctx is None:
        raise ValidationError("a field context is needed to read coefficient lists")
    return UPoly(ctx, list(f))


def make_curve(f, roots=None, ctx=None):
    """Validated curve from a UPoly (or low-first coefficient list)."""
    f = _as_poly(f, ctx)
    if f.degree < 5:
        raise ValidationError(f"degree {f.degree} is below 5; genus would be < 2")
    if not is_squarefree(f):
        raise ValidationError("f has a repeated root")
    if roots is not None:
        roots = [f.ctx(r) for r in roots]
        if len(roots) != f.degree:
            raise ValidationError(f"{len(roots)} roots given for a degree-{f.degree} polynomial")
        if len(set(roots)) != len(roots):
            raise ValidationError("roots are not distinct")
        if UPoly.from_roots(roots, f.ctx, f.lc) != f:
            raise ValidationError("the given roots are inconsistent with f")
    return HyperCurve(f, roots)


def curve_from_json(data, ctx=None):
    try:
        coeffs = [decode_elt(c, ctx) for c in data["coeffs"]]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed curve JSON: {exc}") from exc
    ctx = ctx or next((c.ctx for c in coeffs if hasattr(c, "ctx")), None)
    if ctx is None:
        raise ValidationError("cannot infer the field of the curve")
    coeffs = [ctx(c if not isinstance(c, (int, str)) else Fraction(c)) for c in coeffs]
    roots = data.get("roots")
    if roots is not None:
        roots = [decode_elt(r, ctx) for r in roots]
    return make_curve(UPoly(ctx, coeffs), roots)


def conj_curve(sigma, X):
    """The Galois conjugate curve: coefficients and roots mapped by sigma."""
    f = X.f.map_coeffs(lambda c: galois_apply(sigma, c))
    roots = None if X.roots is None else [galois_apply(sigma, r) for r in X.roots]
    return HyperCurve(f, roots)
