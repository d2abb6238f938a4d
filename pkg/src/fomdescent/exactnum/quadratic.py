"""Quadratic surds inside cyclotomic fields and formal quadratic extensions."""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

from sympy import factorint

from ..errors import ContextError, PrecisionError, ValidationError
from .cyclotomic import CycElt, galois_apply
from .interval import certified_sign


def squarefree_part(d):
    """Write a nonzero rational d as s**2 * d0 with d0 a squarefree integer."""
    d = Fraction(d)
    if d == 0:
        raise ValidationError("zero has no squarefree part")
    n = d.numerator * d.denominator
    d0 = -1 if n < 0 else 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            d0 *= p
    s2 = Fraction(n, d0) / d.denominator**2
    s = Fraction(isqrt(s2.numerator), isqrt(s2.denominator))
    return s, d0


def quadratic_conductor(d):
    _, d0 = squarefree_part(d)
    return abs(d0) if d0 % 4 == 1 else 4 * abs(d0)


def _gauss_sum(ctx, p):
    """sum_a (a|p) zeta_p^a, whose square is (-1)^((p-1)/2) p."""
    total = ctx.zero
    for a in range(1, p):
        legendre = 1 if pow(a, (p - 1) // 2, p) == 1 else -1
        total = total + legendre * ctx.root_of_unity(p, a)
    return total


def embed_quadratic(ctx, d):
    """sqrt(d) inside Q(zeta_N), built from Gauss sums.

    The branch has positive real part for d > 0 and positive imaginary part
    for d < 0 under the fixed embedding.
    """
    d = Fraction(d)
    s, d0 = squarefree_part(d)
    conductor = quadratic_conductor(d)
    if ctx.N % conductor:
        raise ContextError(
            f"sqrt({d}) needs conductor {conductor}, which does not divide N={ctx.N}; "
            f"minimal admissible N is {conductor}",
            minimal_order=conductor,
        )
    root = ctx.one
    star = 1
    for p in factorint(abs(d0)):
        if p == 2:
            continue
        root = root * _gauss_sum(ctx, p)
        star *= p if p % 4 == 1 else -p
    rest = d0 // star
    if rest == -1:
        root = root * ctx.root_of_unity(4)
    elif rest == 2:
        root = root * (ctx.root_of_unity(8) + ctx.root_of_unity(8, -1))
    elif rest == -2:
        root = root * (ctx.root_of_unity(8) + ctx.root_of_unity(8, 3))
    if certified_sign(root, "re" if d > 0 else "im") < 0:
        root = -root
    return root * s


@dataclass(frozen=True)
class QuadExtElt:
    """a + b*sqrt(w) with a, b, w in one cyclotomic field.

    ``sqrt(w)`` is a formal symbol: equality is coefficientwise, which is the
    field equality whenever w is not a square in the base field.
    ``conj_image``, when known, is the base element k with
    c(sqrt(w)) = k * sqrt(w) for complex conjugation c.
    """

    w: CycElt
    a: CycElt
    b: CycElt
    conj_image: Optional[CycElt] = None

    def __post_init__(self):
        if self.w.is_zero():
            raise ValidationError("radicand must be nonzero")
        ctx = self.w.ctx
        object.__setattr__(self, "a", ctx(self.a))
        object.__setattr__(self, "b", ctx(self.b))

    @classmethod
    def sqrt(cls, w):
        ctx = w.ctx
        return cls(w, ctx.zero, ctx.one)

    @classmethod
    def base(cls, x, w=None):
        ctx = x.ctx
        return cls(w if w is not None else ctx.one, x, ctx.zero)

    @property
    def is_base(self):
        return self.b.is_zero()

    def _match(self, other):
        if isinstance(other, QuadExtElt):
            if other.is_base:
                return other.a, other.b
            if self.is_base or other.w == self.w:
                return other.a, other.b
            raise ValidationError("quadratic elements over different radicands (composite extension)")
        return self.w.ctx(other), self.w.ctx.zero

    def _radicand(self, other):
        if self.is_base and isinstance(other, QuadExtElt) and not other.is_base:
            return other.w, other.conj_image
        return self.w, self.conj_image

    def __add__(self, other):
        a, b = self._match(other)
        w, k = self._radicand(other)
        return QuadExtElt(w, self.a + a, self.b + b, k)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElt(self.w, -self.a, -self.b, self.conj_image)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self._match(other)
        w, k = self._radicand(other)
        return QuadExtElt(w, self.a * a + self.b * b * w, self.a * b + self.b * a, k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QuadExtElt):
            other = QuadExtElt.base(self.w.ctx(other))
        if self.is_base and other.is_base:
            return self.a == other.a
        if self.w != other.w and not (self.is_base or other.is_base):
            raise ValidationError("cannot compare elements over different radicands")
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b) if not self.is_base else (self.a,))


def conjugation_image(w, root=None, precision_cap=None):
    """k with c(sqrt w) = k*sqrt(w) for complex conjugation c.

    Requires w^c * w to be a square t^2 in the base field; ``root`` supplies
    t, otherwise the cases w^c*w = 1 and w^c = w are recognised.  Since
    c(sqrt w)*sqrt(w) = |w| is a positive real number, k = |w| / w and the sign
    of t decides between t and -t.
    """
    wc = w.conj()
    norm = wc * w
    if root is None:
        if norm == 1:
            root = w.ctx.one
        elif wc == w:
            root = w
        else:
            raise ValidationError("conjugation image of sqrt(w) needs a square root of w^c*w")
    if root * root != norm:
        raise ValidationError("supplied root does not square to w^c*w")
    s = certified_sign(root, "re", precision_cap)
    if s == 0:
        raise PrecisionError("root of w^c*w has zero real part; w must be nonzero")
    return (root if s > 0 else -root) / w


def quadext_conj(x, sigma, root=None, branch=None, precision_cap=None):
    """Extend sigma to a + b*sqrt(w) and apply it.

    For complex conjugation the image of sqrt(w) is forced by the embedding and
    resolved with certified intervals.  Any other sigma has two extensions; the
    caller must then choose ``branch`` = +1 or -1 together with ``root``, a
    square root t of sigma(w)*w, meaning sigma(sqrt w) = branch * t / sqrt(w).
    """
    a = galois_apply(sigma, x.a)
    b = galois_apply(sigma, x.b)
    if x.is_base:
        return QuadExtElt(x.w, a, b, x.conj_image)
    if sigma.is_identity:
        return x
    if sigma.is_conjugation:
        k = x.conj_image
        if k is None:
            k = conjugation_image(x.w, root, precision_cap)
        return QuadExtElt(x.w, a, b * k, k)
    if branch not in (1, -1) or root is None:
        raise ValidationError(
            "sigma is not complex conjugation: its extension to sqrt(w) is a choice; "
            "pass root and branch explicitly"
        )
    sw = galois_apply(sigma, x.w)
    if root * root != sw * x.w:
        raise ValidationError("supplied root does not square to sigma(w)*w")
    return QuadExtElt(x.w, a, b * branch * root / x.w, x.conj_image)
