"""Certified complex boxes for cyclotomic numbers.

Endpoints are exact rationals.  The only inexact step is bounding
cos(2*pi*j/N) and sin(2*pi*j/N), done with mpmath interval arithmetic;
everything afterwards is exact rational arithmetic on the box endpoints.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from mpmath import iv
from mpmath.libmp import to_rational

from ..errors import PrecisionError, ValidationError

DEFAULT_START_BITS = 64
DEFAULT_PRECISION_CAP = 4096

_iv_lock = threading.Lock()
_precision_cap = DEFAULT_PRECISION_CAP


def set_precision_cap(bits):
    """Process-wide cap used when no explicit ``precision_cap`` is passed."""
    global _precision_cap
    if int(bits) < DEFAULT_START_BITS:
        raise ValidationError(f"precision cap must be at least {DEFAULT_START_BITS} bits")
    _precision_cap = int(bits)


def get_precision_cap():
    return _precision_cap


def _endpoints(x):
    return tuple(Fraction(*map(int, to_rational(t))) for t in x._mpi_)


@lru_cache(maxsize=64)
def _unit_table(N, bits):
    """Rational boxes around exp(2*pi*i*j/N) for 0 <= j < N."""
    with _iv_lock:
        saved = iv.prec
        try:
            iv.prec = bits + 16
            out = []
            for j in range(N):
                angle = iv.mpf(2 * j) / N * iv.pi
                out.append(_endpoints(iv.cos(angle)) + _endpoints(iv.sin(angle)))
        finally:
            iv.prec = saved
    return tuple(out)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __add__(self, other):
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other):
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other):
        ps = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(ps), max(ps))

    def scale(self, c):
        c = Fraction(c)
        return Interval(c * self.lo, c * self.hi) if c >= 0 else Interval(c * self.hi, c * self.lo)

    @property
    def width(self):
        return self.hi - self.lo

    def contains(self, x):
        return self.lo <= Fraction(x) <= self.hi

    def sign(self):
        """+1 or -1 when the interval excludes zero, else 0 (undecided)."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0


@dataclass(frozen=True)
class ComplexBox:
    re: Interval
    im: Interval

    def __add__(self, other):
        return ComplexBox(self.re + other.re, self.im + other.im)

    def __mul__(self, other):
        return ComplexBox(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    @property
    def width(self):
        return max(self.re.width, self.im.width)

    def contains(self, z):
        if isinstance(z, tuple):
            re, im = z
        else:
            z = complex(z)
            re, im = z.real, z.imag
        return self.re.contains(re) and self.im.contains(im)

    def contains_box(self, other):
        return (
            self.re.lo <= other.re.lo
            and other.re.hi <= self.re.hi
            and self.im.lo <= other.im.lo
            and other.im.hi <= self.im.hi
        )

    def padded(self, eps):
        eps = Fraction(eps)
        return ComplexBox(
            Interval(self.re.lo - eps, self.re.hi + eps), Interval(self.im.lo - eps, self.im.hi + eps)
        )


def complex_interval(x, precision_bits=DEFAULT_START_BITS):
    """Box certified to contain the image of x under zeta_N -> exp(2 pi i/N)."""
    if precision_bits < 32:
        raise ValidationError("precision_bits must be at least 32")
    table = _unit_table(x.ctx.N, precision_bits)
    re = Interval(Fraction(0), Fraction(0))
    im = Interval(Fraction(0), Fraction(0))
    for j, c in enumerate(x.coeffs):
        if c:
            clo, chi, slo, shi = table[j]
            re = re + Interval(clo, chi).scale(c)
            im = im + Interval(slo, shi).scale(c)
    return ComplexBox(re, im)


def certified_sign(x, part="re", precision_cap=None):
    """Sign of the real (or imaginary) part of x, refining precision as needed.

    Returns 0 only when that part is exactly zero.  Raises PrecisionError if the
    cap is reached without separating the part from zero.
    """
    if part == "re":
        exact = x + x.conj()
    elif part == "im":
        exact = x - x.conj()
    else:
        raise ValidationError(f"part must be 're' or 'im', not {part!r}")
    if exact.is_zero():
        return 0
    if precision_cap is None:
        precision_cap = _precision_cap
    bits = DEFAULT_START_BITS
    while bits <= precision_cap:
        box = complex_interval(x, bits)
        s = (box.re if part == "re" else box.im).sign()
        if s:
            return s
        bits *= 2
    raise PrecisionError(f"needs more precision: sign of {part}({x!r}) unresolved at {precision_cap} bits")
