"""Cyclotomic fields Q(zeta_N) in the power basis modulo Phi_N.

Every element carries its context; arithmetic between different contexts is
refused rather than silently embedded.  The fixed complex embedding is
``zeta_N -> exp(2*pi*i/N)`` and every sign convention refers to it.
"""

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

import flint

from ..errors import ContextError, ValidationError


def _to_fmpq(x):
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def _to_fraction(q):
    return Fraction(int(q.p), int(q.q))


def _lcm(a, b):
    return a * b // gcd(a, b)


class CycCtx:
    """The field Q(zeta_N).  Obtain instances through :func:`cyc_ctx`."""

    __slots__ = ("N", "degree", "modulus", "_zero", "_one")

    def __init__(self, N):
        if N < 1:
            raise ValidationError(f"cyclotomic order must be positive, got {N}")
        self.N = N
        self.modulus = flint.fmpq_poly(flint.fmpz_poly.cyclotomic(N).coeffs())
        self.degree = self.modulus.degree()
        self._zero = CycElt(self, flint.fmpq_poly([]))
        self._one = CycElt(self, flint.fmpq_poly([1]))

    def __repr__(self):
        return f"CycCtx({self.N})"

    def __reduce__(self):
        return (cyc_ctx, (self.N,))

    @property
    def cyclotomic_poly(self):
        return tuple(_to_fraction(c) for c in self.modulus.coeffs())

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def __call__(self, value):
        if isinstance(value, CycElt):
            if value.ctx is not self:
                raise ContextError(f"element of {value.ctx} used in {self}")
            return value
        if isinstance(value, (int, Rational)):
            return CycElt(self, flint.fmpq_poly([_to_fmpq(value)]))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def _reduce(self, poly):
        if poly.degree() >= self.degree:
            poly = poly % self.modulus
        return CycElt(self, poly)

    def zeta_power(self, j):
        """zeta_N ** j for any integer j."""
        j %= self.N
        coeffs = [0] * (j + 1)
        coeffs[j] = 1
        return self._reduce(flint.fmpq_poly(coeffs))

    @property
    def zeta(self):
        return self.zeta_power(1)

    def has_root_of_unity(self, n):
        return _lcm(2, self.N) % n == 0

    def root_of_unity(self, n, k=1):
        """exp(2*pi*i*k/n), provided the field contains it."""
        if n < 1:
            raise ValidationError("root of unity order must be positive")
        if self.N % n == 0:
            return self.zeta_power((self.N // n) * k)
        if self.N % 2 == 1 and (2 * self.N) % n == 0:
            # exp(pi*i/N) = -zeta_N^((N+1)/2) when N is odd
            half = -self.zeta_power((self.N + 1) // 2)
            return half ** (((2 * self.N) // n) * k % (2 * self.N))
        need = _lcm(self.N, n)
        raise ContextError(
            f"Q(zeta_{self.N}) has no primitive {n}-th root of unity; "
            f"minimal admissible order is {n}, e.g. use N={need}",
            minimal_order=need,
        )

    def from_coeffs(self, coeffs):
        return cyc_make(self, coeffs)

    @property
    def conjugation(self):
        return GaloisAuto(self, self.N - 1)

    def galois_group(self):
        return [GaloisAuto(self, k) for k in range(1, max(self.N, 2)) if gcd(k, self.N) == 1]


@lru_cache(maxsize=None)
def cyc_ctx(N):
    """Shared context for Q(zeta_N)."""
    return CycCtx(N)


def cyc_make(ctx, coeffs):
    """Element with the given power-basis coefficients (reduced form)."""
    coeffs = list(coeffs)
    if len(coeffs) > ctx.degree:
        raise ValidationError(
            f"coefficient index {ctx.degree} exceeds the basis of {ctx} "
            f"(at most {ctx.degree} coefficients, got {len(coeffs)})"
        )
    return CycElt(ctx, flint.fmpq_poly([_to_fmpq(c) for c in coeffs]))


class CycElt:
    __slots__ = ("ctx", "_p", "_hash")

    def __init__(self, ctx, poly):
        self.ctx = ctx
        self._p = poly
        self._hash = None

    # -- structure -----------------------------------------------------
    @property
    def coeffs(self):
        cs = [_to_fraction(c) for c in self._p.coeffs()]
        return tuple(cs + [Fraction(0)] * (self.ctx.degree - len(cs)))

    def key(self):
        """Sort key: lexicographic on the coefficient vector."""
        return self.coeffs

    def is_zero(self):
        return self._p.is_zero()

    def is_rational(self):
        return self._p.degree() <= 0

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return not self._p.is_zero()

    def __hash__(self):
        if self._hash is None and self.is_rational():
            self._hash = hash(self.coeffs[0])
        if self._hash is None:
            num = self._p.numer()
            self._hash = hash((self.ctx.N, tuple(int(c) for c in num.coeffs()), int(self._p.denom())))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, CycElt):
            return self.ctx is other.ctx and self._p == other._p
        if isinstance(other, (int, Rational)):
            return self._p == flint.fmpq_poly([_to_fmpq(other)])
        return NotImplemented

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if j == 0 else f"{c}*z^{j}")
        return f"CycElt(N={self.ctx.N}: {' + '.join(terms) or '0'})"

    # -- arithmetic ----------------------------------------------------
    def _other(self, other):
        if isinstance(other, CycElt):
            if other.ctx is not self.ctx:
                raise ContextError(f"mixing {self.ctx} and {other.ctx}")
            return other._p
        if isinstance(other, (int, Rational)):
            return flint.fmpq_poly([_to_fmpq(other)])
        return None

    def __add__(self, other):
        p = self._other(other)
        return NotImplemented if p is None else CycElt(self.ctx, self._p + p)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._other(other)
        return NotImplemented if p is None else CycElt(self.ctx, self._p - p)

    def __rsub__(self, other):
        p = self._other(other)
        return NotImplemented if p is None else CycElt(self.ctx, p - self._p)

    def __neg__(self):
        return CycElt(self.ctx, -self._p)

    def __mul__(self, other):
        p = self._other(other)
        if p is None:
            return NotImplemented
        return self.ctx._reduce(self._p * p)

    __rmul__ = __mul__

    def inverse(self):
        if self._p.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self._p.degree() == 0:
            return CycElt(self.ctx, flint.fmpq_poly([1 / self._p.coeffs()[0]]))
        g, s, _ = self._p.xgcd(self.ctx.modulus)
        return self.ctx._reduce(s / g.coeffs()[0])

    def __truediv__(self, other):
        p = self._other(other)
        if p is None:
            return NotImplemented
        return self * CycElt(self.ctx, p).inverse()

    def __rtruediv__(self, other):
        p = self._other(other)
        if p is None:
            return NotImplemented
        return CycElt(self.ctx, p) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = self.ctx.one
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conj(self):
        """Complex conjugate under the fixed embedding."""
        return self.ctx.conjugation(self)

    def __complex__(self):
        z = complex(1)
        w = cmath.exp(2j * cmath.pi / self.ctx.N)
        total = 0j
        for c in self.coeffs:
            total += float(c) * z
            z *= w
        return total


class GaloisAuto:
    """sigma_k : zeta_N -> zeta_N ** k."""

    __slots__ = ("ctx", "k")

    def __init__(self, ctx, k):
        N = ctx.N
        if gcd(k, N) != 1:
            raise ValidationError(f"Galois exponent {k} is not a unit modulo {N}")
        self.ctx = ctx
        self.k = k % N if N > 1 else 0

    def __repr__(self):
        return f"GaloisAuto(N={self.ctx.N}, k={self.k})"

    def __eq__(self, other):
        return isinstance(other, GaloisAuto) and other.ctx is self.ctx and other.k == self.k

    def __hash__(self):
        return hash(("sigma", self.ctx.N, self.k))

    @property
    def is_identity(self):
        return self.k == 1 % self.ctx.N if self.ctx.N > 1 else True

    @property
    def is_conjugation(self):
        return self.k == (self.ctx.N - 1) % max(self.ctx.N, 1)

    def __mul__(self, other):
        """Composition: (self * other)(x) = self(other(x))."""
        if not isinstance(other, GaloisAuto):
            return NotImplemented
        if other.ctx is not self.ctx:
            raise ContextError("composing automorphisms of different fields")
        return GaloisAuto(self.ctx, self.k * other.k)

    def inverse(self):
        return GaloisAuto(self.ctx, pow(self.k, -1, self.ctx.N) if self.ctx.N > 1 else 0)

    def order(self):
        n, g = 1, self
        while not g.is_identity:
            g = g * self
            n += 1
        return n

    def __call__(self, x):
        return galois_apply(self, x)


def galois_apply(sigma, x):
    """Apply sigma to a field element (rationals pass through unchanged)."""
    if isinstance(x, (int, Rational)):
        return x
    if not isinstance(x, CycElt):
        raise TypeError(f"cannot apply a cyclotomic automorphism to {type(x).__name__}")
    ctx = sigma.ctx
    if x.ctx is not ctx:
        raise ContextError(f"automorphism of {ctx} applied to element of {x.ctx}")
    if sigma.is_identity or x.is_rational():
        return x
    N, k = ctx.N, sigma.k
    coeffs = [flint.fmpq(0)] * N
    for j, c in enumerate(x._p.coeffs()):
        coeffs[(j * k) % N] += c
    return ctx._reduce(flint.fmpq_poly(coeffs))


def embed(x, target):
    """Image of x under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N)."""
    if isinstance(x, (int, Rational)):
        return target(x)
    src = x.ctx
    if target.N % src.N:
        raise ContextError(f"{src} does not embed into {target}", minimal_order=_lcm(src.N, target.N))
    step = target.N // src.N
    coeffs = [flint.fmpq(0)] * max(target.N, 1)
    for j, c in enumerate(x._p.coeffs()):
        coeffs[(j * step) % target.N] += c
    return target._reduce(flint.fmpq_poly(coeffs))
