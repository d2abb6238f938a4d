"""Finite fields F_{p^r} for odd p.

The modulus is the lexicographically smallest monic irreducible polynomial
of degree r, comparing coefficient vectors from x^(r-1) down to x^0.
"""

from functools import lru_cache
from itertools import product
from numbers import Integral

import flint

from ..errors import ContextError, ValidationError


def _is_prime(p):
    return p > 1 and all(p % d for d in range(2, int(p**0.5) + 1))


class FqCtx:
    __slots__ = ("p", "r", "q", "modulus", "_zero", "_one")

    def __init__(self, p, r):
        if not _is_prime(p) or p == 2:
            raise ValidationError(f"characteristic must be an odd prime, got {p}")
        if r < 1:
            raise ValidationError("extension degree must be positive")
        self.p, self.r, self.q = p, r, p**r
        self.modulus = _smallest_irreducible(p, r)
        self._zero = FqElt(self, (0,) * r)
        self._one = FqElt(self, (1,) + (0,) * (r - 1))

    def __repr__(self):
        return f"FqCtx({self.p}^{self.r})"

    def __reduce__(self):
        return (fq_ctx, (self.p, self.r))

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    @property
    def characteristic(self):
        return self.p

    def __call__(self, value):
        if isinstance(value, FqElt):
            if value.ctx is not self:
                raise ContextError(f"element of {value.ctx} used in {self}")
            return value
        if isinstance(value, Integral):
            return FqElt(self, (int(value) % self.p,) + (0,) * (self.r - 1))
        if isinstance(value, (tuple, list)):
            if len(value) > self.r:
                raise ValidationError(f"at most {self.r} coefficients allowed")
            vals = tuple(int(c) % self.p for c in value)
            return FqElt(self, vals + (0,) * (self.r - len(vals)))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    @property
    def gen(self):
        """The class of x modulo the defining polynomial."""
        if self.r == 1:
            raise ValidationError("prime field has no polynomial generator")
        return self((0, 1))

    def elements(self):
        """All q elements, sorted by their coefficient vectors."""
        return [FqElt(self, c) for c in product(range(self.p), repeat=self.r)]

    def primitive_element(self):
        for x in self.elements():
            if not x.is_zero() and x.multiplicative_order() == self.q - 1:
                return x
        raise AssertionError("no primitive element found")

    def root_of_unity(self, n):
        if (self.q - 1) % n:
            raise ContextError(f"F_{self.q} has no primitive {n}-th root of unity")
        return self.primitive_element() ** ((self.q - 1) // n)


@lru_cache(maxsize=None)
def fq_ctx(p, r=1):
    return FqCtx(p, r)


@lru_cache(maxsize=None)
def _smallest_irreducible(p, r):
    for tail in product(range(p), repeat=r):
        coeffs = list(reversed(tail)) + [1]
        _, factors = flint.nmod_poly(coeffs, p).factor()
        if len(factors) == 1 and factors[0][1] == 1:
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")


class FqElt:
    __slots__ = ("ctx", "c")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.c = coeffs

    def _poly(self):
        return flint.nmod_poly(list(self.c), self.ctx.p)

    def _wrap(self, poly):
        ctx = self.ctx
        if ctx.r > 1:
            poly = poly % flint.nmod_poly(list(ctx.modulus), ctx.p)
        vals = [int(v) for v in poly.coeffs()]
        return FqElt(ctx, tuple(vals + [0] * (ctx.r - len(vals))))

    def _other(self, other):
        if isinstance(other, FqElt):
            if other.ctx is not self.ctx:
                raise ContextError(f"mixing {self.ctx} and {other.ctx}")
            return other
        if isinstance(other, Integral):
            return self.ctx(other)
        return None

    def key(self):
        return self.c

    def is_zero(self):
        return not any(self.c)

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        o = self._other(other) if isinstance(other, (FqElt, Integral)) else None
        if o is None:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(("Fq", self.ctx.q, self.c))

    def __repr__(self):
        if self.ctx.r == 1:
            return f"F{self.ctx.p}({self.c[0]})"
        return f"F{self.ctx.q}{self.c}"

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        p = self.ctx.p
        return FqElt(self.ctx, tuple((x + y) % p for x, y in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FqElt(self.ctx, tuple(-x % p for x in self.c))

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self._wrap(self._poly() * o._poly())

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.ctx.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else o * self.inverse()

    def frobenius(self, k=1):
        return self ** (self.ctx.p ** (k % self.ctx.r) if self.ctx.r > 1 else 1)

    def multiplicative_order(self):
        if self.is_zero():
            raise ValueError("zero has no multiplicative order")
        n, x = 1, self
        while x != 1:
            x = x * self
            n += 1
        return n

    def is_square(self):
        return self.is_zero() or self ** ((self.ctx.q - 1) // 2) == 1
