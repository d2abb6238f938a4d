"""The norm equation -u = x^2 + v y^2 over K = Q(omega).

Elements of Z[omega] are integer pairs (a0, a1) meaning a0 + a1*omega with
omega^2 = -1 - omega.  A point of height <= B is x = a/d, y = b/d with
a, b in Z[omega], coefficients bounded by B in absolute value, and
1 <= d <= B.

Non-solvability is certified locally: if for some prime P of Z[omega] above
p the projective equation -u z^2 = x^2 + v y^2 has no P-primitive solution
modulo P^k, it has no nontrivial solution in K_P and hence none in K (any
solution can be rescaled to be P-primitive).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

import numpy as np
from sympy import isprime

from ..errors import ValidationError


@dataclass(frozen=True)
class NormEqProblem:
    u: Fraction
    v: Fraction
    bound: int = 50
    certificate: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))
        if self.u == 0 or self.v == 0:
            raise ValidationError("u and v must be nonzero")
        if self.bound < 1:
            raise ValidationError("search bound must be at least 1")


@dataclass(frozen=True)
class Solution:
    x: tuple
    y: tuple
    d: int

    @property
    def kind(self):
        return "Solution"


@dataclass(frozen=True)
class NoneWithinBound:
    bound: int

    @property
    def kind(self):
        return "NoneWithinBound"


def zw_mul(a, b):
    a0, a1 = a
    b0, b1 = b
    # (a0 + a1 w)(b0 + b1 w) with w^2 = -1 - w
    return (a0 * b0 - a1 * b1, a0 * b1 + a1 * b0 - a1 * b1)


def _scaled(prob):
    L = lcm(prob.u.denominator, prob.v.denominator)
    return L, int(prob.u * L), int(prob.v * L)


_SHIFT = np.int64(1 << 32)


def _square_keys(B, L):
    r = np.arange(-B, B + 1, dtype=np.int64)
    p, q = np.meshgrid(r, r, indexing="ij")
    p, q = p.ravel(), q.ravel()
    sq0, sq1 = p * p - q * q, 2 * p * q - q * q
    keys = (L * sq0) * _SHIFT + L * sq1
    order = np.argsort(keys, kind="stable")
    return sq0, sq1, keys[order], order


def _hits(prob):
    """Yield (d, index of b, index of a) with d ascending, b in box order."""
    B = prob.bound
    L, Lu, Lv = _scaled(prob)
    sq0, sq1, sorted_keys, order = _square_keys(B, L)
    for d in range(1, B + 1):
        target = (-Lu * d * d - Lv * sq0) * _SHIFT - Lv * sq1
        lo = np.searchsorted(sorted_keys, target, side="left")
        hi = np.searchsorted(sorted_keys, target, side="right")
        for i in np.flatnonzero(hi > lo):
            for pos in range(lo[i], hi[i]):
                yield d, int(i), int(order[pos])


def _pair(index, B):
    w = 2 * B + 1
    return (index // w - B, index % w - B)


def norm_eq_solutions(prob):
    """Every (a, b, d) of height <= B with a^2 + v b^2 = -u d^2, sorted."""
    B = prob.bound
    return sorted((_pair(j, B), _pair(i, B), d) for d, i, j in _hits(prob))


def norm_eq_search(prob):
    """First solution in (d, b) order, or NoneWithinBound."""
    B = prob.bound
    for d, i, j in _hits(prob):
        return Solution(x=_pair(j, B), y=_pair(i, B), d=d)
    return NoneWithinBound(bound=B)


def all_solutions_naive(prob):
    """Every (a, b, d) of height <= B; a plain loop used as a test oracle."""
    B = prob.bound
    rng = range(-B, B + 1)
    out = []
    for d in range(1, B + 1):
        for b in ((i, j) for i in rng for j in rng):
            vb = zw_mul(b, b)
            for a in ((i, j) for i in rng for j in rng):
                aa = zw_mul(a, a)
                if aa[0] + prob.v * vb[0] == -prob.u * d * d and aa[1] + prob.v * vb[1] == 0:
                    out.append((a, b, d))
    return sorted(out)


# -- local certificates ------------------------------------------------------


def _omega_roots(p, k):
    """Roots of x^2 + x + 1 modulo p^k (p = 1 mod 3), Hensel-lifted."""
    m = p**k
    roots = []
    for r in range(p):
        if (r * r + r + 1) % p == 0:
            for j in range(1, k):
                mod = p ** (j + 1)
                f = r * r + r + 1
                df = 2 * r + 1
                r = (r - f * pow(df, -1, mod)) % mod
            roots.append(r % m)
    return roots


class _LocalRing:
    """O_K / P^k for one prime P above p, with the P-adic unit test."""

    def __init__(self, p, k, root=None):
        self.p, self.k, self.root = p, k, root
        m = p**k
        if root is not None:  # split: O/P^k = Z/p^k, omega -> root
            self.elements = list(range(m))
            self.mul = lambda a, b: a * b % m
            self.add = lambda a, b: (a + b) % m
            self.embed = lambda a0, a1: (a0 + a1 * root) % m
            self.is_unit = lambda a: a % p != 0
            self.nonunits = [a for a in range(m) if a % p == 0]
        else:  # inert: O/P^k = (Z/p^k)[omega]
            self.elements = [(i, j) for i in range(m) for j in range(m)]

            def mul(a, b):
                c = zw_mul(a, b)
                return (c[0] % m, c[1] % m)

            self.mul = mul
            self.add = lambda a, b: ((a[0] + b[0]) % m, (a[1] + b[1]) % m)
            self.embed = lambda a0, a1: (a0 % m, a1 % m)
            self.is_unit = lambda a: a[0] % p != 0 or a[1] % p != 0
            self.nonunits = [a for a in self.elements if not self.is_unit(a)]
        self.one = self.embed(1, 0)
        self.squares = {}
        for x in self.elements:
            self.squares.setdefault(self.mul(x, x), []).append(x)

    def scalar(self, n):
        return self.embed(n, 0)


def _has_primitive_solution(ring, Lu, Lv, L):
    """-Lu z^2 = L x^2 + Lv y^2 with (x, y, z) P-primitive, modulo P^k."""
    mu, mv, mL = ring.scalar(-Lu), ring.scalar(Lv), ring.scalar(L)

    def rhs_ok(x, y, z):
        lhs = ring.mul(mu, ring.mul(z, z))
        rhs = ring.add(ring.mul(mL, ring.mul(x, x)), ring.mul(mv, ring.mul(y, y)))
        return lhs == rhs

    one = ring.one
    # normalize the first unit coordinate among (z, y, x) to 1
    for y in ring.elements:
        for x in ring.elements:
            if rhs_ok(x, y, one):
                return True
    for z in ring.nonunits:
        for x in ring.elements:
            if rhs_ok(x, one, z):
                return True
    for z in ring.nonunits:
        for y in ring.nonunits:
            if rhs_ok(one, y, z):
                return True
    return False


def _check_denominators(prob, p):
    if p == 3:
        raise ValidationError("p = 3 ramifies in Q(omega); certificates at 3 are not supported")
    if not isprime(p):
        raise ValidationError(f"{p} is not prime")
    L, Lu, Lv = _scaled(prob)
    if L % p == 0:
        raise ValidationError(f"p = {p} divides a denominator of u or v")
    return L, Lu, Lv


def mod_certificate_verify(prob, certificate=None):
    """True iff some prime above p admits no primitive solution mod P^k."""
    cert = certificate or prob.certificate
    if cert is None:
        raise ValidationError("no certificate (p, k) supplied")
    p, k = int(cert[0]), int(cert[1])
    if k < 1:
        raise ValidationError("certificate exponent must be at least 1")
    L, Lu, Lv = _check_denominators(prob, p)
    rings = [_LocalRing(p, k, r) for r in _omega_roots(p, k)] if p % 3 == 1 else [_LocalRing(p, k)]
    return any(not _has_primitive_solution(ring, Lu, Lv, L) for ring in rings)


def find_obstruction_modulus(prob, max_prime=50, max_k=3, max_size=20000):
    """Smallest (p, k) in (p, k) order whose certificate verifies, or None."""
    for p in range(2, max_prime + 1):
        if p == 3 or not isprime(p):
            continue
        if _scaled(prob)[0] % p == 0:
            continue
        for k in range(1, max_k + 1):
            size = p**k if p % 3 == 1 else p ** (2 * k)
            if size > max_size:
                break
            if mod_certificate_verify(prob, (p, k)):
                return (p, k)
    return None
