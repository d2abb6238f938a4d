"""Hyperelliptic curves over C with field of moduli R but no real model.

Both families are parametrized by n-th roots: ``beta[i]`` is a chosen n-th
root of a_i (so a_i = beta[i]**n), which makes every branch point explicit:

* f-family: f(x) = prod (x^n - a_i)(x^n + 1/a_i^c), with conditions 2nr > 5
  and r odd whenever n is odd;
* g-family: g(x) = x prod (x^m - b_i)(x^m + 1/b_i^c), with sm even;
  here ``n`` plays the role of m and ``r`` that of s.
"""

from dataclasses import dataclass
from math import gcd
from typing import Tuple

from ..errors import ContextError, InconsistencyError, ValidationError
from ..exactnum import embed_quadratic
from ..forms import UPoly, is_squarefree
from ..hyperell import HyperCurve, IsomWitness, conj_curve, make_curve
from ..projlinear import pmat_make


@dataclass(frozen=True)
class Ch5Params:
    n: int
    r: int
    beta: Tuple
    which: str = "f"

    def __post_init__(self):
        object.__setattr__(self, "beta", tuple(self.beta))
        if self.which not in ("f", "g"):
            raise ValidationError("which must be 'f' or 'g'")
        if self.n < 1 or self.r < 1:
            raise ValidationError("n and r must be positive")
        if len(self.beta) != self.r:
            raise ValidationError(f"expected {self.r} parameters, got {len(self.beta)}")
        if any(b.is_zero() for b in self.beta):
            raise ValidationError("parameters must be nonzero")
        if self.which == "f":
            if 2 * self.n * self.r <= 5:
                raise ValidationError("the f-family needs 2nr > 5")
            if self.n % 2 and self.r % 2 == 0:
                raise ValidationError("the f-family needs r odd when n is odd")
        else:
            if (self.n * self.r) % 2:
                raise ValidationError("the g-family needs sm even")
            if 2 * self.n * self.r + 1 < 5:
                raise ValidationError("degree 2sm + 1 must be at least 5")

    @property
    def ctx(self):
        return self.beta[0].ctx

    @property
    def a(self):
        return tuple(b**self.n for b in self.beta)


@dataclass
class Ch5Instance:
    params: Ch5Params
    curve: object
    conditions: dict

    @property
    def admissible(self):
        return all(self.conditions.values())


def _roots(p):
    ctx, n = p.ctx, p.n
    if not ctx.has_root_of_unity(2 * n):
        need = ctx.N * 2 * n // gcd(ctx.N, 2 * n)
        raise ContextError(f"primitive {2 * n}-th roots of unity need N divisible by {2 * n}", minimal_order=need)
    zn = [ctx.root_of_unity(n, k) for k in range(n)]
    z2n = ctx.root_of_unity(2 * n)
    roots = [ctx.zero] if p.which == "g" else []
    for b in p.beta:
        roots += [b * z for z in zn]
        roots += [z2n / b.conj() * z for z in zn]
    return roots


def _multiset(values):
    return sorted(v.key() for v in values)


def _roots_of_unity_in(ctx, order_bound):
    """Roots of unity zeta != 1 in Q(zeta_N) with zeta^order_bound = 1."""
    L = ctx.N if ctx.N % 2 == 0 else 2 * ctx.N
    d = gcd(order_bound, L)
    return [ctx.root_of_unity(L, k * (L // d)) for k in range(1, d)]


def _special_moebius(ctx):
    s3 = embed_quadratic(ctx, 3)
    one = ctx.one
    return lambda P: None if (P * (s3 + 1) + one).is_zero() else -(P - s3 - one) / (P * (s3 + 1) + one)


def condition_report(p, curve):
    ctx = curve.ctx
    roots = list(curve.roots)
    zero_set = set(roots)
    nonzero = [r for r in roots if not r.is_zero()]
    report = {}
    report["squarefree"] = is_squarefree(curve.f)
    report["not_real"] = curve.f.map_coeffs(lambda c: c.conj()) != curve.f
    report["inversion_not_preserving"] = not {r.inverse() for r in nonzero} <= set(nonzero)
    # zeta*T = T forces zeta^(2r) = 1 and zeta in the field, so this scan is complete
    T = [x for a in p.a for x in (a, -a.conj().inverse())]
    base = _multiset(T)
    report["root_of_unity_condition"] = all(_multiset([z * t for t in T]) != base
                                            for z in _roots_of_unity_in(ctx, 2 * p.r))
    if p.n == 3:
        if p.which == "f":
            mob = _special_moebius(ctx)
            images = [mob(r) for r in roots]
            report["special_n3"] = not all(im is not None and im in zero_set for im in images)
        else:
            report["special_n3"] = (ctx.one + embed_quadratic(ctx, 3)) not in zero_set
    else:
        report["special_n3"] = True
    return report


def ch5_build(p):
    """Curve with explicit roots and the five named admissibility checks."""
    roots = _roots(p)
    f = UPoly.from_roots(roots, p.ctx)
    if len(set(roots)) == len(roots):
        curve = make_curve(f, roots)
    else:
        # unvalidated, so the report can name the failing condition
        curve = HyperCurve(f, roots)
    return Ch5Instance(p, curve, condition_report(p, curve))


def e_squared(p):
    """e^2 when the witness divides y by x^(g+1)."""
    ctx = p.ctx
    lam = ctx.one
    for a in p.a:
        lam = lam * (-a.conj() / a)
    if p.which == "g":
        lam = lam / ctx.root_of_unity(2 * p.n)
    return lam


def expected_lambda(p):
    """lam for the canonical lift [[0, 1], [zeta_2n, 0]], which divides y by (zeta_2n x)^(g+1)."""
    genus = p.n * p.r - 1 if p.which == "f" else p.n * p.r
    return e_squared(p) * p.ctx.root_of_unity(2 * p.n) ** (2 * genus + 2)


def ch5_witness(inst):
    """The isomorphism x -> 1/(zeta_2n x) from X to its complex conjugate."""
    p, X = inst.params, inst.curve
    ctx = X.ctx
    M = pmat_make([[0, 1], [ctx.root_of_unity(2 * p.n), 0]], ctx)
    try:
        w = IsomWitness.from_matrix(M, X, conj_curve(ctx.conjugation, X))
    except ValidationError as exc:
        raise InconsistencyError(f"the conjugation witness failed to validate: {exc}") from exc
    if w.lam != expected_lambda(p):
        raise InconsistencyError("witness lambda differs from the product formula")
    if w.lam.conj() * w.lam != 1:
        raise InconsistencyError("lambda^c * lambda != 1")
    return w


def inversion_family_build(m, s, delta):
    """z prod (z^m - d_i)(z^m - 1/d_i^c) with d_i = delta_i^m: has z -> 1/z type real structure."""
    delta = tuple(delta)
    ctx = delta[0].ctx
    if (m * s) % 2:
        raise ValidationError("sm must be even")
    zm = [ctx.root_of_unity(m, k) for k in range(m)]
    roots = [ctx.zero]
    for d in delta:
        roots += [d * z for z in zm]
        roots += [z / d.conj() for z in zm]
    return make_curve(UPoly.from_roots(roots, ctx), roots)
