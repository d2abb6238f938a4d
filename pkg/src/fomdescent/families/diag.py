"""Smooth plane curves X2^(2nr) = f(X0, X1) built from the f-family.

The binary form f is the degree-2nr homogenization of the hyperelliptic
f-family polynomial, f = prod (X0^n - a_i X1^n)(X0^n + X1^n / a_i^c).
"""

from math import lcm

from ..descent import FormalUnit, GalQuotient, GammaMonomial, cocycle_search, validate_witness
from ..errors import ValidationError
from ..exactnum import cyc_ctx, embed
from ..forms import HomForm, is_invariant
from ..planecurve import PlaneCurve, diag_family_smooth
from ..projlinear import diagonal, group_closure
from .bundle import Bundle
from .ch5 import Ch5Params, ch5_build


def diag_generators(n, r, ctx):
    """E, F, H: scalings of X0 and X1 by zeta_n and of X2 by zeta_2nr."""
    zn, zh = ctx.root_of_unity(n), ctx.root_of_unity(2 * n * r)
    return [diagonal([zn, 1, 1], ctx), diagonal([1, zn, 1], ctx), diagonal([1, 1, zh], ctx)]


def _lift_params(p):
    N = lcm(p.ctx.N, 2 * p.n * p.r)
    ctx = cyc_ctx(N if N % 4 != 2 else N // 2)
    return Ch5Params(p.n, p.r, tuple(embed(b, ctx) for b in p.beta), "f"), ctx


def diag_form(p, ctx):
    inst = ch5_build(p)
    f = HomForm.from_univariate(inst.curve.f, 2 * p.n * p.r)
    D = 2 * p.n * p.r
    X2D = HomForm(ctx, 3, D, {(0, 0, D): 1})
    f3 = HomForm(ctx, 3, D, {(a, b, 0): c for (a, b), c in f.terms.items()})
    return inst, X2D - f3


def ch7_diag_build(p):
    """Plane curve h = 0 and its verification bundle, ending in the descent search."""
    if p.which != "f":
        raise ValidationError("the diagonal construction uses the f-family")
    p, ctx = _lift_params(p)
    inst, h = diag_form(p, ctx)
    if not inst.admissible:
        raise ValidationError(f"parameters fail conditions: {[k for k, v in inst.conditions.items() if not v]}")
    b = Bundle("diag")
    b.data["field_order"] = ctx.N
    gens = diag_generators(p.n, p.r, ctx)
    b.check("EFH_invariance", is_invariant(h, gens))
    group = group_closure(gens)
    b.data["group_order"] = group.order
    cert = diag_family_smooth(h)
    b.check("smooth", cert is not None)
    X = PlaneCurve(h, cert)

    w = ctx.one
    for a in p.a:
        w = w * (-a.conj() / a)
    D = 2 * p.n * p.r
    unit = FormalUnit(w, D)
    b.check("gamma_unit_modulus", w.conj() * w == 1)
    one = ctx.one
    mu = GammaMonomial(unit, (1, 0, 2), [(one, 0), (ctx.root_of_unity(2 * p.n), 0), (one, 1)])
    c = ctx.conjugation
    b.check("mu_is_isomorphism", validate_witness(mu, X, c))

    candidates = [mu * GammaMonomial.from_projmat(unit, A) for A in group.elements]
    zeta_primes = []
    for m in candidates:
        prod = m.conj(c) * m
        (c0, _), (c2, _) = prod.entries[0], prod.entries[2]
        zeta_primes.append(c2 / c0)
    b.check("zeta_prime_never_one", all(z != 1 for z in zeta_primes))
    quotient = GalQuotient.complex_conjugation(ctx)
    b.outcome = cocycle_search(X, quotient, {c: candidates})
    b.check("obstructed", b.outcome.kind == "Obstructed")
    b.data["curve"] = h.to_json()
    return X, b



