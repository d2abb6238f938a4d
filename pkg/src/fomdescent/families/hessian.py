"""Sextics with automorphism group G18 or G36 in the Hessian tower.

Both families are written in the invariants

    phi = X0 X1 X2,  psi = X0^3 + X1^3 + X2^3,  chi = sum of X_i^3 X_j^3,

which are fixed by G18 = <S, T, R> up to the scalar cube roots of unity that
act trivially on degree-6 forms.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Tuple

from ..descent import (
    GalQuotient,
    NormEqProblem,
    cocycle_search,
    find_obstruction_modulus,
    mod_certificate_verify,
    norm_eq_search,
)
from ..errors import ValidationError
from ..exactnum import GaloisAuto, cyc_ctx, embed_quadratic, galois_apply, quadratic_conductor
from ..forms import FormMapTester, HomForm, binary_squarefree, resultant, stabilizer_form
from ..planecurve import PlaneCurve, conj_plane, isom_candidates_check, smooth_by_symmetry
from ..projlinear import all_subgroups, catalog, hessian_matrices, point
from ..results import Obstructed
from .bundle import Bundle


def hessian_invariants(ctx):
    X0, X1, X2 = HomForm.variables(ctx, 3)
    phi = X0 * X1 * X2
    psi = X0**3 + X1**3 + X2**3
    chi = (X0 * X1) ** 3 + (X1 * X2) ** 3 + (X2 * X0) ** 3
    return phi, psi, chi


# -- G18 ---------------------------------------------------------------------


def _rational_square(x):
    x = Fraction(x)
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def square_in_eisenstein(x):
    """True iff the rational x is a square in Q(omega) = Q(sqrt(-3))."""
    return _rational_square(x) or _rational_square(-3 * Fraction(x))


@dataclass(frozen=True)
class G18Params:
    alpha: Tuple[Fraction, Fraction, Fraction]
    u: Fraction
    v: Fraction

    def __post_init__(self):
        alpha = tuple(Fraction(a) for a in self.alpha)
        if len(alpha) != 3 or any(a == 0 for a in alpha):
            raise ValidationError("alpha must be three nonzero rationals")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "v", Fraction(self.v))
        for name, x in (("u", self.u), ("v", self.v), ("uv", self.u * self.v)):
            if x == 0 or square_in_eisenstein(x):
                raise ValidationError(f"{name} = {x} is a square in Q(omega); K(sqrt u, sqrt v) is not biquadratic")

    @property
    def field_order(self):
        N = lcm(3, quadratic_conductor(self.u), quadratic_conductor(self.v))
        return N if N % 4 != 2 else N // 2

    @property
    def ctx(self):
        return cyc_ctx(self.field_order)


def g18_coefficients(p, ctx, su=None, sv=None):
    """(c_phi2, c_phipsi, c_psi2) for the chosen square roots."""
    w = ctx.root_of_unity(3)
    su = embed_quadratic(ctx, p.u) if su is None else su
    sv = embed_quadratic(ctx, p.v) if sv is None else sv
    suv = su * sv
    a1, a2, a3 = p.alpha
    c_phi2 = a1 * w * su + a2 * sv + a3 * w * w * suv
    c_phipsi = a1 * w * w * su + a2 * sv + a3 * w * suv
    c_psi2 = Fraction(-1, 12) + a1 * su + a2 * sv + a3 * suv
    return c_phi2, c_phipsi, c_psi2


def g18_form(p, ctx=None):
    ctx = ctx or p.ctx
    phi, psi, chi = hessian_invariants(ctx)
    c_phi2, c_phipsi, c_psi2 = g18_coefficients(p, ctx)
    return psi * psi * c_psi2 - phi * psi * (6 * c_phipsi) - phi * phi * (18 * c_phi2) + chi


def g18_short_orbit_reps(ctx):
    w = ctx.root_of_unity(3)
    return [point([1, 0, 0], ctx), point([1, 1, 1], ctx), point([1, 1, w], ctx),
            point([1, 1, w * w], ctx)]


G18_LINE = ((1, 0), (0, 1), (0, 1))  # [s : t : t], home of the size-9 orbits


def _sign_pattern(sigma, w, su, sv):
    return (galois_apply(sigma, w) == w, galois_apply(sigma, su) == su, galois_apply(sigma, sv) == sv)


def galois_representatives(ctx, w, su, sv):
    """One automorphism per action on (omega, sqrt u, sqrt v), smallest exponent first."""
    reps = {}
    for k in range(1, ctx.N):
        if gcd(k, ctx.N) != 1:
            continue
        s = GaloisAuto(ctx, k)
        reps.setdefault(_sign_pattern(s, w, su, sv), s)
        if len(reps) == 8:
            break
    return reps


def surjection_lattice_check(ctx=None):
    """Every subgroup H of G72 with H G18 = G72 also has H G9 = G72."""
    ctx = ctx or cyc_ctx(3)
    g72, g18, g9 = (catalog(n, ctx) for n in ("G72", "G18", "G9"))

    sub18, sub9 = g18.element_set, g9.element_set

    def product_size(H, G):
        return len(H) * len(G) // len(H & G)

    subs = all_subgroups(g72)
    onto18 = [H for H in subs if product_size(H, sub18) == 72]
    return len(subs), len(onto18), all(product_size(H, sub9) == 72 for H in onto18)


def g18_build(p, bound=50, certificate=None):
    """Sextic with automorphism group G18 not definable over Q(omega)."""
    ctx = p.ctx
    F = g18_form(p, ctx)
    b = Bundle("g18")
    b.data["field_order"] = ctx.N

    line = [[ctx(x) for x in r] for r in G18_LINE]
    restricted = F.restrict(line)
    if not binary_squarefree(restricted):
        raise ValidationError("F(X0, 1, 1) is not squarefree")
    b.check("squarefree_on_line", True)
    f1 = restricted.dehomogenize()
    b.check("resultant_nonzero", not resultant(f1, f1.derivative()).is_zero())

    g18, g72, g216 = (catalog(n, ctx) for n in ("G18", "G72", "G216"))
    cert = smooth_by_symmetry(F, g18, g18_short_orbit_reps(ctx), [G18_LINE])
    b.check("smooth", True)
    b.data["smooth_certificate"] = cert.summary()
    X = PlaneCurve(F, cert)

    stab = stabilizer_form(F, g216)
    b.data["stabilizer_order"] = stab.order
    b.check("stabilizer_is_G18", stab == g18)

    w = ctx.root_of_unity(3)
    su, sv = embed_quadratic(ctx, p.u), embed_quadratic(ctx, p.v)
    orbit_rows = []
    consistent = True
    for (fix_w, fix_u, fix_v), sigma in sorted(galois_representatives(ctx, w, su, sv).items(), reverse=True):
        tester = FormMapTester(F, F.conj(sigma))
        hits = [A for A in g72.elements if tester.check(A)]
        consistent &= bool(hits) == fix_w
        orbit_rows.append({"exponent": sigma.k, "fixes_omega": fix_w, "fixes_sqrt_u": fix_u,
                           "fixes_sqrt_v": fix_v, "g72_matches": len(hits)})
    b.data["galois_orbit"] = orbit_rows
    b.check("conjugates_in_G72_orbit_iff_omega_fixed", consistent)

    certs = []
    for u in (p.u, -p.u):
        prob = NormEqProblem(u, p.v, bound=bound)
        found = norm_eq_search(prob)
        b.check(f"normeq_none_within_bound(u={u})", found.kind == "NoneWithinBound")
        c = certificate or find_obstruction_modulus(prob)
        b.check(f"normeq_local_certificate(u={u})", c is not None and mod_certificate_verify(prob, c))
        certs.append(list(c) if c else None)
    b.data["normeq_certificates"] = certs

    n_subs, n_onto, lattice_ok = surjection_lattice_check()
    b.data["g72_subgroups"] = n_subs
    b.check("surjection_onto_G72/G18_implies_onto_G72/G9", lattice_ok)
    if b.ok:
        b.outcome = Obstructed(
            tried=n_onto,
            detail="every subgroup of G72 covering G72/G18 covers the quaternion quotient G72/G9, "
                   "and K(sqrt u, sqrt v) has no quaternion embedding",
        )
    b.data["curve"] = F.to_json()
    return X, b


# -- G36 ---------------------------------------------------------------------


@dataclass(frozen=True)
class G36Params:
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.beta == 0:
            raise ValidationError("beta must be nonzero")

    @property
    def ctx(self):
        return cyc_ctx(12)


def g36_form(a, ctx):
    phi, psi, chi = hessian_invariants(ctx)
    return chi - phi * phi * (18 * a) + psi * psi * (a - Fraction(1, 12)) - psi * phi * (6 * a)


def g36_short_orbit_reps(ctx):
    r3 = embed_quadratic(ctx, 3)
    return [point([1, 0, 0], ctx), point([0, 1, -1], ctx), point([1 - r3, 1, 1], ctx),
            point([1 + r3, 1, 1], ctx)]


def g36_build(p):
    """Sextic with automorphism group G36, not definable over R."""
    ctx = p.ctx
    a = p.beta * ctx.root_of_unity(4)
    F, F_neg = g36_form(a, ctx), g36_form(-a, ctx)
    b = Bundle("g36")
    b.data["field_order"] = ctx.N

    g36, g72 = catalog("G36", ctx), catalog("G72", ctx)
    cert = smooth_by_symmetry(F, g36, g36_short_orbit_reps(ctx))
    b.check("smooth", True)
    b.data["smooth_certificate"] = cert.summary()
    X = PlaneCurve(F, cert)

    stab = stabilizer_form(F, g72)
    b.data["stabilizer_order"] = stab.order
    b.check("stabilizer_is_G36", stab == g36)

    h = hessian_matrices(ctx)
    U, V = h["U"], h["V"]
    UVUi = U * V * U.inverse()
    b.check("UVU^-1_maps_f_a_to_f_-a", FormMapTester(F, F_neg).check(UVUi))
    b.check("V_fixes_f_a", FormMapTester(F).check(V))
    c = ctx.conjugation
    b.check("conjugate_is_f_-a", F.conj(c) == F_neg)

    coset = sorted({UVUi * A for A in g36.elements})
    b.check("coset_size_36", len(coset) == 36)
    b.check("no_coset_element_with_McM_identity", all(not (M.conj(c) * M).is_identity() for M in coset))

    Xc = conj_plane(c, X)
    isos = isom_candidates_check(X, Xc, g72.elements)
    b.data["isomorphisms_to_conjugate"] = len(isos)
    b.check("isomorphisms_are_the_coset", sorted(isos) == coset)
    b.check("G36_gives_no_isomorphism", isom_candidates_check(X, Xc, g36.elements) == [])

    # isom_candidates_check finds M with ([F])M = [F^c]; the point map X -> cX is M^-1
    quotient = GalQuotient.complex_conjugation(ctx)
    b.outcome = cocycle_search(X, quotient, {c: [M.inverse() for M in coset]})
    b.check("obstructed", b.outcome.kind == "Obstructed")
    b.data["curve"] = F.to_json()
    return X, b
