"""Descent questions for hyperelliptic curves."""

from ..descent import CocycleFamily, GalQuotient, cocycle_search, cocycle_verify
from ..exactnum import QuadExtElt, conjugation_image
from ..results import CYCLIC_UNRESOLVED, GUARANTEED_DEFINABLE, NotIsomorphicToConjugate
from .curve import conj_curve
from .witness import isomorphisms, reduced_aut


def weil_verify(fam: CocycleFamily):
    """Every witness is an isomorphism X -> sigma(X) and the cocycle identity holds."""
    return cocycle_verify(fam, validate=True)


def _signed_candidates(w, c):
    """w with both square roots e of lam, conj images resolved when possible."""
    lift = w.M.conj(c).lift_mul(w.M)
    k = None
    if lift[0][1].is_zero() and lift[1][0].is_zero() and lift[0][0] == lift[1][1]:
        t = lift[0][0] ** (w.genus + 1)
        if t * t == w.lam.conj() * w.lam:
            k = conjugation_image(w.lam, root=t)
    zero, one = w.lam.ctx.zero, w.lam.ctx.one
    return [w.with_e(QuadExtElt(w.lam, zero, sign * one, k)) for sign in (1, -1)]


def weil_search_C2(X):
    """Search all isomorphisms X -> c(X) for one with c(mu) o mu = id."""
    quotient = GalQuotient.complex_conjugation(X.ctx)
    if len(quotient) == 1:
        return cocycle_search(X, quotient, {})
    c = X.ctx.conjugation
    isos = isomorphisms(X, conj_curve(c, X))
    if not isos:
        return NotIsomorphicToConjugate(sigma=c)
    candidates = [v for w in isos for v in _signed_candidates(w, c)]
    return cocycle_search(X, quotient, {c: candidates})


def mainhyp_classify(X, aut=None):
    """GuaranteedDefinable unless the reduced automorphism group is cyclic.

    A cyclic group whose order is divisible by the characteristic is also
    guaranteed.
    """
    aut = aut or reduced_aut(X)
    if not aut.is_cyclic:
        return GUARANTEED_DEFINABLE
    p = getattr(X.ctx, "p", 0)
    if p and aut.order % p == 0:
        return GUARANTEED_DEFINABLE
    return CYCLIC_UNRESOLVED



