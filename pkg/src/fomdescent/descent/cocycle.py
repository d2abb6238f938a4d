"""Weil cocycle families: verification and exhaustive search.

A witness for sigma is an isomorphism f_sigma : X -> sigma(X).  The cocycle
condition is sigma(f_tau) o f_sigma = f_(sigma tau) for all sigma, tau.

Witness kinds plug in through three single-dispatch functions:
``cocycle_pair`` (one instance of the identity), ``identity_witness`` and
``validate_witness``.  Matrices are handled here as point maps: M is a
witness X -> Y when ([F_Y])M = [F_X], so composition is the matrix product.
"""

from dataclasses import dataclass
from functools import singledispatch
from typing import Any, Mapping

from ..errors import ValidationError
from ..forms import HomForm, act, proj_eq
from ..projlinear import ProjMat, identity
from ..results import Definable, NotIsomorphicToConjugate, Obstructed
from .galois import GalQuotient


@singledispatch
def cocycle_pair(f_sigma, sigma, f_tau, f_st):
    """True iff sigma(f_tau) o f_sigma = f_st for this witness kind."""
    raise ValidationError(f"no cocycle rule for witnesses of type {type(f_sigma).__name__}")


@singledispatch
def identity_witness(w, obj=None):
    raise ValidationError(f"no identity witness for type {type(w).__name__}")


@singledispatch
def validate_witness(w, obj, sigma):
    """True iff w is an isomorphism obj -> sigma(obj)."""
    raise ValidationError(f"no validity rule for witnesses of type {type(w).__name__}")


@cocycle_pair.register
def _(f_sigma: ProjMat, sigma, f_tau, f_st):
    return f_tau.conj(sigma) * f_sigma == f_st


@identity_witness.register
def _(w: ProjMat, obj=None):
    return identity(w.n, w.ctx)


def _form_of(obj):
    if isinstance(obj, HomForm):
        return obj
    form = getattr(obj, "F", None)
    if isinstance(form, HomForm):
        return form
    raise ValidationError("matrix witnesses need a plane curve or a form as the object")


@validate_witness.register
def _(w: ProjMat, obj, sigma):
    F = _form_of(obj)
    return proj_eq(act(F.conj(sigma), w), F)


@dataclass(frozen=True)
class CocycleFamily:
    quotient: GalQuotient
    witnesses: Mapping[Any, Any]
    object: Any = None

    def __post_init__(self):
        missing = [s for s in self.quotient if s not in self.witnesses]
        if missing:
            raise ValidationError(f"no witness given for {missing}")

    def __getitem__(self, sigma):
        return self.witnesses[sigma]


def cocycle_verify(fam, validate=True):
    """All |Gamma|^2 instances of the cocycle identity hold."""
    q = fam.quotient
    if validate and fam.object is not None:
        for s in q:
            if not validate_witness(fam[s], fam.object, s):
                raise ValidationError(f"witness for {s} is not an isomorphism X -> sigma(X)")
    for s in q:
        for t in q:
            if not cocycle_pair(fam[s], s, fam[t], fam[q.mul(s, t)]):
                return False
    return True


def cocycle_search(obj, quotient, candidate_sets):
    """Backtracking search for a cocycle family.

    ``candidate_sets`` maps every non-identity sigma to a complete finite
    list of isomorphisms obj -> sigma(obj); completeness is the caller's
    assumption.  The identity always receives the identity witness, which the
    cocycle condition forces.  ``tried`` counts candidate placements.
    """
    one = quotient.identity
    order = [s for s in quotient if s != one]
    for s in order:
        if not candidate_sets.get(s):
            return NotIsomorphicToConjugate(sigma=s)
    if not order:
        return Definable(witness=None, tried=0)
    any_witness = candidate_sets[order[0]][0]
    assignment = {one: identity_witness(any_witness, obj)}
    tried = 0

    def consistent(new):
        done = set(assignment)
        for s in done:
            for t in done:
                st = quotient.mul(s, t)
                if new not in (s, t, st) or st not in done:
                    continue
                if s == one or t == one:
                    continue
                if not cocycle_pair(assignment[s], s, assignment[t], assignment[st]):
                    return False
        return True

    def extend(i):
        nonlocal tried
        if i == len(order):
            return True
        s = order[i]
        for w in candidate_sets[s]:
            tried += 1
            assignment[s] = w
            if consistent(s) and extend(i + 1):
                return True
            del assignment[s]
        return False

    if extend(0):
        fam = CocycleFamily(quotient, dict(assignment), obj)
        return Definable(witness=fam, tried=tried)
    return Obstructed(tried=tried, detail=f"no cocycle among {tried} candidate placements")
