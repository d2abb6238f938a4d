"""Plane curves F = 0 of degree > 3."""

from ..errors import ValidationError
from ..forms import HomForm, act, proj_eq


class PlaneCurve:
    __slots__ = ("F", "certificate")

    def __init__(self, F, certificate=None):
        if not isinstance(F, HomForm) or F.nvars != 3:
            raise ValidationError("a plane curve needs a ternary form")
        if F.is_zero():
            raise ValidationError("the zero form defines no curve")
        if F.degree <= 3:
            raise ValidationError(f"degree {F.degree} is not above 3")
        if certificate is not None:
            certificate.replay(F)
        self.F = F
        self.certificate = certificate

    @property
    def ctx(self):
        return self.F.ctx

    @property
    def degree(self):
        return self.F.degree

    @property
    def genus(self):
        d = self.F.degree
        return (d - 1) * (d - 2) // 2

    def __eq__(self, other):
        return isinstance(other, PlaneCurve) and proj_eq(self.F, other.F)

    def __hash__(self):
        return hash(self.F.normalized())

    def __repr__(self):
        return f"PlaneCurve(degree={self.degree})"


def conj_plane(sigma, X):
    return PlaneCurve(X.F.conj(sigma))


def isom_candidates_check(X, Y, candidates):
    """The candidates M with ([F_X])M = [F_Y], in the given order."""
    if X.degree != Y.degree:
        raise ValidationError("curves of different degree")
    return [M for M in candidates if proj_eq(act(X.F, M), Y.F)]
