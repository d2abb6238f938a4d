"""Smoothness certificates built from a symmetry group.

Every singular point of an invariant curve drags its whole orbit along, so
if the Bezout bound S(d) on singular points of a reduced degree-d curve is
smaller than an orbit, that orbit is clean.  The remaining short orbits are
checked one representative at a time, or, for families of short orbits on
a line, by showing the restriction of F to that line is squarefree.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Tuple

from ..errors import NotSmooth, PreconditionError, ValidationError
from ..forms import HomForm, binary_resultant, binary_squarefree, is_invariant, is_squarefree
from ..projlinear import orbit


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def bezout_bound(d):
    """max over factorization types of sum g_i + sum_{i<j} d_i d_j."""
    best = 0
    for parts in _partitions(d):
        genus = sum((k - 1) * (k - 2) // 2 for k in parts)
        meet = sum(parts[i] * parts[j] for i in range(len(parts)) for j in range(i + 1, len(parts)))
        best = max(best, genus + meet)
    return best


@dataclass(frozen=True)
class SmoothCert:
    method: str
    group: object = None
    bezout_bound: int = 0
    restricted_resultant: object = None
    short_orbit_reps: Tuple = ()
    line_checks: Tuple = ()
    checks: Tuple = field(default=())

    def replay(self, F):
        """Re-run the certificate on F; raises NotSmooth on failure."""
        if self.method == "symmetry":
            again = smooth_by_symmetry(F, self.group, [p for p, _ in self.short_orbit_reps],
                                       [rows for rows, _ in self.line_checks])
        elif self.method == "diagonal":
            again = diag_family_smooth(F)
        else:
            raise ValidationError(f"unknown certificate method {self.method!r}")
        if again != self:
            raise NotSmooth("certificate does not replay on this form")
        return True

    def summary(self):
        return {
            "method": self.method,
            "bezout_bound": self.bezout_bound,
            "orbit_sizes": [n for _, n in self.short_orbit_reps],
            "line_checks": len(self.line_checks),
            "checks": list(self.checks),
        }


def _first_nonvanishing(F, grad, p):
    """Index 0..3 of the first of F, F_X0, F_X1, F_X2 not vanishing at p."""
    for idx, g in enumerate((F,) + grad):
        if not g(p).is_zero():
            return idx
    return None


def smooth_by_symmetry(F, group, reps, lines=()):
    """Certificate that a G-invariant sextic-style curve F = 0 is smooth.

    ``reps`` must contain one point from every G-orbit of size at most
    S(deg F) apart from those lying on the given ``lines``; each line is a
    3x2 parametrization matrix.  Completeness of that list is the caller's
    assumption (it comes from an orbit classification).
    """
    if F.nvars != 3:
        raise ValidationError("smooth_by_symmetry needs a ternary form")
    if not is_invariant(F, group):
        raise PreconditionError("F is not invariant under the group")
    S = bezout_bound(F.degree)
    grad = F.gradient()
    ctx = F.ctx
    one, zero = ctx.one, ctx.zero
    # (i) no repeated factor: F_X0 and F_X1 share no zero on X2 = 0
    on_line = [[one, zero], [zero, one], [zero, zero]]
    res = binary_resultant(grad[0].restrict(on_line), grad[1].restrict(on_line))
    if res.is_zero():
        raise NotSmooth("restricted partials share a zero on X2 = 0; a repeated factor is not excluded")
    # (ii) short orbits
    rep_info, checks = [], []
    for p in reps:
        size = len(orbit(group, p))
        if size > S:
            raise ValidationError(f"orbit of {p} has {size} > S = {S} points and needs no check")
        idx = _first_nonvanishing(F, grad, p)
        if idx is None:
            raise NotSmooth(f"F is singular at {p}", point=p)
        rep_info.append((p, size))
        checks.append(idx)
    line_info = []
    for rows in lines:
        rows = tuple(tuple(ctx(x) for x in r) for r in rows)
        restricted = F.restrict([list(r) for r in rows])
        if restricted.is_zero() or not binary_squarefree(restricted):
            raise NotSmooth(f"restriction of F to the line {rows} is not squarefree")
        line_info.append((rows, True))
    return SmoothCert(
        method="symmetry",
        group=group,
        bezout_bound=S,
        restricted_resultant=res,
        short_orbit_reps=tuple(rep_info),
        line_checks=tuple(line_info),
        checks=tuple(checks),
    )


def split_diagonal(h):
    """Write h = c * X2^D - f(X0, X1); returns (c, f) or raises."""
    if h.nvars != 3:
        raise PreconditionError("expected a ternary form")
    D = h.degree
    c = h.coeff((0, 0, D))
    if c.is_zero():
        raise PreconditionError("h has no X2^D term")
    terms = {}
    for (a, b, k), v in h.terms.items():
        if k == D:
            continue
        if k != 0:
            raise PreconditionError(f"term with X2 exponent {k}; expected only 0 or {D}")
        terms[(a, b)] = -v
    return c, HomForm(h.ctx, 2, D, terms)


def diag_family_smooth(h):
    """Smoothness of X2^D = f(X0, X1) in characteristic 0."""
    if getattr(h.ctx, "p", 0):
        raise PreconditionError("the diagonal certificate assumes characteristic 0")
    c, f = split_diagonal(h)
    D = h.degree
    lead = f.coeff((D, 0))
    if lead.is_zero():
        raise NotSmooth("h(X0, 0, X2) has a repeated zero: f vanishes at [1:0]")
    poly = f.dehomogenize()
    if not is_squarefree(poly):
        raise NotSmooth("f(X0, 1) has a repeated root")
    return SmoothCert(method="diagonal", checks=(("line X1=0", "distinct"), ("f(X0,1)", "squarefree"),
                                                ("h_X2=0", "forces X2=0")))
