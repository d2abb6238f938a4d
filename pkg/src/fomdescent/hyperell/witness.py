"""Isomorphisms of hyperelliptic models and reduced automorphism groups.

An isomorphism X -> Y is written (x, y) -> (M x, e y / (c x + d)^(g+1))
with M = [[a, b], [c, d]] the canonical lift of a Moebius map.  In terms of
the degree-(2g+2) forms this is act(F_Y, M) = lam * F_X with e^2 = lam.
Composition X -> Y -> Z multiplies the lifts, so the canonical rescaling s
of the product enters as lam / s^(2g+2) and e / s^(g+1).

``e`` may be left unresolved; it is then the formal square root of lam,
read as the principal branch under the fixed complex embedding whenever a
numerical sign comparison is needed.
"""

import cmath
from itertools import permutations

from ..descent.cocycle import cocycle_pair, identity_witness, validate_witness
from ..errors import PrecisionError, ValidationError
from ..exactnum import QuadExtElt, galois_apply, quadext_conj
from ..forms import act
from ..projlinear import MatGroup, ProjMat, identity
from .curve import HyperCurve, conj_curve


def _first_nonzero(rows):
    return next(x for row in rows for x in row if not x.is_zero())


class IsomWitness:
    __slots__ = ("M", "lam", "e", "source", "target")

    def __init__(self, M, lam, source, target, e=None):
        if M.n != 2:
            raise ValidationError("hyperelliptic witnesses use 2x2 Moebius matrices")
        if source.genus != target.genus:
            raise ValidationError("curves of different genus are never isomorphic")
        self.M = M
        self.lam = M.ctx(lam)
        self.e = e
        self.source = source
        self.target = target

    @classmethod
    def from_matrix(cls, M, source, target, e=None):
        """Witness with lam read off from act(F_target, M) = lam * F_source."""
        G = act(target.F, M)
        e0, c0 = source.F.leading
        lam = G.coeff(e0) / c0
        w = cls(M, lam, source, target, e)
        if not w.is_valid():
            raise ValidationError("M does not map the branch locus of the source onto the target")
        return w

    @property
    def genus(self):
        return self.source.genus

    @property
    def e_value(self):
        return self.e if self.e is not None else QuadExtElt.sqrt(self.lam)

    def is_valid(self):
        if act(self.target.F, self.M) != self.source.F.scale(self.lam):
            return False
        if self.e is not None and self.e * self.e != self.lam:
            return False
        return True

    def with_e(self, e):
        return IsomWitness(self.M, self.lam, self.source, self.target, e)

    def compose(self, other):
        """other o self, for self: X -> Y and other: Y -> Z."""
        lift = other.M.lift_mul(self.M)
        s = _first_nonzero(lift)
        g1 = self.genus + 1
        e = None
        if self.e is not None and other.e is not None:
            e = other.e * self.e * (s**g1).inverse()
        return IsomWitness(ProjMat._canonical(self.M.ctx, lift), other.lam * self.lam / s ** (2 * g1),
                           self.source, other.target, e)

    def galois(self, sigma):
        """sigma(f): sigma(X) -> sigma(Y)."""
        e = None if self.e is None else _galois_e(self.e, sigma)
        return IsomWitness(self.M.conj(sigma), galois_apply(sigma, self.lam),
                           conj_curve(sigma, self.source), conj_curve(sigma, self.target), e)

    def __eq__(self, other):
        return isinstance(other, IsomWitness) and self.M == other.M and self.lam == other.lam and self.e == other.e

    __hash__ = None

    def __repr__(self):
        e = "" if self.e is None else f", e={self.e}"
        return f"IsomWitness(M={self.M}, lam={self.lam}{e})"


def _galois_e(e, sigma):
    if sigma.is_identity:
        return e
    return quadext_conj(e, sigma)


def _numeric(e):
    root = cmath.sqrt(complex(e.w))
    return complex(e.a) + complex(e.b) * root


def _same_sign(lhs_parts, rhs, sigma):
    """Decide sigma(e_tau) * e_sigma == rhs exactly, else numerically."""
    e_tau, e_sigma = lhs_parts
    try:
        return _galois_e(e_tau, sigma) * e_sigma == rhs
    except ValidationError:
        if not (sigma.is_identity or sigma.is_conjugation):
            raise
    z = _numeric(e_tau)
    if sigma.is_conjugation:
        z = z.conjugate()
    ratio = z * _numeric(e_sigma) / _numeric(rhs)
    if abs(ratio - 1) < 0.25:
        return True
    if abs(ratio + 1) < 0.25:
        return False
    raise PrecisionError("could not separate the two signs of e numerically")


@cocycle_pair.register
def _(f_sigma: IsomWitness, sigma, f_tau, f_st):
    lift = f_tau.M.conj(sigma).lift_mul(f_sigma.M)
    if ProjMat._canonical(f_sigma.M.ctx, lift) != f_st.M:
        return False
    s = _first_nonzero(lift)
    g1 = f_sigma.genus + 1
    if galois_apply(sigma, f_tau.lam) * f_sigma.lam != f_st.lam * s ** (2 * g1):
        return False
    return _same_sign((f_tau.e_value, f_sigma.e_value), f_st.e_value * s**g1, sigma)


@identity_witness.register
def _(w: IsomWitness, obj=None):
    X = obj if isinstance(obj, HyperCurve) else w.source
    one = X.ctx.one
    return IsomWitness(identity(2, X.ctx), one, X, X, QuadExtElt.base(one))


@validate_witness.register
def _(w: IsomWitness, obj, sigma):
    target = conj_curve(sigma, obj)
    if act(target.F, w.M) != obj.F.scale(w.lam):
        return False
    return w.e is None or w.e * w.e == w.lam


# -- enumeration -------------------------------------------------------------


def _frame(points, ctx):
    """Matrix sending [1:0], [0:1], [1:1] to the three given points."""
    v1, v2, v3 = (p.coords for p in points)
    D = v1[0] * v2[1] - v2[0] * v1[1]
    c1 = (v3[0] * v2[1] - v2[0] * v3[1]) / D
    c2 = (v1[0] * v3[1] - v3[0] * v1[1]) / D
    return ProjMat._canonical(ctx, ((c1 * v1[0], c2 * v2[0]), (c1 * v1[1], c2 * v2[1])))


def moebius_from_triples(src, dst):
    """The unique Moebius map sending src[i] to dst[i] (i = 0, 1, 2)."""
    ctx = src[0].ctx
    return _frame(dst, ctx) * _frame(src, ctx).inverse()


def isomorphisms(X, Y):
    """All witnesses X -> Y, sorted by matrix; e is left unresolved."""
    if X.ctx is not Y.ctx:
        raise ValidationError("curves over different field contexts")
    if X.genus != Y.genus:
        return []
    bx, by = X.branch_points(), Y.branch_points()
    if len(bx) != len(by):
        return []
    target = set(by)
    base = bx[:3]
    found = {}
    for triple in permutations(by, 3):
        M = moebius_from_triples(base, triple)
        if M in found:
            continue
        if all(M.apply(p) in target for p in bx[3:]):
            found[M] = IsomWitness.from_matrix(M, X, Y)
    return [found[M] for M in sorted(found, key=ProjMat.key)]


# -- reduced automorphism group ---------------------------------------------


class RedAutGroup:
    """Aut(X) modulo the hyperelliptic involution, as Moebius maps."""

    def __init__(self, group, label):
        self.group = group
        self.label = label

    @property
    def order(self):
        return self.group.order

    @property
    def fingerprint(self):
        return self.group.fingerprint()

    @property
    def is_cyclic(self):
        return self.label in ("trivial", "cyclic")

    def __repr__(self):
        return f"RedAutGroup({self.label}, order {self.order})"


def structure_label(group):
    """Name of a finite subgroup of PGL_2 from its element orders."""
    n = group.order
    orders = group.element_orders()
    if n == 1:
        return "trivial"
    if n in orders:
        return "cyclic"
    if n == 4:
        return "klein_four"
    half = n // 2
    involutions = orders.get(2, 0)
    if n % 2 == 0 and half in orders and involutions == (half if half % 2 else half + 1):
        return "dihedral"
    if n == 12 and dict(orders) == {1: 1, 2: 3, 3: 8}:
        return "A4"
    if n == 24 and dict(orders) == {1: 1, 2: 9, 3: 8, 4: 6}:
        return "S4"
    if n == 60 and dict(orders) == {1: 1, 2: 15, 3: 20, 5: 24}:
        return "A5"
    return "other"


def reduced_aut(X):
    if len(X.branch_points()) < 3:
        raise ValidationError("fewer than three branch points")
    mats = [w.M for w in isomorphisms(X, X)]
    group = MatGroup(mats, mats)
    if any(a * b not in group for a in mats for b in mats):
        raise ValidationError("automorphisms failed to close; the root list is inconsistent")
    return RedAutGroup(group, structure_label(group))
