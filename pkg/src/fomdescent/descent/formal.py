"""Monomial matrices with entries c * gamma^k for a formal unit gamma.

gamma is never materialized.  It is governed by two rewriting rules:
gamma^P = w (w in the base field) and c(gamma) = gamma^-1 for complex
conjugation c.  The second rule is only consistent when w^c * w = 1,
which :class:`FormalUnit` checks on construction.
"""

from dataclasses import dataclass

from ..errors import ValidationError
from ..exactnum import galois_apply
from ..forms import HomForm
from .cocycle import cocycle_pair, identity_witness, validate_witness


@dataclass(frozen=True)
class FormalUnit:
    w: object
    period: int

    def __post_init__(self):
        if self.period < 1:
            raise ValidationError("gamma needs a positive period")
        if self.w.conj() * self.w != 1:
            raise ValidationError("gamma^c = gamma^-1 requires w^c * w = 1")

    def reduce(self, c, k):
        """Normal form (c', k') of c * gamma^k with 0 <= k' < period."""
        q, k = divmod(k, self.period)
        if q:
            c = c * self.w**q
        return c, k


class GammaMonomial:
    """n x n monomial matrix: row i has c_i * gamma^(k_i) in column perm[i]."""

    __slots__ = ("unit", "perm", "entries")

    def __init__(self, unit, perm, entries):
        self.unit = unit
        self.perm = tuple(perm)
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValidationError("perm must be a permutation")
        red = []
        for c, k in entries:
            if c.is_zero():
                raise ValidationError("monomial entries must be nonzero")
            red.append(unit.reduce(c, k))
        self.entries = tuple(red)

    @classmethod
    def from_projmat(cls, unit, m):
        perm, entries = [], []
        for row in m.rows:
            nz = [j for j, x in enumerate(row) if not x.is_zero()]
            if len(nz) != 1:
                raise ValidationError("matrix is not monomial")
            perm.append(nz[0])
            entries.append((row[nz[0]], 0))
        return cls(unit, perm, entries)

    @property
    def n(self):
        return len(self.perm)

    def __mul__(self, other):
        # (AB)[i][perm_B[perm_A[i]]] = A[i][perm_A[i]] * B[perm_A[i]][...]
        perm, entries = [], []
        for i in range(self.n):
            j = self.perm[i]
            c1, k1 = self.entries[i]
            c2, k2 = other.entries[j]
            perm.append(other.perm[j])
            entries.append((c1 * c2, k1 + k2))
        return GammaMonomial(self.unit, perm, entries)

    def conj(self, sigma):
        if sigma.is_identity:
            return self
        if not sigma.is_conjugation:
            raise ValidationError("gamma's Galois image is only defined for complex conjugation")
        return GammaMonomial(self.unit, self.perm, [(galois_apply(sigma, c), -k) for c, k in self.entries])

    def projectively_equal(self, other):
        if self.perm != other.perm:
            return False
        ratios = set()
        for (c1, k1), (c2, k2) in zip(self.entries, other.entries):
            ratios.add(self.unit.reduce(c1 / c2, k1 - k2))
        if len(ratios) == 1:
            return True
        if len({k for _, k in ratios}) == 1:
            return False
        raise ValidationError("equality involves distinct powers of gamma and is not decidable formally")

    def __eq__(self, other):
        return isinstance(other, GammaMonomial) and self.projectively_equal(other)

    __hash__ = None

    def is_identity(self):
        return self.projectively_equal(identity_monomial(self.unit, self.n, self.entries[0][0].ctx))

    def __repr__(self):
        cells = [f"r{i}->c{j}: ({c})*g^{k}" for i, (j, (c, k)) in enumerate(zip(self.perm, self.entries))]
        return "GammaMonomial(" + "; ".join(cells) + ")"


def identity_monomial(unit, n, ctx):
    return GammaMonomial(unit, range(n), [(ctx.one, 0)] * n)


def act_formal(F, m):
    """([F])M for a monomial M: returns {exponent: (coefficient, gamma power)}."""
    if F.nvars != m.n:
        raise ValidationError("dimension mismatch")
    out = {}
    for e, c in F.terms.items():
        new_e = [0] * F.nvars
        coef, k = c, 0
        for i, ei in enumerate(e):
            if ei:
                ci, ki = m.entries[i]
                coef = coef * ci**ei
                k += ki * ei
                new_e[m.perm[i]] += ei
        coef, k = m.unit.reduce(coef, k)
        key = tuple(new_e)
        if key in out:
            c0, k0 = out[key]
            if k0 != k:
                raise ValidationError("terms with different gamma powers collide")
            coef = c0 + coef
        out[key] = (coef, k)
    return {e: v for e, v in out.items() if not v[0].is_zero()}


def formal_proportional(terms, G, unit):
    """True iff the gamma-valued term map equals lambda * G for one lambda."""
    if not isinstance(G, HomForm):
        raise ValidationError("expected a form")
    if set(terms) != set(G.terms):
        return False
    ratios = {unit.reduce(c / G.terms[e], k) for e, (c, k) in terms.items()}
    if len(ratios) == 1:
        return True
    if len({k for _, k in ratios}) == 1:
        return False
    raise ValidationError("proportionality involves distinct powers of gamma")


@cocycle_pair.register
def _(f_sigma: GammaMonomial, sigma, f_tau, f_st):
    return (f_tau.conj(sigma) * f_sigma).projectively_equal(f_st)


@identity_witness.register
def _(w: GammaMonomial, obj=None):
    return identity_monomial(w.unit, w.n, w.entries[0][0].ctx)


@validate_witness.register
def _(w: GammaMonomial, obj, sigma):
    F = obj if isinstance(obj, HomForm) else obj.F
    return formal_proportional(act_formal(F.conj(sigma), w), F, w.unit)
