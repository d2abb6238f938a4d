"""Invariant binary forms, quotient invariants and induced Moebius maps."""

from ..errors import NotInNormalizerError, ValidationError
from ..exactnum import FqCtx, embed_quadratic
from ..projlinear import ProjPoint, orbit, pmat_make, subgroup
from .homform import HomForm, InvarianceTester, linear_form
from .poly import UPoly, determinant, nullspace, poly_gcd

GRUNDFORM_KEYS = ("C_n", "D_2n", "A4", "S4", "A5", "G_beta_A", "PSL2_Fq", "PGL2_Fq")


def _binary(ctx, terms, degree):
    return HomForm(ctx, 2, degree, terms)


def grundform(key, ctx, n=None, beta=None, A=None, variant="corrected"):
    """The listed minimal forms of a finite subgroup of PGL_2, as a tuple.

    For ``A5`` the third (degree 30) form is returned with the exponent pair
    (20, 10), (10, 20) unless ``variant="printed"``, which reproduces the
    literal transcription with (20, 10) repeated; only the corrected form is
    invariant.
    """
    if key not in GRUNDFORM_KEYS:
        raise ValidationError(f"unknown Grundform key {key!r}; expected one of {', '.join(GRUNDFORM_KEYS)}")
    X0, X1 = HomForm.variables(ctx, 2)
    if key == "C_n":
        return (X0, X1)
    if key == "D_2n":
        if not isinstance(n, int) or n < 2:
            raise ValidationError("D_2n Grundformen need n > 1")
        return (X0 * X1, X0**n - X1**n, X0**n + X1**n)
    if key == "A4":
        s = embed_quadratic(ctx, -3) * 2  # 2 i sqrt(3)
        return (
            X0 * X1 * (X0**4 - X1**4),
            _binary(ctx, {(4, 0): 1, (2, 2): s, (0, 4): 1}, 4),
            _binary(ctx, {(4, 0): 1, (2, 2): -s, (0, 4): 1}, 4),
        )
    if key == "S4":
        return (
            _binary(ctx, {(12, 0): 1, (8, 4): -33, (4, 8): -33, (0, 12): 1}, 12),
            _binary(ctx, {(8, 0): 1, (4, 4): 14, (0, 8): 1}, 8),
            X0 * X1 * (X0**4 - X1**4),
        )
    if key == "A5":
        third = {(30, 0): 1, (0, 30): 1, (25, 5): 522, (5, 25): -522}
        if variant == "printed":
            third[(20, 10)] = -10005 * 2
        elif variant == "corrected":
            third[(20, 10)] = -10005
            third[(10, 20)] = -10005
        else:
            raise ValidationError("variant must be 'corrected' or 'printed'")
        return (
            _binary(ctx, {(11, 1): 1, (6, 6): 11, (1, 11): -1}, 12),
            _binary(ctx, {(20, 0): -1, (0, 20): -1, (15, 5): 228, (5, 15): -228, (10, 10): -494}, 20),
            _binary(ctx, third, 30),
        )
    if key == "G_beta_A":
        if beta is None or A is None:
            raise ValidationError("G_beta_A Grundformen need beta and A")
        out = [X1]
        if ctx(beta) != ctx.one:
            prod = HomForm.constant(ctx, 2)
            for a in A:
                prod = prod * linear_form([1, -ctx(a)], ctx)
            out.append(prod)
        return tuple(out)
    if not isinstance(ctx, FqCtx):
        raise ValidationError(f"{key} Grundformen live over a finite field")
    q = ctx.q
    w = X0**q - X0 * X1 ** (q - 1)
    return (w ** (q - 1) + X1 ** (q * (q - 1)), w * X1)


def orbit_form(group, p):
    """Product of (b X0 - a X1) over the orbit points [a:b]; asserted invariant."""
    if group.n != 2:
        raise ValidationError("orbit forms need a subgroup of PGL_2")
    if not isinstance(p, ProjPoint):
        raise ValidationError("orbit_form needs a point of P^1")
    ctx = group.ctx
    f = HomForm.constant(ctx, 2)
    for a, b in (q.coords for q in orbit(group, p)):
        f = f * linear_form([b, -a], ctx)
    tester = InvarianceTester(f)
    if not all(tester.fixes(g) for g in group.generators):
        raise AssertionError("orbit form is not invariant under the group")
    return f


def _valuation_x1(f):
    return min(e[1] for e in f.terms)


def binary_gcd(f, g):
    """gcd of binary forms, normalized with leading coefficient 1."""
    if f.is_zero():
        return g.normalized()
    if g.is_zero():
        return f.normalized()
    k = min(_valuation_x1(f), _valuation_x1(g))
    h = poly_gcd(f.dehomogenize(), g.dehomogenize())
    form = HomForm.from_univariate(h)
    X1 = HomForm.variables(f.ctx, 2)[1]
    return (form * X1**k).normalized()


def binary_squarefree(f):
    """True iff gcd(f, df/dX0, df/dX1) is constant."""
    if f.nvars != 2 or f.is_zero():
        raise ValidationError("binary_squarefree needs a nonzero binary form")
    g = f
    for part in f.gradient():
        g = binary_gcd(g, part)
    return g.degree == 0


def stabilizer_form(f, group):
    """Subgroup of ``group`` fixing the projective class of f."""
    tester = InvarianceTester(f)
    return subgroup([m for m in group.elements if tester.fixes(m)])


def is_invariant(f, group_or_gens):
    gens = getattr(group_or_gens, "generators", group_or_gens)
    tester = InvarianceTester(f)
    return all(tester.fixes(m) for m in gens)


# -- rational functions ------------------------------------------------------


class RatFunc:
    """num/den in one variable, reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        ctx = num.ctx
        if den is None:
            den = UPoly(ctx, [1])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        inv = den.lc.inverse()
        self.num = num * inv
        self.den = den * inv

    @property
    def ctx(self):
        return self.num.ctx

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num.c} / {self.den.c})"

    @property
    def degree(self):
        return max(self.num.degree, self.den.degree)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def compose_mobius(self, m):
        """t((a x + b)/(c x + d)) for M = [[a, b], [c, d]]."""
        k = self.degree
        lin = [linear_form(row, self.ctx) for row in m.rows]
        num = HomForm.from_univariate(self.num, k).substitute(lin).dehomogenize()
        den = HomForm.from_univariate(self.den, k).substitute(lin).dehomogenize()
        return RatFunc(num, den)

    def mobius_image(self, m):
        """phi o t for phi = [[p, q], [r, s]]: (p t + q) / (r t + s)."""
        (p, q), (r, s) = m.rows
        return RatFunc(self.num * p + self.den * q, self.num * r + self.den * s)


def induced_map(t, m):
    """The Moebius phi with t o M = phi o t, solved linearly and verified exactly."""
    if m.n != 2:
        raise ValidationError("induced_map needs a Moebius transformation")
    a = t.compose_mobius(m)
    N, D, A, B = t.num, t.den, a.num, a.den
    cols = [B * N, B * D, -(A * N), -(A * D)]
    length = max(len(c.c) for c in cols)
    rows = [[c.coeff(j) for c in cols] for j in range(length)]
    basis = nullspace(rows, 4, t.ctx)
    if len(basis) != 1:
        raise NotInNormalizerError(
            "t o M is not a Moebius image of t" if not basis else "t is constant; the induced map is not unique"
        )
    p, q, r, s = basis[0]
    if (p * s - q * r).is_zero():
        raise NotInNormalizerError("the only solution is degenerate")
    phi = pmat_make([[p, q], [r, s]], t.ctx)
    if t.mobius_image(phi) != a:
        raise NotInNormalizerError("solution failed exact verification")
    return phi


def dihedral_invariant(n, ctx):
    """t = x^n + x^-n."""
    num = UPoly(ctx, [1] + [0] * (2 * n - 1) + [1])
    den = UPoly(ctx, [0] * n + [1])
    return RatFunc(num, den)


def tetrahedral_invariant(ctx):
    """t = (x^12 - 33x^8 - 33x^4 + 1)/(-x^10 + 2x^6 - x^2)."""
    num = UPoly(ctx, [1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1])
    den = UPoly(ctx, [0, 0, -1, 0, 0, 0, 2, 0, 0, 0, -1])
    return RatFunc(num, den)


def psl2_invariant(ctx):
    """((x^q - x)^(q-1) + 1)^((q+1)/2) / (x^q - x)^((q^2-q)/2) over F_q."""
    if not isinstance(ctx, FqCtx):
        raise ValidationError("the PSL_2 quotient function lives over a finite field")
    q = ctx.q
    x = UPoly.x(ctx)
    w = x**q - x
    return RatFunc((w ** (q - 1) + 1) ** ((q + 1) // 2), w ** ((q * q - q) // 2))


def binary_resultant(f, g):
    """Homogeneous resultant of two binary forms at their formal degrees.

    Vanishes iff f and g share a zero in P^1 (including [1:0]).
    """
    if f.nvars != 2 or g.nvars != 2:
        raise ValidationError("binary_resultant needs binary forms")
    ctx = f.ctx
    m, n = f.degree, g.degree
    fc = [f.coeff((m - j, j)) for j in range(m + 1)]
    gc = [g.coeff((n - j, j)) for j in range(n + 1)]
    size = m + n
    if size == 0:
        return ctx.one
    zero = ctx.zero
    rows = [[zero] * i + fc + [zero] * (size - m - 1 - i) for i in range(n)]
    rows += [[zero] * i + gc + [zero] * (size - n - 1 - i) for i in range(m)]
    return determinant(rows, ctx)
