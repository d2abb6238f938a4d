"""Homogeneous forms in two or three variables.

A form is a map from exponent vectors to nonzero field elements.  Terms are
kept in graded lexicographic order with X0 > X1 > X2, which for a fixed
degree is plain descending lexicographic order on exponent vectors.
"""

from ..errors import ValidationError
from ..exactnum import decode_elt, encode_elt, galois_apply
from .poly import UPoly


def _compositions(d, n):
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in _compositions(d - a, n - 1):
            yield (a,) + rest


class HomForm:
    """Homogeneous polynomial; immutable.

    ``zero`` forms are allowed only when built explicitly (``HomForm.zero``)
    or as the result of arithmetic; most operations reject them.
    """

    __slots__ = ("ctx", "nvars", "degree", "terms", "_hash")

    def __init__(self, ctx, nvars, degree, terms):
        if nvars not in (2, 3):
            raise ValidationError("forms must have 2 or 3 variables")
        clean = {}
        for e, c in terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars or sum(e) != degree or min(e) < 0:
                raise ValidationError(f"exponent {e} does not fit a degree-{degree} form in {nvars} variables")
            c = ctx(c)
            if not c.is_zero():
                clean[e] = c
        self.ctx = ctx
        self.nvars = nvars
        self.degree = degree
        self.terms = dict(sorted(clean.items(), reverse=True))
        self._hash = None

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, ctx, nvars, degree):
        return cls(ctx, nvars, degree, {})

    @classmethod
    def variables(cls, ctx, nvars):
        return tuple(cls(ctx, nvars, 1, {tuple(int(i == j) for j in range(nvars)): 1}) for i in range(nvars))

    @classmethod
    def constant(cls, ctx, nvars, value=1):
        return cls(ctx, nvars, 0, {(0,) * nvars: value})

    @classmethod
    def from_univariate(cls, poly, degree=None):
        """Homogenize p(x) as X1^d p(X0/X1); ``degree`` defaults to deg p."""
        d = poly.degree if degree is None else degree
        if d < poly.degree:
            raise ValidationError("homogenization degree is below the polynomial degree")
        return cls(poly.ctx, 2, d, {(j, d - j): c for j, c in enumerate(poly.c)})

    # -- protocol --------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HomForm):
            return NotImplemented
        return (
            self.ctx is other.ctx
            and self.nvars == other.nvars
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.degree, tuple(self.terms.items())))
        return self._hash

    def __repr__(self):
        names = ("X0", "X1", "X2")
        parts = []
        for e, c in self.terms.items():
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i] for i, k in enumerate(e) if k)
            parts.append(f"({_fmt(c)})*{mono}" if mono else f"({_fmt(c)})")
        return "HomForm(" + (" + ".join(parts) or "0") + ")"

    def coeff(self, e):
        return self.terms.get(tuple(e), self.ctx.zero)

    @property
    def leading(self):
        return next(iter(self.terms.items()))

    def normalized(self):
        """Scalar multiple with leading coefficient 1."""
        if self.is_zero():
            return self
        inv = self.leading[1].inverse()
        return self.scale(inv)

    # -- arithmetic ------------------------------------------------------
    def _check(self, other):
        if other.ctx is not self.ctx or other.nvars != self.nvars:
            raise ValidationError("forms over different fields or variable counts")

    def __add__(self, other):
        if isinstance(other, HomForm) and other.is_zero():
            return self
        if self.is_zero() and isinstance(other, HomForm):
            return other
        self._check(other)
        if other.degree != self.degree:
            raise ValidationError("cannot add forms of different degrees")
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t[e] + c if e in t else c
        return HomForm(self.ctx, self.nvars, self.degree, t)

    def __neg__(self):
        return HomForm(self.ctx, self.nvars, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = self.ctx(s)
        return HomForm(self.ctx, self.nvars, self.degree, {e: c * s for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, HomForm):
            return self.scale(other)
        self._check(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                t[e] = t[e] + v if e in t else v
        return HomForm(self.ctx, self.nvars, self.degree + other.degree, t)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        result = HomForm.constant(self.ctx, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- evaluation and calculus ----------------------------------------
    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        if hasattr(point[0], "coords") and len(point) == 1:
            point = point[0].coords
        if len(point) != self.nvars:
            raise ValidationError("point dimension does not match the form")
        pts = [self.ctx(x) for x in point]
        powers = [_powers(x, self.degree, self.ctx) for x in pts]
        acc = self.ctx.zero
        for e, c in self.terms.items():
            m = c
            for i, k in enumerate(e):
                if k:
                    m = m * powers[i][k]
            acc = acc + m
        return acc

    def partial(self, i):
        if self.degree == 0:
            return HomForm.zero(self.ctx, self.nvars, 0)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                t[tuple(e2)] = c * e[i]
        return HomForm(self.ctx, self.nvars, self.degree - 1, t)

    def gradient(self):
        return tuple(self.partial(i) for i in range(self.nvars))

    def conj(self, sigma):
        """Coefficientwise Galois image."""
        return HomForm(self.ctx, self.nvars, self.degree, {e: _apply(sigma, c) for e, c in self.terms.items()})

    def substitute(self, linear_forms):
        """f(L_0, ..., L_{n-1}) for forms L_i (all in a common variable set)."""
        if len(linear_forms) != self.nvars:
            raise ValidationError("wrong number of substituted forms")
        nv = linear_forms[0].nvars
        ctx = self.ctx
        cache = [dict() for _ in linear_forms]

        def power(i, k):
            if k not in cache[i]:
                cache[i][k] = HomForm.constant(ctx, nv) if k == 0 else power(i, k - 1) * linear_forms[i]
            return cache[i][k]

        deg = self.degree * linear_forms[0].degree
        total = {}
        for e, c in self.terms.items():
            m = None
            for i, k in enumerate(e):
                p = power(i, k)
                m = p if m is None else m * p
            for e2, c2 in m.terms.items():
                v = c2 * c
                total[e2] = total[e2] + v if e2 in total else v
        return HomForm(ctx, nv, deg, total)

    def restrict(self, rows):
        """Pull back along a linear map given by an nvars x k matrix of scalars.

        ``rows[i]`` are the coefficients of X_i as a linear form in k new
        variables; e.g. ``f.restrict([[1, 0], [0, 1], [0, 0]])`` is f(X0, X1, 0).
        """
        k = len(rows[0])
        lin = []
        for r in rows:
            lin.append(HomForm(self.ctx, k, 1, {tuple(int(i == j) for j in range(k)): r[i] for i in range(k)}))
        return self.substitute(lin)

    def dehomogenize(self):
        """Binary form f(X0, X1) -> polynomial f(x, 1)."""
        if self.nvars != 2:
            raise ValidationError("only binary forms dehomogenize to one variable")
        coeffs = [self.ctx.zero] * (self.degree + 1)
        for (a, _), c in self.terms.items():
            coeffs[a] = c
        return UPoly(self.ctx, coeffs)

    def monomials(self):
        return list(_compositions(self.degree, self.nvars))

    # -- serialization ---------------------------------------------------
    def to_json(self):
        return {
            "degree": self.degree,
            "nvars": self.nvars,
            "terms": [{"exp": list(e), "coeff": encode_elt(c)} for e, c in self.terms.items()],
        }

    @classmethod
    def from_json(cls, data, ctx=None):
        try:
            terms = {}
            for t in data["terms"]:
                c = decode_elt(t["coeff"], ctx)
                ctx = ctx or c.ctx
                terms[tuple(t["exp"])] = c
            if ctx is None:
                raise ValidationError("cannot infer the field of an empty form")
            return cls(ctx, int(data["nvars"]), int(data["degree"]), terms)
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed form JSON: {exc}") from exc


def _apply(sigma, c):
    if hasattr(sigma, "k"):
        return galois_apply(sigma, c)
    return sigma(c)


def _powers(x, d, ctx):
    out = [ctx.one]
    for _ in range(d):
        out.append(out[-1] * x)
    return out


def _fmt(c):
    if hasattr(c, "is_rational") and c.is_rational():
        return str(c.to_fraction())
    return repr(c)


def linear_form(coeffs, ctx):
    n = len(coeffs)
    return HomForm(ctx, n, 1, {tuple(int(i == j) for j in range(n)): coeffs[i] for i in range(n)})


def act(f, m):
    """Right action ([f])M = [f(M X)] with M acting on the column of variables."""
    if f.nvars != m.n:
        raise ValidationError(f"a {f.nvars}-variable form cannot be acted on by a {m.n}x{m.n} matrix")
    if f.ctx is not m.ctx:
        raise ValidationError("form and matrix live over different fields")
    return f.substitute([linear_form(row, f.ctx) for row in m.rows])


def proj_eq(f, g):
    """True iff f = lambda * g for some nonzero scalar lambda."""
    if f.nvars != g.nvars:
        raise ValidationError("forms in different numbers of variables")
    if f.ctx is not g.ctx or f.degree != g.degree:
        return False
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    if f.terms.keys() != g.terms.keys():
        return False
    e0, c0 = f.leading
    lam = c0 / g.terms[e0]
    return all(c == lam * g.terms[e] for e, c in f.terms.items())


def proportionality(f, g):
    """The scalar lambda with f = lambda * g, or None."""
    if not proj_eq(f, g) or f.is_zero():
        return None
    e0, c0 = f.leading
    return c0 / g.terms[e0]


def unisolvent_points(nvars, degree):
    """Integer points on which a form of this degree is determined by its values."""
    if nvars == 2:
        return [(i, 1) for i in range(degree + 1)]
    return [(i, j, 1) for i in range(degree + 1) for j in range(degree + 1 - i)]


class FormMapTester:
    """Exact test of ([f])M = [g] for a fixed pair of forms.

    In characteristic 0, f∘M - lambda*g is a form of degree d; it vanishes
    identically iff it vanishes on the principal lattice, which is what is
    checked.  Over finite fields (where the lattice collapses) the test
    substitutes and compares coefficients instead.
    """

    def __init__(self, f, g=None):
        g = f if g is None else g
        if f.is_zero() or g.is_zero():
            raise ValidationError("the zero form has no projective class")
        if f.nvars != g.nvars or f.degree != g.degree or f.ctx is not g.ctx:
            raise ValidationError("forms of different shape or field")
        self.f, self.g = f, g
        ctx = f.ctx
        self.by_evaluation = getattr(ctx, "p", None) is None
        if self.by_evaluation:
            self.points = [tuple(ctx(x) for x in p) for p in unisolvent_points(f.nvars, f.degree)]
            self.values = [g(p) for p in self.points]
            self.anchor = next(i for i, v in enumerate(self.values) if not v.is_zero())

    def check(self, m):
        f = self.f
        if m.n != f.nvars:
            raise ValidationError("dimension mismatch")
        if not self.by_evaluation:
            return proj_eq(act(f, m), self.g)
        rows = m.rows

        def image(p):
            return tuple(sum((r[k] * p[k] for k in range(1, len(p))), r[0] * p[0]) for r in rows)

        a = self.anchor
        lhs0 = f(image(self.points[a]))
        if lhs0.is_zero():
            return False
        v0 = self.values[a]
        for p, v in zip(self.points, self.values):
            if f(image(p)) * v0 != lhs0 * v:
                return False
        return True


class InvarianceTester(FormMapTester):
    """Exact test of ([f])M = [f]."""

    def __init__(self, f):
        super().__init__(f)

    fixes = FormMapTester.check


def fixes_form(f, m):
    return InvarianceTester(f).fixes(m)


def all_monomials(nvars, degree):
    return list(_compositions(degree, nvars))
