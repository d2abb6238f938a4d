"""Dense univariate polynomials over an exact field context.

Coefficients are stored low degree first.  The field may be any context in
the package (cyclotomic or finite); only ``+ - * /``, ``is_zero`` and
``inverse`` are used.
"""

from ..errors import ValidationError


class UPoly:
    __slots__ = ("ctx", "c")

    def __init__(self, ctx, coeffs):
        cs = [ctx(x) for x in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ctx = ctx
        self.c = tuple(cs)

    @classmethod
    def x(cls, ctx):
        return cls(ctx, [0, 1])

    @classmethod
    def from_roots(cls, roots, ctx, lead=1):
        p = cls(ctx, [lead])
        for r in roots:
            p = p * cls(ctx, [-r, 1])
        return p

    # -- structure -------------------------------------------------------
    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    @property
    def lc(self):
        return self.c[-1] if self.c else self.ctx.zero

    def coeff(self, j):
        return self.c[j] if 0 <= j < len(self.c) else self.ctx.zero

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.ctx is other.ctx and self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"UPoly({list(self.c)})"

    # -- arithmetic ------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, UPoly):
            return other
        return UPoly(self.ctx, [other])

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.c), len(o.c))
        return UPoly(self.ctx, [self.coeff(j) + o.coeff(j) for j in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.ctx, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.c or not o.c:
            return UPoly(self.ctx, [])
        out = [self.ctx.zero] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if a.is_zero():
                continue
            for j, b in enumerate(o.c):
                out[i + j] = out[i + j] + a * b
        return UPoly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result, base = UPoly(self.ctx, [1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        inv = other.lc.inverse()
        q = [self.ctx.zero] * max(len(r) - len(other.c) + 1, 0)
        for k in range(len(q) - 1, -1, -1):
            t = r[k + other.degree] * inv
            q[k] = t
            if not t.is_zero():
                for j, b in enumerate(other.c):
                    r[k + j] = r[k + j] - t * b
        return UPoly(self.ctx, q), UPoly(self.ctx, r[: other.degree] if other.degree >= 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self):
        if self.is_zero():
            return self
        inv = self.lc.inverse()
        return UPoly(self.ctx, [x * inv for x in self.c])

    def derivative(self):
        return UPoly(self.ctx, [self.c[j] * j for j in range(1, len(self.c))])

    def __call__(self, x):
        acc = self.ctx.zero
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def compose(self, other):
        acc = UPoly(self.ctx, [])
        for a in reversed(self.c):
            acc = acc * other + a
        return acc

    def map_coeffs(self, fn):
        return UPoly(self.ctx, [fn(x) for x in self.c])


def poly_gcd(f, g):
    """Monic gcd (zero if both vanish)."""
    a, b = f, g.monic()
    while not b.is_zero():
        # monic remainders keep number-field coefficients small
        a, b = b, (a % b).monic()
    return a.monic()


def is_squarefree(f):
    """gcd(f, f') is constant; valid for separable f (char 0 or deg < p)."""
    if f.is_zero():
        raise ValidationError("the zero polynomial has no squarefree decomposition")
    return poly_gcd(f, f.derivative()).degree == 0


def sylvester_matrix(f, g):
    """Sylvester matrix with the deg(g) rows of f first, leading coefficients left."""
    m, n = f.degree, g.degree
    size = m + n
    zero = f.ctx.zero
    rows = []
    fc = list(reversed(f.c))
    gc = list(reversed(g.c))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def determinant(rows, ctx):
    """Exact determinant by Gaussian elimination over the field."""
    a = [list(r) for r in rows]
    n = len(a)
    det = ctx.one
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            return ctx.zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        inv = p.inverse()
        for r in range(col + 1, n):
            if a[r][col].is_zero():
                continue
            t = a[r][col] * inv
            a[r] = [x - t * y for x, y in zip(a[r], a[col])]
    return det


def resultant(f, g):
    """Res(f, g) as the Sylvester determinant, f-rows first.

    With this convention Res(f, g) = lc(f)^deg(g) * prod g(r) over the roots
    r of f, so Res(x - a, x - b) = a - b.
    """
    if f.is_zero() or g.is_zero():
        raise ValidationError("resultant of a zero polynomial")
    if f.ctx is not g.ctx:
        raise ValidationError("polynomials over different fields")
    if f.degree == 0 and g.degree == 0:
        return f.ctx.one
    return determinant(sylvester_matrix(f, g), f.ctx)


def nullspace(rows, ncols, ctx):
    """Basis of the right kernel of a matrix (list of rows)."""
    a = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if not a[i][col].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][col].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and not a[i][col].is_zero():
                t = a[i][col]
                a[i] = [x - t * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [ctx.zero] * ncols
        v[fcol] = ctx.one
        for i, pcol in enumerate(pivots):
            v[pcol] = -a[i][fcol]
        basis.append(v)
    return basis
