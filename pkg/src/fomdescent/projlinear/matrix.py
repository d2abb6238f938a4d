"""Projective matrices and points with canonical scaling.

A class in PGL_n is stored by its unique representative whose first nonzero
entry (row-major) equals 1; points of P^(n-1) likewise by the representative
whose first nonzero coordinate is 1.
"""

from numbers import Rational

from ..errors import SingularMatrixError, ValidationError
from ..exactnum import CycElt, FqElt, cyc_ctx, galois_apply

QQ = cyc_ctx(1)


def context_of(values, ctx=None):
    """Common field context of a collection of scalars (Q when all rational)."""
    found = ctx
    for x in values:
        if isinstance(x, (CycElt, FqElt)):
            if found is None:
                found = x.ctx
            elif x.ctx is not found:
                raise ValidationError(f"entries mix {found} and {x.ctx}")
        elif not isinstance(x, (int, Rational)):
            raise ValidationError(f"unsupported scalar type {type(x).__name__}")
    return found if found is not None else QQ


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    raise ValidationError("only dimensions 1, 2 and 3 are supported")


def _adjugate(rows):
    n = len(rows)
    if n == 1:
        return ((rows[0][0].ctx.one,),)
    if n == 2:
        (a, b), (c, d) = rows
        return ((d, -b), (-c, a))
    (a, b, c), (d, e, f), (g, h, i) = rows
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def _scale_first(values):
    for x in values:
        if not x.is_zero():
            if x == 1:
                return tuple(values)
            inv = x.inverse()
            return tuple(v * inv for v in values)
    return None


class ProjMat:
    """Element of PGL_n(F), n in {1, 2, 3}, in canonical scaling."""

    __slots__ = ("ctx", "n", "rows", "_hash", "_key")

    def __init__(self, ctx, rows):
        # trusted constructor: rows already canonical and nonsingular
        self.ctx = ctx
        self.n = len(rows)
        self.rows = rows
        self._hash = None
        self._key = None

    @classmethod
    def _canonical(cls, ctx, rows):
        n = len(rows)
        flat = _scale_first([x for row in rows for x in row])
        return cls(ctx, tuple(flat[i * n:(i + 1) * n] for i in range(n)))

    # -- basic protocol ----------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, ProjMat) and self.ctx is other.ctx and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def key(self):
        """Total order key: lexicographic on canonical entries."""
        if self._key is None:
            self._key = tuple(x.key() for row in self.rows for x in row)
        return self._key

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return f"ProjMat({[[_short(x) for x in row] for row in self.rows]})"

    def entries(self):
        return [list(row) for row in self.rows]

    # -- algebra -----------------------------------------------------------
    def lift_mul(self, other):
        """Product of the canonical lifts, without rescaling."""
        n = self.n
        a, b = self.rows, other.rows
        return tuple(
            tuple(sum((a[i][k] * b[k][j] for k in range(1, n)), a[i][0] * b[0][j]) for j in range(n))
            for i in range(n)
        )

    def __mul__(self, other):
        if not isinstance(other, ProjMat):
            return NotImplemented
        if other.n != self.n or other.ctx is not self.ctx:
            raise ValidationError("matrix dimensions or field contexts differ")
        return ProjMat._canonical(self.ctx, self.lift_mul(other))

    def det(self):
        """Determinant of the canonical lift."""
        return _det(self.rows)

    def inverse(self):
        return ProjMat._canonical(self.ctx, _adjugate(self.rows))

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = identity(self.n, self.ctx), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self):
        one, zero = self.ctx.one, self.ctx.zero
        return all(
            (x == one) if i == j else x.is_zero() for i, row in enumerate(self.rows) for j, x in enumerate(row)
        )

    def is_diagonal(self):
        return all(x.is_zero() for i, row in enumerate(self.rows) for j, x in enumerate(row) if i != j)

    def order(self, bound=10000):
        """Order in PGL_n; raises ValidationError past ``bound``."""
        g, k = self, 1
        while not g.is_identity():
            g = g * self
            k += 1
            if k > bound:
                raise ValidationError(f"element order exceeds {bound}")
        return k

    def conj(self, sigma):
        """Entrywise Galois image (sigma acts on a cyclotomic context)."""
        return ProjMat._canonical(self.ctx, tuple(tuple(galois_apply(sigma, x) for x in row) for row in self.rows))

    def frobenius(self, k=1):
        return ProjMat._canonical(self.ctx, tuple(tuple(x.frobenius(k) for x in row) for row in self.rows))

    def apply(self, point):
        """Image M(P) of a projective point."""
        if point.n != self.n:
            raise ValidationError("point and matrix dimensions differ")
        coords = tuple(
            sum((row[k] * point.coords[k] for k in range(1, self.n)), row[0] * point.coords[0]) for row in self.rows
        )
        return ProjPoint._canonical(self.ctx, coords)

    def conjugate_by(self, m):
        """m * self * m^-1."""
        return m * self * m.inverse()


def _short(x):
    if isinstance(x, CycElt) and x.is_rational():
        return str(x.to_fraction())
    return repr(x)


def pmat_make(entries, ctx=None):
    """Canonical projective matrix from a square array of scalars."""
    rows = [list(r) for r in entries]
    n = len(rows)
    if n not in (1, 2, 3) or any(len(r) != n for r in rows):
        raise ValidationError("expected a square matrix of dimension 1, 2 or 3")
    ctx = context_of([x for r in rows for x in r], ctx)
    rows = tuple(tuple(ctx(x) for x in r) for r in rows)
    if _det(rows).is_zero():
        raise SingularMatrixError("matrix is singular")
    return ProjMat._canonical(ctx, rows)


def identity(n, ctx):
    one, zero = ctx.one, ctx.zero
    return ProjMat(ctx, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))


def diagonal(values, ctx=None):
    values = list(values)
    n = len(values)
    zero = 0
    return pmat_make([[values[i] if i == j else zero for j in range(n)] for i in range(n)], ctx)


class ProjPoint:
    """Point of P^(n-1) with first nonzero coordinate equal to 1."""

    __slots__ = ("ctx", "n", "coords", "_hash")

    def __init__(self, ctx, coords):
        self.ctx = ctx
        self.n = len(coords)
        self.coords = coords
        self._hash = None

    @classmethod
    def _canonical(cls, ctx, coords):
        scaled = _scale_first(coords)
        if scaled is None:
            raise ValidationError("the zero vector is not a projective point")
        return cls(ctx, scaled)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.ctx is other.ctx and self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def key(self):
        return tuple(x.key() for x in self.coords)

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return "[" + ":".join(_short(x) for x in self.coords) + "]"

    def conj(self, sigma):
        return ProjPoint._canonical(self.ctx, tuple(galois_apply(sigma, x) for x in self.coords))


def point(coords, ctx=None):
    coords = list(coords)
    ctx = context_of(coords, ctx)
    return ProjPoint._canonical(ctx, tuple(ctx(x) for x in coords))


def symmetric_square(m):
    """Image of a 2x2 class under the symmetric-square map into PGL_3."""
    if m.n != 2:
        raise ValidationError("symmetric square needs a 2x2 matrix")
    (a, b), (c, d) = m.rows
    if isinstance(a, FqElt) and a.ctx.p == 2:
        raise ValidationError("symmetric square needs characteristic other than 2")
    rows = (
        (a * a, a * b, b * b),
        (2 * a * c, a * d + b * c, 2 * b * d),
        (c * c, c * d, d * d),
    )
    return ProjMat._canonical(m.ctx, rows)


def block_lift(m, lift=None):
    """The 3x3 matrix [[m, 0], [0, 1]] for a 2x2 class, using ``lift`` if given."""
    if m.n != 2:
        raise ValidationError("block lift needs a 2x2 matrix")
    (a, b), (c, d) = lift if lift is not None else m.rows
    ctx = m.ctx
    z, o = ctx.zero, ctx.one
    return pmat_make([[a, b, z], [c, d, z], [z, z, o]], ctx)
