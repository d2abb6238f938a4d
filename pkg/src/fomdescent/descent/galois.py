"""Finite quotients of Galois groups acting on a cyclotomic context."""

from ..errors import ValidationError
from ..exactnum import GaloisAuto


class GalQuotient:
    """A finite group of automorphisms of one cyclotomic field.

    Elements are sorted by exponent; ``table[i][j]`` is the index of
    ``elements[i] * elements[j]`` (composition, left factor applied last).
    """

    def __init__(self, ctx, elements):
        elements = sorted(set(elements), key=lambda s: s.k)
        if not elements:
            raise ValidationError("a Galois quotient needs at least the identity")
        if any(s.ctx is not ctx for s in elements):
            raise ValidationError("automorphisms of different fields")
        index = {s: i for i, s in enumerate(elements)}
        if GaloisAuto(ctx, 1) not in index:
            raise ValidationError("identity missing from the Galois quotient")
        try:
            table = [[index[a * b] for b in elements] for a in elements]
        except KeyError as exc:
            raise ValidationError("automorphisms are not closed under composition") from exc
        self.ctx = ctx
        self.elements = tuple(elements)
        self.table = table
        self._index = index

    @classmethod
    def generated_by(cls, gens, ctx=None):
        gens = list(gens)
        ctx = ctx or gens[0].ctx
        seen = {GaloisAuto(ctx, 1)}
        frontier = list(seen)
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    b = a * g
                    if b not in seen:
                        seen.add(b)
                        new.append(b)
            frontier = new
        return cls(ctx, seen)

    @classmethod
    def trivial(cls, ctx):
        return cls(ctx, [GaloisAuto(ctx, 1)])

    @classmethod
    def complex_conjugation(cls, ctx):
        """{1, c}: the image of Gal(C/R) in Gal(Q(zeta_N)/Q)."""
        return cls.generated_by([ctx.conjugation], ctx)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self):
        return self.elements[self._index[GaloisAuto(self.ctx, 1)]]

    def mul(self, a, b):
        return self.elements[self.table[self._index[a]][self._index[b]]]

    def __repr__(self):
        return f"GalQuotient(N={self.ctx.N}, exponents={[s.k for s in self.elements]})"
