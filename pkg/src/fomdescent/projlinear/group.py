"""Finite matrix groups as explicit closed element sets."""

from collections import Counter, deque

from ..errors import CapExceededError, ValidationError
from .matrix import ProjMat, ProjPoint, identity

DEFAULT_CLOSURE_CAP = 5000
_closure_cap = DEFAULT_CLOSURE_CAP


def set_closure_cap(n):
    """Process-wide cap used when no explicit ``cap`` is passed."""
    global _closure_cap
    if int(n) < 1:
        raise ValidationError("closure cap must be at least 1")
    _closure_cap = int(n)


def get_closure_cap():
    return _closure_cap


class MatGroup:
    """A finite subgroup of PGL_n given by generators and all its elements."""

    def __init__(self, generators, elements, label=None):
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements, key=ProjMat.key))
        self._set = frozenset(self.elements)
        self.label = label
        first = self.elements[0]
        self.n, self.ctx = first.n, first.ctx

    def __len__(self):
        return len(self.elements)

    @property
    def order(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m):
        return m in self._set

    def __eq__(self, other):
        return isinstance(other, MatGroup) and self._set == other._set

    def __hash__(self):
        return hash(self._set)

    def __repr__(self):
        name = f" {self.label}" if self.label else ""
        return f"<MatGroup{name} of order {self.order} in PGL_{self.n}>"

    @property
    def element_set(self):
        return self._set

    def identity(self):
        return identity(self.n, self.ctx)

    def is_subgroup_of(self, other):
        return self._set <= other._set

    def element_orders(self):
        return Counter(g.order() for g in self.elements)

    def is_abelian(self):
        gens = self.generators or self.elements
        return all(a * b == b * a for a in gens for b in gens)

    def fingerprint(self):
        """(order, sorted element-order multiset, abelian flag)."""
        return (self.order, tuple(sorted(self.element_orders().items())), self.is_abelian())

    def coset_representatives(self, subgroup):
        """Left coset representatives g of g*H, first in sort order."""
        seen, reps = set(), []
        for g in self.elements:
            if g in seen:
                continue
            reps.append(g)
            seen.update(g * h for h in subgroup.elements)
        return reps

    def cayley_table(self):
        index = {g: i for i, g in enumerate(self.elements)}
        return [[index[a * b] for b in self.elements] for a in self.elements]


def group_closure(gens, cap=None, label=None):
    """Breadth-first closure of a finite generating set."""
    gens = list(gens)
    if not gens:
        raise ValidationError("at least one generator is required")
    cap = _closure_cap if cap is None else cap
    if cap < 1:
        raise ValidationError("closure cap must be at least 1")
    n, ctx = gens[0].n, gens[0].ctx
    if any(g.n != n or g.ctx is not ctx for g in gens):
        raise ValidationError("generators must share dimension and field context")
    ident = identity(n, ctx)
    seen = {ident}
    queue = deque([ident])
    distinct = list(dict.fromkeys(g for g in gens if not g.is_identity()))
    while queue:
        g = queue.popleft()
        for s in distinct:
            h = g * s
            if h not in seen:
                seen.add(h)
                if len(seen) > cap:
                    raise CapExceededError(
                        f"group closure exceeded the cap of {cap} elements", partial_count=len(seen)
                    )
                queue.append(h)
    return MatGroup(gens, seen, label)


def subgroup(elements, label=None):
    """MatGroup from a known closed subset, with a greedy generating set."""
    elements = sorted(set(elements), key=ProjMat.key)
    gens, span = [], {identity(elements[0].n, elements[0].ctx)}
    for g in elements:
        if g not in span:
            gens.append(g)
            span = set(group_closure(gens).elements)
    if not gens:
        gens = [identity(elements[0].n, elements[0].ctx)]
    if len(span) != len(elements):
        raise ValidationError("element set is not closed under multiplication")
    return MatGroup(gens, elements, label)


def conjugates_group(m, g, h):
    """True iff m * G * m^-1 equals H as sets."""
    if g.order != h.order:
        return False
    minv = m.inverse()
    return all((m * x * minv) in h for x in g.elements)


def normalizes(m, g):
    return conjugates_group(m, g, g)


def _point_stabilizes(m, target):
    if isinstance(target, ProjPoint):
        return m.apply(target) == target
    return {m.apply(p) for p in target} == target


def orbit(group, p):
    """G-orbit of a point, sorted canonically."""
    if not isinstance(p, ProjPoint):
        raise ValidationError("orbit needs a ProjPoint")
    pts = {g.apply(p) for g in group.elements}
    if group.order % len(pts):
        raise AssertionError("orbit size does not divide the group order")
    return sorted(pts, key=ProjPoint.key)


def stabilizer(group, target):
    """Subgroup fixing a point, or a finite point set setwise."""
    if isinstance(target, ProjPoint):
        fixed = [g for g in group.elements if g.apply(target) == target]
        if len(fixed) * len({g.apply(target) for g in group.elements}) != group.order:
            raise AssertionError("orbit-stabilizer count failed")
    else:
        target = frozenset(target)
        fixed = [g for g in group.elements if _point_stabilizes(g, target)]
    return subgroup(fixed)


def cyclic_subgroups(group):
    out = {}
    for g in group.elements:
        elts = frozenset(group_closure([g]).elements)
        out.setdefault(elts, g)
    return out


def all_subgroups(group):
    """Every subgroup, found by iterated joins of cyclic subgroups."""
    table = group.cayley_table()
    index = {g: i for i, g in enumerate(group.elements)}

    def close(seed):
        current = set(seed)
        frontier = list(current)
        while frontier:
            new = []
            for a in frontier:
                for b in list(current):
                    for c in (table[a][b], table[b][a]):
                        if c not in current:
                            current.add(c)
                            new.append(c)
            frontier = new
        return frozenset(current)

    cyclic = {close({index[g]}) for g in group.elements}
    subgroups = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for h in frontier:
            for c in cyclic:
                if not c <= h:
                    j = close(h | c)
                    if j not in subgroups:
                        new.add(j)
        subgroups |= new
        frontier = new
    return [frozenset(group.elements[i] for i in s) for s in sorted(subgroups, key=lambda s: (len(s), sorted(s)))]
