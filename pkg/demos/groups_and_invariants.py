"""Finite projective groups, their orbits, and the S4/D4 quotient maps."""

from fomdescent.exactnum import cyc_ctx
from fomdescent.forms import dihedral_invariant, induced_map
from fomdescent.projlinear import catalog, orbit, point

W = cyc_ctx(3)
for name in ("G9", "G18", "G36", "G72", "G216"):
    g = catalog(name, W)
    print(name, g.order, dict(sorted(g.element_orders().items())))

g18 = catalog("G18", W)
w = W.root_of_unity(3)
for label, p in (("[1:0:0]", [1, 0, 0]), ("[1:1:w]", [1, 1, w]), ("[2:1:1]", [2, 1, 1]), ("[2:3:5]", [2, 3, 5])):
    print("orbit of", label, "has", len(orbit(g18, point(p, W))), "points")

ctx = cyc_ctx(4)
s4, d4 = catalog("S4", ctx), catalog("D_2n", ctx, n=2)
t = dihedral_invariant(2, ctx)
for rep in s4.coset_representatives(d4):
    print("t = x^2 + x^-2 is sent to", induced_map(t, rep))
