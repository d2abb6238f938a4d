"""Hyperelliptic curves with field of moduli R that have no real model.

Builds the f-family curve with a = ((1 + i)^2, (2 + i)^2), checks the five
admissibility conditions, and searches every isomorphism X -> cX for a real
structure.  A curve from the z -> 1/z family is run as a control.
"""

from fomdescent.exactnum import cyc_ctx
from fomdescent.families import Ch5Params, ch5_build, ch5_witness, inversion_family_build
from fomdescent.hyperell import reduced_aut, weil_search_C2


def main():
    ctx = cyc_ctx(4)
    i = ctx.root_of_unity(4)
    inst = ch5_build(Ch5Params(2, 2, (1 + i, 2 + i)))
    print("genus", inst.curve.genus)
    for name, ok in inst.conditions.items():
        print(f"  {name:26s} {ok}")

    w = ch5_witness(inst)
    print("lambda =", w.lam, " lambda^c lambda =", w.lam.conj() * w.lam)
    print("reduced automorphism group:", reduced_aut(inst.curve).label)
    print("search:", weil_search_C2(inst.curve))

    control = inversion_family_build(2, 1, (1 + i,))
    print("control:", weil_search_C2(control).kind)


if __name__ == "__main__":
    main()
