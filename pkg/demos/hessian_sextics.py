"""The two Hessian-tower sextics and their obstructions.

G36: f_a with a = i has no real model; none of the 36 isomorphisms to the
conjugate curve squares to the identity.  G18: the quaternion obstruction
for (u, v) = (2, 13), certified modulo 13^2.  The G18 build takes a few
seconds because it runs in Q(zeta_312).
"""

import json
import time

from fomdescent.families import G18Params, G36Params, g18_build, g36_build


def show(bundle):
    for name, ok in bundle.checks.items():
        print(f"  {name:48s} {ok}")
    print("  outcome:", bundle.outcome)


def main():
    start = time.perf_counter()
    _, b36 = g36_build(G36Params(1))
    print(f"G36 family ({time.perf_counter() - start:.1f} s)")
    show(b36)

    start = time.perf_counter()
    _, b18 = g18_build(G18Params((1, 1, 1), 2, 13))
    print(f"G18 family ({time.perf_counter() - start:.1f} s)")
    show(b18)
    print(json.dumps(b18.data["galois_orbit"], indent=1))


if __name__ == "__main__":
    main()
