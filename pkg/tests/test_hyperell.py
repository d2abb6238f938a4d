from fractions import Fraction
from itertools import permutations
from math import isqrt

import pytest
from hypothesis import given, strategies as st

from fomdescent.descent import CocycleFamily, GalQuotient, identity_witness
from fomdescent.errors import ValidationError
from fomdescent.exactnum import GaloisAuto, QuadExtElt, cyc_ctx, embed_quadratic
from fomdescent.families import Ch5Params, ch5_build, ch5_witness
from fomdescent.forms import UPoly
from fomdescent.hyperell import (
    IsomWitness,
    conj_curve,
    curve_from_json,
    isomorphisms,
    mainhyp_classify,
    make_curve,
    reduced_aut,
    weil_search_C2,
    weil_verify,
)
from fomdescent.projlinear import pmat_make
from fomdescent.results import CYCLIC_UNRESOLVED, GUARANTEED_DEFINABLE

Q = cyc_ctx(1)


def curve_from_roots(roots, ctx):
    roots = [ctx(r) for r in roots]
    return make_curve(UPoly.from_roots(roots, ctx), roots)


def family1_alpha3():
    ctx = cyc_ctx(20)
    i, s5 = ctx.root_of_unity(4), embed_quadratic(ctx, 5)
    roots = [0, 1, -1, i, -i, (1 + s5) / 2, (1 - s5) / 2, (-1 + s5) / 2, (-1 - s5) / 2]
    return curve_from_roots(roots, ctx)


def sextic_x6_x3_1():
    ctx = cyc_ctx(9)
    # x^3 = primitive 6th root of unity, so x is a primitive 18th root
    return curve_from_roots([ctx.root_of_unity(18, k) for k in (1, 5, 7, 11, 13, 17)], ctx)


def _numeric_point(p):
    return complex(p.coords[0]), complex(p.coords[1])


def _cross_ratio(a, b, c, d):
    det = lambda p, q: p[0] * q[1] - p[1] * q[0]
    return det(a, c) * det(b, d) / (det(a, d) * det(b, c))


def brute_force_aut_order(X):
    """Ordered image triples whose cross-ratio matching permutes the branch set (floating point)."""
    pts = [_numeric_point(p) for p in X.branch_points()]
    base, rest = pts[:3], pts[3:]
    targets = [_cross_ratio(*base, p) for p in rest]
    count = 0
    for img in permutations(range(len(pts)), 3):
        tri = [pts[j] for j in img]
        others = [q for j, q in enumerate(pts) if j not in img]
        crs = [_cross_ratio(*tri, q) for q in others]
        matched = set()
        for t in targets:
            hits = [j for j, cr in enumerate(crs) if abs(cr - t) < 1e-8 * (1 + abs(t))]
            if len(hits) != 1:
                break
            matched.add(hits[0])
        else:
            count += len(matched) == len(rest)
    return count


def test_make_curve_examples():
    X = family1_alpha3()
    assert X.genus == 4 and X.includes_infinity
    assert X.f == UPoly.x(X.ctx) * (UPoly.x(X.ctx) ** 4 - 1) * UPoly(X.ctx, [1, 0, -3, 0, 1])
    Y = sextic_x6_x3_1()
    assert Y.genus == 2 and Y.f == UPoly(Y.ctx, [1, 0, 0, -1, 0, 0, 1])
    with pytest.raises(ValidationError):
        make_curve(UPoly(Q, [0, 0, 0, 0, -1, 1]))
    with pytest.raises(ValidationError):
        make_curve(UPoly(Q, [1, 0, 0, 1]))
    with pytest.raises(ValidationError):
        make_curve(UPoly.from_roots([Q(k) for k in range(6)], Q), [Q(k) for k in range(1, 7)])


def test_reduced_aut_examples():
    X = family1_alpha3()
    aut = reduced_aut(X)
    assert aut.order == 4 and aut.label == "klein_four"
    aut = reduced_aut(sextic_x6_x3_1())
    assert aut.order == 6 and aut.label == "dihedral"
    T = curve_from_roots([0, 1, 2, 3, 5], Q)
    assert reduced_aut(T).order == 1 == brute_force_aut_order(T)


@pytest.mark.parametrize("maker", [family1_alpha3, sextic_x6_x3_1])
def test_reduced_aut_matches_cross_ratio_oracle(maker):
    X = maker()
    assert reduced_aut(X).order == brute_force_aut_order(X)


def test_isomorphisms_examples():
    X = family1_alpha3()
    isos = isomorphisms(X, X)
    assert len(isos) == 4
    assert {w.M for w in isos} == set(reduced_aut(X).group.elements)
    A = sextic_x6_x3_1()
    ctx = A.ctx
    B = curve_from_roots([2 * r for r in A.roots], ctx)
    assert B.f == UPoly(ctx, [64, 0, 0, -8, 0, 0, 1])
    M = pmat_make([[2, 0], [0, 1]], ctx)
    found = [w for w in isomorphisms(A, B) if w.M == M]
    # the canonical lift is diag(1, 1/2), for which F_B(x, 1/2) = F_A exactly
    assert len(found) == 1 and found[0].lam == 1
    assert IsomWitness(pmat_make([[2, 0], [0, 1]], ctx), 1, A, B).is_valid()
    T = curve_from_roots([0, 1, 2, 3, 5, 7], Q)
    T2 = curve_from_roots([0, 1, 2, 3, 5, 11], Q)
    assert isomorphisms(T, T2) == []


def test_curve_json_round_trip():
    X = family1_alpha3()
    assert curve_from_json(X.to_json()) == X


def test_conj_curve_examples():
    ctx = cyc_ctx(4)
    X = curve_from_roots([0, 1, 2, 3, 5], ctx)
    assert conj_curve(ctx.conjugation, X) == X
    inst = ch5_build(Ch5Params(2, 2, (1 + ctx.root_of_unity(4), 2 + ctx.root_of_unity(4))))
    Xc = conj_curve(ctx.conjugation, inst.curve)
    assert sorted(r.key() for r in Xc.roots) == sorted(r.conj().key() for r in inst.curve.roots)
    assert Xc != inst.curve
    c5 = cyc_ctx(5)
    s = GaloisAuto(c5, 2)
    assert s.order() == 4
    Y = curve_from_roots([c5.root_of_unity(5, k) + k for k in range(6)], c5)
    Z = Y
    for _ in range(4):
        Z = conj_curve(s, Z)
    assert Z == Y and conj_curve(s, Y) != Y


c5 = cyc_ctx(5)
units5 = st.sampled_from([GaloisAuto(c5, k) for k in range(1, 5)])


@given(units5, units5, st.lists(st.integers(-3, 3), min_size=6, max_size=6, unique=True))
def test_conjugation_compatibility(s, t, shifts):
    z = c5.root_of_unity(5)
    X = curve_from_roots([z * k + 1 for k in shifts], c5)
    assert conj_curve(s, conj_curve(t, X)) == conj_curve(s * t, X)


# -- witness composition ------------------------------------------------------


def curve_from_points(points, ctx):
    finite = [p.coords[0] / p.coords[1] for p in points if not p.coords[1].is_zero()]
    return curve_from_roots(finite, ctx)


mobius_entries = st.tuples(*[st.integers(-3, 3) for _ in range(4)]).filter(lambda e: e[0] * e[3] - e[1] * e[2] != 0)


def _rational_sqrt(x):
    q = x.to_fraction()
    if q < 0 or isqrt(q.numerator) ** 2 != q.numerator or isqrt(q.denominator) ** 2 != q.denominator:
        return None
    return Q(Fraction(isqrt(q.numerator), isqrt(q.denominator)))


@given(st.lists(st.integers(-6, 6), min_size=6, max_size=6, unique=True), mobius_entries, mobius_entries)
def test_witness_composition_law(roots, e1, e2):
    X = curve_from_roots(roots, Q)
    M1, M2 = pmat_make([e1[:2], e1[2:]], Q), pmat_make([e2[:2], e2[2:]], Q)
    # a witness X -> Y carries branch(X) onto branch(Y)
    Y = curve_from_points([M1.apply(p) for p in X.branch_points()], Q)
    Z = curve_from_points([M2.apply(p) for p in Y.branch_points()], Q)
    w1 = IsomWitness.from_matrix(M1, X, Y)
    w2 = IsomWitness.from_matrix(M2, Y, Z)
    comp = w1.compose(w2)
    assert comp.M == M2 * M1
    assert comp.is_valid()
    lift = M2.lift_mul(M1)
    s = lift[0][0] if not lift[0][0].is_zero() else lift[0][1]
    assert comp.lam * s ** (2 * X.genus + 2) == w1.lam * w2.lam
    r1, r2 = _rational_sqrt(w1.lam), _rational_sqrt(w2.lam)
    if r1 is not None and r2 is not None:
        c = w1.with_e(QuadExtElt.base(r1)).compose(w2.with_e(QuadExtElt.base(r2)))
        assert c.e * c.e == c.lam and c.is_valid()


# -- descent -----------------------------------------------------------------


def ch5_fixture():
    ctx = cyc_ctx(4)
    i = ctx.root_of_unity(4)
    return ch5_build(Ch5Params(2, 2, (1 + i, 2 + i)))


def test_weil_trivial_cases():
    X = curve_from_roots([1, -1, 2, -2, 3, -3, 5, -5], cyc_ctx(4))
    ident = identity_witness(IsomWitness.from_matrix(pmat_make([[1, 0], [0, 1]], X.ctx), X, X), X)
    fam = CocycleFamily(GalQuotient.trivial(X.ctx), {GaloisAuto(X.ctx, 1): ident}, X)
    assert weil_verify(fam)
    q = GalQuotient.complex_conjugation(X.ctx)
    fam = CocycleFamily(q, {s: ident for s in q}, X)
    assert weil_verify(fam)


def test_weil_x8_minus_1_definable():
    ctx = cyc_ctx(8)
    X = curve_from_roots([ctx.root_of_unity(8, k) for k in range(8)], ctx)
    out = weil_search_C2(X)
    assert out.kind == "Definable" and out.definable


def test_ch5_witness_fails_cocycle():
    inst = ch5_fixture()
    X = inst.curve
    w = ch5_witness(inst)
    c = X.ctx.conjugation
    q = GalQuotient.complex_conjugation(X.ctx)
    for e in (QuadExtElt.sqrt(w.lam), -QuadExtElt.sqrt(w.lam)):
        fam = CocycleFamily(q, {q.identity: identity_witness(w, X), c: w.with_e(e)}, X)
        assert not weil_verify(fam)


def test_weil_search_ch5_obstructed():
    inst = ch5_fixture()
    out = weil_search_C2(inst.curve)
    assert out.kind == "Obstructed"
    assert out.tried == 2 * len(isomorphisms(inst.curve, conj_curve(inst.curve.ctx.conjugation, inst.curve)))


def test_not_isomorphic_to_conjugate():
    ctx = cyc_ctx(4)
    i = ctx.root_of_unity(4)
    X = curve_from_roots([i + 1, 2, 3, 5, 7, 11], ctx)
    out = weil_search_C2(X)
    assert out.kind == "NotIsomorphicToConjugate" and not out.definable


def test_mainhyp_classify_examples():
    assert mainhyp_classify(family1_alpha3()) == GUARANTEED_DEFINABLE
    assert mainhyp_classify(curve_from_roots([0, 1, 2, 3, 5], Q)) == CYCLIC_UNRESOLVED
    assert mainhyp_classify(ch5_fixture().curve) == CYCLIC_UNRESOLVED
