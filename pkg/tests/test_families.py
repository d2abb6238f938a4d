import cmath
from fractions import Fraction
from math import gcd

import pytest
import sympy

from fomdescent.errors import ValidationError
from fomdescent.exactnum import GaloisAuto, cyc_ctx, embed_quadratic, galois_apply
from fomdescent.families import (
    Ch5Params,
    G18Params,
    G36Params,
    ch5_build,
    ch5_witness,
    ch7_diag_build,
    diag_generators,
    expected_lambda,
    inversion_family_build,
    square_in_eisenstein,
    surjection_lattice_check,
)
from fomdescent.families.hessian import galois_representatives
from fomdescent.hyperell import mainhyp_classify, reduced_aut, weil_search_C2, weil_verify
from fomdescent.results import GUARANTEED_DEFINABLE

C4 = cyc_ctx(4)
I = C4.root_of_unity(4)


def ch5_fixture(which="f"):
    return Ch5Params(2, 2, (1 + I, 2 + I), which)


def paper_lambda(p):
    lam = C4.one
    for a in p.a:
        lam = lam * (-a.conj() / a)
    return lam


# -- hyperelliptic families ---------------------------------------------------


def test_ch5_fixture_meets_every_condition():
    inst = ch5_build(ch5_fixture())
    assert inst.admissible
    assert set(inst.conditions) == {"squarefree", "not_real", "inversion_not_preserving",
                                    "root_of_unity_condition", "special_n3"}
    assert inst.curve.genus == 3 and len(inst.curve.roots) == 8


def test_ch5_roots_are_the_stated_ones():
    p = ch5_fixture()
    roots = {complex(r) for r in ch5_build(p).curve.roots}
    expected = set()
    for a in (1 + 1j, 2 + 1j):
        a = a * a
        for t in (a, -1 / a.conjugate()):
            s = cmath.sqrt(t)
            expected |= {s, -s}
    assert all(min(abs(r - e) for r in roots) < 1e-12 for e in expected)


def test_ch5_degenerate_parameters_are_reported():
    c8 = cyc_ctx(8)
    inst = ch5_build(Ch5Params(2, 2, (c8.one, c8.root_of_unity(8))))
    assert not inst.admissible
    assert not inst.conditions["not_real"] or not inst.conditions["inversion_not_preserving"]


@pytest.mark.parametrize("args", [(3, 2), (1, 2), (2, 1)])
def test_ch5_parameter_errors(args):
    n, r = args
    with pytest.raises(ValidationError):
        Ch5Params(n, r, tuple([1 + I] * r))


def test_ch5_parameter_errors_other():
    with pytest.raises(ValidationError):
        Ch5Params(2, 2, (1 + I, 2 + I), "h")
    with pytest.raises(ValidationError):
        Ch5Params(2, 2, (1 + I, C4.zero))
    with pytest.raises(ValidationError):
        Ch5Params(3, 1, (1 + I,), "g")


def test_ch5_witness_lambda():
    p = ch5_fixture()
    w = ch5_witness(ch5_build(p))
    assert w.lam == paper_lambda(p) == expected_lambda(p)
    assert w.lam.conj() * w.lam == 1


def test_g_family_witness_lambda():
    p = ch5_fixture("g")
    inst = ch5_build(p)
    assert inst.admissible and inst.curve.genus == 4
    w = ch5_witness(inst)
    e_sq = paper_lambda(p) / I
    # the canonical lift [[0, 1], [i, 0]] rescales lambda by i^(2g + 2) = -1
    assert w.lam == -e_sq
    assert w.lam.conj() * w.lam == 1


def test_ch5_pipeline_obstructed():
    X = ch5_build(ch5_fixture()).curve
    res = weil_search_C2(X)
    assert res.kind == "Obstructed" and res.definable is False
    assert not reduced_aut(X).order == 1 and reduced_aut(X).is_cyclic


def test_inversion_family_is_definable_over_reals():
    X = inversion_family_build(2, 1, (1 + I,))
    res = weil_search_C2(X)
    assert res.kind == "Definable" and weil_verify(res.witness)


@pytest.mark.parametrize("beta", [2 + I, 3 + 2 * I])
def test_g_family_with_sm_two_is_definable(beta):
    """Genus 2 members satisfy every listed condition yet have a Klein four reduced group."""
    inst = ch5_build(Ch5Params(2, 1, (beta,), "g"))
    assert inst.admissible
    aut = reduced_aut(inst.curve)
    assert aut.order == 4 and not aut.is_cyclic
    assert mainhyp_classify(inst.curve, aut) is GUARANTEED_DEFINABLE
    res = weil_search_C2(inst.curve)
    assert res.kind == "Definable" and weil_verify(res.witness)


# -- diagonal plane curves -------------------------------------------------------


def projective_diag_count(n, r):
    # independent count of <E, F, H> as numeric diagonal matrices modulo scalars
    zn, zh = cmath.exp(2j * cmath.pi / n), cmath.exp(2j * cmath.pi / (2 * n * r))
    seen = set()
    for a in range(n):
        for b in range(n):
            for c in range(2 * n * r):
                d = (zn**a, zn**b, zh**c)
                key = tuple((round((x / d[0]).real, 9), round((x / d[0]).imag, 9)) for x in d)
                seen.add(key)
    return len(seen)


def test_diag_bundle():
    X, b = ch7_diag_build(ch5_fixture())
    assert b.ok, b.failed()
    assert b.data["group_order"] == projective_diag_count(2, 2) == 16
    assert b.outcome.kind == "Obstructed" and b.outcome.tried == 16
    assert X.F.degree == 8


def test_diag_generators_fix_the_form():
    X, _ = ch7_diag_build(ch5_fixture())
    from fomdescent.forms import act

    for g in diag_generators(2, 2, X.F.ctx):
        assert act(X.F, g) == X.F


def test_diag_rejects_g_family():
    with pytest.raises(ValidationError):
        ch7_diag_build(ch5_fixture("g"))


def test_diag_rejects_inadmissible_parameters():
    c8 = cyc_ctx(8)
    with pytest.raises(ValidationError):
        ch7_diag_build(Ch5Params(2, 2, (c8.one, c8.root_of_unity(8))))


# -- Hessian families -----------------------------------------------------------


def test_g36_bundle(g36_result):
    X, b = g36_result
    assert b.ok, b.failed()
    assert b.data["stabilizer_order"] == 36
    assert b.data["isomorphisms_to_conjugate"] == 36
    assert b.outcome.kind == "Obstructed" and b.outcome.tried == 36


def test_g18_bundle(g18_result):
    X, b = g18_result
    assert b.ok, b.failed()
    assert b.data["stabilizer_order"] == 18
    assert b.data["normeq_certificates"] == [[13, 2], [13, 2]]
    assert b.outcome.kind == "Obstructed"
    for row in b.data["galois_orbit"]:
        assert (row["g72_matches"] > 0) == row["fixes_omega"]
    assert len(b.data["galois_orbit"]) == 8


def test_galois_representatives_cover_every_sign_pattern():
    p = G18Params((1, 1, 1), 2, 13)
    ctx = p.ctx
    w, su, sv = ctx.root_of_unity(3), embed_quadratic(ctx, 2), embed_quadratic(ctx, 13)
    reps = galois_representatives(ctx, w, su, sv)
    wide = set()
    for k in range(1, ctx.N):
        if gcd(k, ctx.N) == 1:
            s = GaloisAuto(ctx, k)
            wide.add((galois_apply(s, w) == w, galois_apply(s, su) == su, galois_apply(s, sv) == sv))
    assert set(reps) == wide and len(wide) == 8


def test_surjection_lattice():
    n_subs, n_onto, ok = surjection_lattice_check()
    assert ok and n_onto >= 1 and n_subs > n_onto


def eisenstein_square_oracle(x):
    t = sympy.Symbol("t")
    factors = sympy.factor_list(t**2 - sympy.Rational(x.numerator, x.denominator), extension=sympy.sqrt(-3))[1]
    return len(factors) == 2 or any(m == 2 for _, m in factors)


@pytest.mark.parametrize("x", [1, 4, -3, -12, Fraction(-1, 3), Fraction(9, 4), 2, 13, 26, -1, -2, 3, Fraction(1, 3), -27])
def test_square_in_eisenstein(x):
    assert square_in_eisenstein(x) == eisenstein_square_oracle(Fraction(x))


@pytest.mark.parametrize("params", [((1, 1, 1), 2, 2), ((1, 1, 1), -3, 2), ((1, 1, 1), 2, -6),
                                    ((0, 1, 1), 2, 13), ((1, 1), 2, 13)])
def test_g18_parameter_errors(params):
    with pytest.raises(ValidationError):
        G18Params(*params)


def test_g36_parameter_error():
    with pytest.raises(ValidationError):
        G36Params(0)


# -- structure of G72 used by the quaternion argument --------------------------


def _conjugacy_classes(G):
    remaining, classes = set(G.elements), []
    while remaining:
        x = min(remaining)
        cls = {g * x * g.inverse() for g in G.elements}
        classes.append(cls)
        remaining -= cls
    return classes


def test_g72_order_four_classes_are_the_g18_cosets():
    from fomdescent.projlinear import all_subgroups, catalog, hessian_matrices

    W = cyc_ctx(3)
    g72, g18, g9 = catalog("G72", W), catalog("G18", W), catalog("G9", W)
    h = hessian_matrices(W)
    U, V = h["U"], h["V"]
    cosets = [{M * A for A in g18.elements} for M in (V, U.inverse() * V * U, U * V * U.inverse())]
    order4 = [c for c in _conjugacy_classes(g72) if next(iter(c)).order() == 4]
    assert len(order4) == 3 and all(len(c) == 18 for c in order4)
    assert sorted(map(sorted, order4)) == sorted(map(sorted, cosets))
    assert set().union(*cosets) | g18.element_set == set(g72.elements)

    subs = all_subgroups(g72)
    assert [H for H in subs if len(H) == 9] == [g9.element_set]
    meets_all = [H for H in subs if all(H & c for c in order4)]
    proper = [H for H in meets_all if len(H) < 72]
    assert proper and all(len(H) == 8 for H in proper)


def test_odd_m_equation_with_minus_sign_is_definable():
    """z prod (z^m - d_i)(z^m - 1/d_i^c) with m odd admits a real model."""
    ctx = cyc_ctx(12)
    i = ctx.root_of_unity(4)
    X = inversion_family_build(3, 2, (1 + i, 2 + i))
    assert X.genus == 6
    res = weil_search_C2(X)
    assert res.kind == "Definable" and weil_verify(res.witness)
