from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from fomdescent.errors import NotInNormalizerError, ValidationError
from fomdescent.exactnum import cyc_ctx, fq_ctx
from fomdescent.forms import (
    GRUNDFORM_KEYS,
    FormMapTester,
    HomForm,
    RatFunc,
    UPoly,
    act,
    binary_resultant,
    binary_squarefree,
    dihedral_invariant,
    grundform,
    induced_map,
    is_invariant,
    is_squarefree,
    orbit_form,
    proj_eq,
    psl2_invariant,
    resultant,
    stabilizer_form,
    tetrahedral_invariant,
)
from fomdescent.projlinear import catalog, group_closure, hessian_matrices, identity, orbit, pmat_make, point

W = cyc_ctx(3)
Q = cyc_ctx(1)
G216 = catalog("G216", W)
small = st.integers(-4, 4)


@st.composite
def ternary_forms(draw, degree=None, ctx=W):
    d = degree if degree is not None else draw(st.integers(1, 3))
    w = ctx.root_of_unity(3)
    exps = [(a, b, d - a - b) for a in range(d + 1) for b in range(d + 1 - a)]
    terms = {e: draw(small) + draw(small) * w for e in exps}
    if all(c.is_zero() for c in terms.values()):
        terms[exps[0]] = ctx.one
    return HomForm(ctx, 3, d, terms)


@st.composite
def ternary_matrices(draw):
    if draw(st.booleans()):
        return draw(st.sampled_from(G216.elements))
    # diagonally dominant, hence invertible
    rows = [[draw(st.integers(-2, 2)) + (7 if i == j else 0) for j in range(3)] for i in range(3)]
    return pmat_make(rows, W)


@given(ternary_forms(), ternary_matrices(), ternary_matrices())
def test_right_action_law(f, m1, m2):
    assert proj_eq(act(act(f, m1), m2), act(f, m1 * m2))


@given(ternary_forms(), ternary_matrices())
def test_act_agrees_with_pointwise_evaluation(f, m):
    g = act(f, m)
    for p in [(1, 0, 0), (1, 2, 3), (-2, 1, 5)]:
        image = [sum(m.rows[i][k] * p[k] for k in range(3)) for i in range(3)]
        assert g(p) == f(image)


@given(ternary_forms(degree=6))
def test_euler_identity(F):
    X = HomForm.variables(W, 3)
    total = HomForm.zero(W, 3, 6)
    for Xi, dF in zip(X, F.gradient()):
        total = total + Xi * dF
    assert total == F.scale(W(6))


def test_act_examples():
    h = hessian_matrices(W)
    X0, X1, X2 = HomForm.variables(W, 3)
    phi = X0 * X1 * X2
    psi = X0**3 + X1**3 + X2**3
    assert act(phi, h["T"]) == phi
    assert act(psi * psi, h["S"]) == psi * psi
    ctx = cyc_ctx(4)
    Y0, Y1 = HomForm.variables(ctx, 2)
    f = Y0**4 + Y1**4
    assert proj_eq(act(f, pmat_make([[0, ctx.root_of_unity(4)], [1, 0]], ctx)), f)
    with pytest.raises(ValidationError):
        act(f, h["S"])


def test_proj_eq_examples():
    X0, X1 = HomForm.variables(Q, 2)
    assert proj_eq(X0 * X0 * 2, X0 * X0)
    assert not proj_eq(X0 * X0, X1 * X1)


def test_form_map_tester_agrees_with_substitution():
    X0, X1, X2 = HomForm.variables(W, 3)
    F = X0**6 + X1**6 + X2**6 + X0 * X1 * X2 * (X0**3 + X1**3 + X2**3)
    tester = FormMapTester(F)
    for m in G216.elements:
        assert tester.check(m) == proj_eq(act(F, m), F)


def test_stabilizer_form_examples():
    X0, X1, X2 = HomForm.variables(W, 3)
    phi, psi = X0 * X1 * X2, X0**3 + X1**3 + X2**3
    # phi(V X) = psi - 3 phi, so phi is not G216-invariant; brute force gives 54
    V = hessian_matrices(W)["V"]
    assert act(phi, V) == psi - phi * 3
    stab = stabilizer_form(phi, G216)
    assert stab.order == sum(proj_eq(act(phi, m), phi) for m in G216.elements) == 54
    assert catalog("G18", W).is_subgroup_of(stab)
    x, y, z, w = sympy.symbols("x y z w")
    expanded = sympy.expand((x + y + z) * (x + w * y + w**2 * z) * (x + w**2 * y + w * z))
    reduced = sympy.rem(sympy.Poly(expanded, w), sympy.Poly(w**2 + w + 1, w)).as_expr()
    assert sympy.expand(reduced - (x**3 + y**3 + z**3 - 3 * x * y * z)) == 0
    ctx = cyc_ctx(5)
    c5 = catalog("C_n", ctx, n=5)
    Y0, _ = HomForm.variables(ctx, 2)
    assert stabilizer_form(Y0**3, c5) == c5


def _group_for(key):
    if key == "C_n":
        return catalog("C_n", cyc_ctx(5), n=5)
    if key == "D_2n":
        return catalog("D_2n", cyc_ctx(8), n=4)
    if key in ("A4", "S4"):
        return catalog(key, cyc_ctx(12))
    if key == "A5":
        return catalog("A5", cyc_ctx(5))
    if key == "G_beta_A":
        F = fq_ctx(5)
        return catalog("G_beta_A", F, beta=2, A=list(range(5)))
    return catalog(key, q=3)


@pytest.mark.parametrize("key", GRUNDFORM_KEYS)
def test_grundformen_invariant(key):
    G = _group_for(key)
    ctx = G.ctx
    kwargs = {}
    if key == "D_2n":
        kwargs = {"n": 4}
    if key == "G_beta_A":
        kwargs = {"beta": 2, "A": list(range(5))}
    for f in grundform(key, ctx, **kwargs):
        assert is_invariant(f, G)


def test_a5_printed_variant_is_not_invariant():
    G = catalog("A5", cyc_ctx(5))
    printed = grundform("A5", G.ctx, variant="printed")
    assert not is_invariant(printed[2], G)
    assert is_invariant(printed[0], G) and is_invariant(printed[1], G)


def test_grundform_examples():
    X0, X1 = HomForm.variables(Q, 2)
    assert grundform("D_2n", Q, n=2) == (X0 * X1, X0**2 - X1**2, X0**2 + X1**2)
    ctx = cyc_ctx(4)
    Y0, Y1 = HomForm.variables(ctx, 2)
    assert grundform("S4", ctx)[2] == Y0 * Y1 * (Y0**4 - Y1**4)
    F3 = fq_ctx(3)
    Z0, Z1 = HomForm.variables(F3, 2)
    a, b = grundform("PSL2_Fq", F3)
    assert a == (Z0**3 - Z0 * Z1**2) ** 2 + Z1**6
    assert b == (Z0**3 - Z0 * Z1**2) * Z1
    with pytest.raises(ValidationError):
        grundform("E8", Q)


def test_grundform_zero_sets_are_single_orbits():
    ctx = cyc_ctx(4)
    G = catalog("S4", ctx)
    f = grundform("S4", ctx)[2]
    # X0 X1 (X0^4 - X1^4): zeros 0, infinity, and the fourth roots of unity
    zeros = [point([0, 1], ctx), point([1, 0], ctx)] + [point([ctx.root_of_unity(4, k), 1], ctx) for k in range(4)]
    assert all(f(p).is_zero() for p in zeros)
    assert set(orbit(G, zeros[0])) == set(zeros)
    assert len(zeros) == f.degree


def test_orbit_form_examples():
    ctx = cyc_ctx(3)
    X0, X1 = HomForm.variables(ctx, 2)
    c3 = catalog("C_n", ctx, n=3)
    assert proj_eq(orbit_form(c3, point([0, 1], ctx)), X0)
    d4 = catalog("D_2n", cyc_ctx(4), n=2)
    Y0, Y1 = HomForm.variables(d4.ctx, 2)
    assert proj_eq(orbit_form(d4, point([1, 1], d4.ctx)), Y0**2 - Y1**2)
    trivial = group_closure([identity(2, Q)])
    Z0, Z1 = HomForm.variables(Q, 2)
    assert proj_eq(orbit_form(trivial, point([2, 1], Q)), Z0 - Z1 * 2)


def test_binary_squarefree_examples():
    X0, X1 = HomForm.variables(Q, 2)
    assert binary_squarefree(X0 * X1 * (X0**4 - X1**4))
    assert not binary_squarefree(X0 * X0 * X1)
    assert not binary_squarefree(X0 * X1 * X1)


@pytest.mark.parametrize("alpha,expected", [(1, 2601), (2, 2916), (7, 9801)])
def test_resultant_formula(alpha, expected):
    f = UPoly(Q, [1, 0, 0, -alpha, 0, 0, 1])
    g = UPoly(Q, [1, 0, 4, 0, 1])
    value = resultant(f, g)
    assert value == alpha**4 + 100 * alpha**2 + 2500 == expected
    x = sympy.symbols("x")
    assert value == sympy.resultant(x**6 - alpha * x**3 + 1, x**4 + 4 * x**2 + 1, x)


def test_resultant_sign_convention():
    # Sylvester determinant with f-rows first: Res(x - a, x - b) = a - b
    a, b = 3, 7
    assert resultant(UPoly(Q, [-a, 1]), UPoly(Q, [-b, 1])) == a - b


def test_binary_resultant_sees_infinity():
    X0, X1 = HomForm.variables(Q, 2)
    assert binary_resultant(X1 * (X0 - X1), X1 * (X0 + X1)).is_zero()
    assert not binary_resultant(X0 - X1, X0 + X1).is_zero()


@given(st.lists(st.integers(-3, 3), min_size=5, max_size=5), st.integers(1, 3))
def test_resultant_vs_squarefree(roots, lead):
    f = UPoly.from_roots([Q(r) for r in roots], Q, Q(lead))
    squarefree = len(set(roots)) == len(roots)
    assert (not resultant(f, f.derivative()).is_zero()) == squarefree
    assert is_squarefree(f) == squarefree
    assert binary_squarefree(HomForm.from_univariate(f)) == squarefree


def test_homform_json_round_trip():
    X0, X1, X2 = HomForm.variables(W, 3)
    F = X0**2 * X1 * W.root_of_unity(3) + X2**3
    assert HomForm.from_json(F.to_json()) == F


def _mobius(rows, ctx):
    return pmat_make(rows, ctx)


def test_induced_map_examples():
    ctx = cyc_ctx(4)
    t = dihedral_invariant(2, ctx)
    assert induced_map(t, _mobius([[1, -1], [1, 1]], ctx)) == _mobius([[2, 12], [1, -2]], ctx)
    assert induced_map(t, identity(2, ctx)).is_identity()
    for n in (2, 3, 5):
        c = cyc_ctx(2 * n)
        tn = dihedral_invariant(n, c)
        assert induced_map(tn, _mobius([[c.root_of_unity(2 * n), 0], [0, 1]], c)) == _mobius([[-1, 0], [0, 1]], c)


def test_induced_map_rejects_non_normalizer():
    ctx = cyc_ctx(4)
    t = dihedral_invariant(2, ctx)
    with pytest.raises(NotInNormalizerError):
        induced_map(t, _mobius([[1, 1], [0, 1]], ctx))


def test_dihedral_and_tetrahedral_invariants():
    for n in (2, 3, 4):
        ctx = cyc_ctx(2 * n)
        t = dihedral_invariant(n, ctx)
        for g in catalog("D_2n", ctx, n=n).generators:
            assert t.compose_mobius(g) == t
    ctx = cyc_ctx(4)
    t = tetrahedral_invariant(ctx)
    for g in catalog("A4", ctx).generators:
        assert t.compose_mobius(g) == t


def test_psl2_invariant_q3():
    F3 = fq_ctx(3)
    g = psl2_invariant(F3)
    assert g.compose_mobius(_mobius([[0, -1], [1, 0]], F3)) == g
    for a in range(3):
        assert g.compose_mobius(_mobius([[1, a], [0, 1]], F3)) == g
    with pytest.raises(ValidationError):
        psl2_invariant(Q)


def test_ratfunc_normalization():
    x = UPoly.x(Q)
    r = RatFunc(x * x * 2 - x * 2, x * 4 - 4)
    assert r.num == x * Fraction(1, 2) and r.den == UPoly(Q, [1])
