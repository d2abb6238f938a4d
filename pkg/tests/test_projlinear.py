from itertools import product

import pytest
from hypothesis import given, strategies as st

from fomdescent.errors import CapExceededError, ContextError, SingularMatrixError, ValidationError
from fomdescent.exactnum import cyc_ctx, fq_ctx
from fomdescent.projlinear import (
    catalog,
    conjugates_group,
    diagonal,
    get_closure_cap,
    group_closure,
    hessian_matrices,
    identity,
    normalizes,
    orbit,
    pmat_make,
    point,
    set_closure_cap,
    stabilizer,
    symmetric_square,
)

W = cyc_ctx(3)
G216 = catalog("G216", W)
TOWER = {name: catalog(name, W) for name in ("G9", "G18", "G36", "G72")}


def test_pmat_canonical_scaling():
    m = pmat_make([[2, 4], [6, 8]])
    assert m == pmat_make([[1, 2], [3, 4]])
    assert m.rows[0][0] == 1
    assert pmat_make([[0, 3], [5, 0]]).rows[0][1] == 1
    with pytest.raises(SingularMatrixError):
        pmat_make([[1, 2], [2, 4]])


def test_closure_examples():
    h = hessian_matrices(W)
    assert group_closure([h["S"], h["T"]]).order == 9
    assert group_closure([identity(3, W)]).order == 1
    assert len(group_closure([h["S"], h["T"], h["R"], h["V"], h["U"]]).elements) == 216


def test_closure_cap_is_an_error():
    with pytest.raises(CapExceededError) as info:
        catalog("G216", W, cap=100)
    assert info.value.partial_count > 100
    old = get_closure_cap()
    set_closure_cap(50)
    try:
        with pytest.raises(CapExceededError):
            catalog("G72", W)
    finally:
        set_closure_cap(old)


@pytest.mark.parametrize(
    "name,params,order",
    [
        ("C_n", {"n": 5}, 5),
        ("D_2n", {"n": 4}, 8),
        ("A4", {}, 12),
        ("S4", {}, 24),
        ("A5", {}, 60),
        ("PSL2_Fq", {"q": 3}, 12),
        ("PSL2_Fq", {"q": 5}, 60),
        ("PGL2_Fq", {"q": 3}, 24),
        ("PSL2q_in_PGL3", {"q": 5}, 60),
    ],
)
def test_catalog_orders_pgl2(name, params, order):
    assert catalog(name, **params).order == order


@pytest.mark.parametrize("beta,order", [(1, 5), (4, 10), (2, 20)])
def test_g_beta_a_order(beta, order):
    F5 = fq_ctx(5)
    g = catalog("G_beta_A", F5, beta=beta, A=list(range(5)))
    assert g.order == order


def test_g_beta_a_rejects_open_set():
    with pytest.raises(ValidationError):
        catalog("G_beta_A", fq_ctx(5), beta=2, A=[0, 1])


def test_catalog_context_error():
    with pytest.raises(ContextError):
        catalog("A5", cyc_ctx(4))


def test_s4_contains_i_diagonal():
    ctx = cyc_ctx(4)
    assert diagonal([ctx.root_of_unity(4), 1], ctx) in catalog("S4", ctx)


def test_containment_chains():
    ctx = cyc_ctx(4)
    d4, a4, s4 = catalog("D_2n", ctx, n=2), catalog("A4", ctx), catalog("S4", ctx)
    assert d4.is_subgroup_of(a4) and a4.is_subgroup_of(s4)
    chain = [TOWER["G9"], TOWER["G18"], TOWER["G36"], TOWER["G72"], G216]
    for small, big in zip(chain, chain[1:]):
        assert small.is_subgroup_of(big) and small.order < big.order


def test_g36_is_g18_with_v():
    h = hessian_matrices(W)
    assert group_closure(list(TOWER["G18"].generators) + [h["V"]]) == TOWER["G36"]


def test_normalizers():
    h = hessian_matrices(W)
    assert conjugates_group(identity(3, W), TOWER["G18"], TOWER["G18"])
    assert conjugates_group(h["U"], TOWER["G72"], TOWER["G72"])
    assert normalizes(h["V"], TOWER["G9"])
    for name in ("G9", "G18", "G72"):
        assert all(normalizes(g, TOWER[name]) for g in G216.generators)
    assert all(normalizes(g, TOWER["G36"]) for g in TOWER["G72"].generators)
    assert not normalizes(h["U"], TOWER["G36"])


def test_s4_normalizes_d4_and_a4():
    ctx = cyc_ctx(4)
    s4 = catalog("S4", ctx)
    for sub in (catalog("D_2n", ctx, n=2), catalog("A4", ctx)):
        assert all(normalizes(g, sub) for g in s4.elements)


def test_orbit_examples():
    G18, G36 = TOWER["G18"], TOWER["G36"]
    assert len(orbit(G18, point([1, 0, 0], W))) == 3
    assert len(orbit(G36, point([1, 0, 0], W))) == 6
    assert len(orbit(G36, point([0, 1, -1], W))) == 9
    assert len(orbit(G36, point([5, 1, 1], W))) == 18
    trivial = group_closure([identity(3, W)])
    p = point([2, 3, 7], W)
    assert orbit(trivial, p) == [p]
    with pytest.raises(ValidationError):
        point([0, 0, 0], W)


def test_stabilizer_examples():
    assert stabilizer(TOWER["G18"], point([1, 0, 0], W)).order == 6
    assert stabilizer(TOWER["G36"], point([5, 1, 1], W)).order == 2
    ctx = cyc_ctx(4)
    c4 = catalog("C_n", ctx, n=4)
    assert stabilizer(c4, [point([0, 1], ctx), point([1, 0], ctx)]) == c4


small_int = st.integers(-3, 3)


@st.composite
def eisenstein_points(draw):
    w = W.root_of_unity(3)
    coords = [draw(small_int) + draw(small_int) * w for _ in range(3)]
    if all(c.is_zero() for c in coords):
        coords[0] = W.one
    return point(coords, W)


@given(eisenstein_points(), st.sampled_from(["G9", "G18", "G36", "G72"]))
def test_orbit_stabilizer_product(p, name):
    G = TOWER[name]
    assert len(orbit(G, p)) * stabilizer(G, p).order == G.order


F7 = fq_ctx(7)


F7_INVERTIBLE = [e for e in product(range(7), repeat=4) if (e[0] * e[3] - e[1] * e[2]) % 7]
f7_matrices = st.sampled_from(F7_INVERTIBLE).map(lambda e: pmat_make([e[:2], e[2:]], F7))


@given(f7_matrices, f7_matrices)
def test_symmetric_square_homomorphism(m, n):
    assert symmetric_square(m * n) == symmetric_square(m) * symmetric_square(n)


def test_symmetric_square_examples():
    ctx = cyc_ctx(1)
    assert symmetric_square(identity(2, ctx)).is_identity()
    assert symmetric_square(pmat_make([[0, -1], [1, 0]], ctx)) == pmat_make([[0, 0, 1], [0, -1, 0], [1, 0, 0]], ctx)


def test_symmetric_square_injective_on_pgl2_f5():
    g = catalog("PGL2_Fq", q=5)
    assert len({symmetric_square(m) for m in g.elements}) == g.order


@pytest.mark.parametrize(
    "inner,params",
    [("D_2n", {"n": 3}), ("D_2n", {"n": 4}), ("S4", {}), ("A5", {}), ("PGL2_Fq", {"q": 5})],
)
def test_intransitive_lift_has_diagonal_element(inner, params):
    g = catalog("intransitive_lift", inner=inner, inner_params=params)
    found = False
    for m in g.elements:
        if not m.is_diagonal():
            continue
        rows = m.rows
        z1, z2, z3 = rows[0][0], rows[1][1], rows[2][2]
        if z1 != z3 and z2 != z3:
            found = True
            break
    assert found


def test_group_fingerprints():
    assert TOWER["G9"].is_abelian()
    assert not TOWER["G18"].is_abelian()
    assert dict(TOWER["G9"].element_orders()) == {1: 1, 3: 8}
    assert len(G216.coset_representatives(TOWER["G72"])) == 3


def test_sorted_deterministic_elements():
    again = catalog("G72", W)
    assert list(again.elements) == list(TOWER["G72"].elements)
    assert list(again.elements) == sorted(again.elements)
