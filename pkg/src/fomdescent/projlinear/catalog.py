"""Named finite subgroups of PGL_2 and PGL_3.

Generators are written exactly as in the classical lists (Klein, Weber,
Miller-Blichfeldt-Dickson, Mitchell).  Every constructor closes its
generators and checks the resulting order against the expected one.
"""

from dataclasses import dataclass, field
from math import gcd

from ..errors import ContextError, ValidationError
from ..exactnum import CycElt, FqCtx, FqElt, cyc_ctx, embed_quadratic, fq_ctx
from .group import MatGroup, group_closure
from .matrix import block_lift, diagonal, pmat_make, symmetric_square

CATALOG_NAMES = (
    "C_n", "D_2n", "A4", "S4", "A5", "G_beta_A", "PSL2_Fq", "PGL2_Fq",
    "G9", "G18", "G36", "G72", "G216", "G60", "G168", "G360",
    "typeC", "typeD", "intransitive_lift", "PSL2q_in_PGL3", "PGL2q_in_PGL3",
)


@dataclass(frozen=True)
class CatalogKey:
    name: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in CATALOG_NAMES:
            raise ValidationError(f"unknown catalog group {self.name!r}; expected one of {', '.join(CATALOG_NAMES)}")


def _lcm(a, b):
    return a * b // gcd(a, b)


def _ctx_for(ctx, n):
    """Context hosting primitive n-th roots of unity (minimal when ctx is None)."""
    if ctx is None:
        return cyc_ctx(n if n % 4 != 2 else n // 2)
    if isinstance(ctx, FqCtx):
        return ctx
    if not ctx.has_root_of_unity(n):
        need = _lcm(ctx.N, n)
        raise ContextError(
            f"Q(zeta_{ctx.N}) lacks primitive {n}-th roots of unity; use N divisible by {n} (e.g. {need})",
            minimal_order=need,
        )
    return ctx


def _closed(gens, expected, label, cap):
    g = group_closure(gens, cap=cap, label=label)
    if expected is not None and g.order != expected:
        raise AssertionError(f"{label}: closure has order {g.order}, expected {expected}")
    return g


# -- PGL_2, characteristic zero (or prime to the order) ----------------------


def cyclic_gens(n, ctx):
    z = ctx.root_of_unity(n)
    return [diagonal([z, 1], ctx)]


def dihedral_gens(n, ctx):
    z = ctx.root_of_unity(n)
    return [diagonal([z, 1], ctx), pmat_make([[0, z], [1, 0]], ctx)]


def a4_elements(ctx):
    i = ctx.root_of_unity(4)
    out = [pmat_make(m, ctx) for m in ([[1, 0], [0, 1]], [[-1, 0], [0, 1]], [[0, 1], [1, 0]], [[0, -1], [1, 0]])]
    for nu in (1, 3):
        t = i**nu
        out += [
            pmat_make([[t, t], [1, -1]], ctx),
            pmat_make([[t, -t], [1, 1]], ctx),
            pmat_make([[1, t], [1, -t]], ctx),
            pmat_make([[-1, -t], [1, -t]], ctx),
        ]
    return out


def s4_elements(ctx):
    i = ctx.root_of_unity(4)
    out = []
    for nu in range(4):
        out.append(pmat_make([[i**nu, 0], [0, 1]], ctx))
        out.append(pmat_make([[0, i**nu], [1, 0]], ctx))
        for nu2 in range(4):
            out.append(pmat_make([[i**nu, -(i ** (nu + nu2))], [1, i**nu2]], ctx))
    return out


def golden(ctx):
    """(omega, omega_bar) = ((-1 + sqrt 5)/2, (-1 - sqrt 5)/2)."""
    e = ctx.root_of_unity(5)
    w = e + e**4
    return w, -1 - w


def a5_elements(ctx):
    e = ctx.root_of_unity(5)
    w, wb = golden(ctx)
    out = []
    for r in range(5):
        out.append(pmat_make([[e**r, 0], [0, 1]], ctx))
        out.append(pmat_make([[0, e**r], [-1, 0]], ctx))
        for s in range(5):
            out.append(pmat_make([[e**r * w, e ** (r - s)], [1, -(e ** (-s)) * w]], ctx))
            out.append(pmat_make([[e**r * wb, e ** (r - s)], [1, -(e ** (-s)) * wb]], ctx))
    return out


def beta_a_gens(beta, A, ctx):
    A = list(A)
    elems = set(A)
    if ctx(0) not in elems or ctx(1) not in elems:
        raise ValidationError("A must contain 0 and 1")
    for x in A:
        for y in A:
            if x + y not in elems:
                raise ValidationError("A is not closed under addition")
        if beta * x not in elems:
            raise ValidationError("A is not stable under multiplication by beta")
    gens = [diagonal([beta, 1], ctx)]
    gens += [pmat_make([[1, a], [0, 1]], ctx) for a in A if not a.is_zero()]
    return gens


def _field_order(ctx):
    if not isinstance(ctx, FqCtx):
        raise ValidationError("PSL_2(F_q) and PGL_2(F_q) need a finite-field context")
    return ctx.q


def psl2_gens(ctx):
    # translations by an F_p-basis of F_q, so all of SL_2 is reached for r > 1
    gens = [pmat_make([[1, 1], [0, 1]], ctx), pmat_make([[0, -1], [1, 0]], ctx)]
    if ctx.r > 1:
        g = ctx.gen
        gens += [pmat_make([[1, g**k], [0, 1]], ctx) for k in range(1, ctx.r)]
    return gens


def pgl2_gens(ctx):
    return psl2_gens(ctx) + [diagonal([ctx.primitive_element(), 1], ctx)]


# -- PGL_3 -------------------------------------------------------------------


def hessian_matrices(ctx):
    """S, T, R, V, U of the Hessian tower over a context containing omega."""
    w = ctx.root_of_unity(3)
    w2 = w * w
    return {
        "S": diagonal([1, w, w2], ctx),
        "T": pmat_make([[0, 1, 0], [0, 0, 1], [1, 0, 0]], ctx),
        "R": pmat_make([[1, 0, 0], [0, 0, 1], [0, 1, 0]], ctx),
        "V": pmat_make([[1, 1, 1], [1, w, w2], [1, w2, w]], ctx),
        "U": diagonal([1, 1, w], ctx),
    }


def hessian_gens(name, ctx):
    h = hessian_matrices(ctx)
    S, T, R, V, U = h["S"], h["T"], h["R"], h["V"], h["U"]
    tower = {
        "G9": [S, T],
        "G18": [S, T, R],
        "G36": [S, T, R, V],
        "G72": [S, T, R, V, U * V * U.inverse()],
        "G216": [S, T, R, V, U * V * U.inverse(), U],
    }
    return tower[name]


def icosahedral_matrices(ctx):
    e = ctx.root_of_unity(5)
    a = e**2 + e**3
    b = e + e**4
    return {
        "E1": diagonal([1, e**4, e], ctx),
        "E2": pmat_make([[1, 0, 0], [0, 0, 1], [0, 1, 0]], ctx),
        "E3": pmat_make([[1, 1, 1], [2, a, b], [2, b, a]], ctx),
    }


def valentiner_e4(ctx):
    e = ctx.root_of_unity(5)
    a = e**2 + e**3
    b = e + e**4
    s = embed_quadratic(ctx, -15)
    l1 = (s - 1) / 4
    l2 = (-s - 1) / 4
    return pmat_make([[1, l1, l1], [2 * l2, a, b], [2 * l2, b, a]], ctx)


def klein_matrices(ctx):
    bt = ctx.root_of_unity(7)
    a = bt**4 - bt**3
    b = bt**2 - bt**5
    c = bt - bt**6
    return {
        "F1": diagonal([bt, bt**2, bt**4], ctx),
        "F2": pmat_make([[0, 1, 0], [0, 0, 1], [1, 0, 0]], ctx),
        "F3": pmat_make([[a, b, c], [b, c, a], [c, a, b]], ctx),
    }


def _diag_gens(diags, ctx):
    gens = []
    for d in diags:
        m = diagonal(d, ctx)
        gens.append(m)
    return gens


# Lifts of PGL_2 generators whose determinants are roots of unity, so that
# the block lift generates a finite group.
def _finite_lifts(inner, params, ctx):
    if inner == "C_n":
        return [m.rows for m in cyclic_gens(params["n"], ctx)]
    if inner == "D_2n":
        z = ctx.root_of_unity(params["n"])
        o, zero = ctx.one, ctx.zero
        return [((z, zero), (zero, o)), ((zero, z), (o, zero))]
    if inner == "A4":
        i = ctx.root_of_unity(4)
        o, zero = ctx.one, ctx.zero
        s = (i - 1).inverse()  # (i - 1)^2 = -2i = det [[i, i], [1, -1]]
        return [((-o, zero), (zero, o)), ((zero, o), (o, zero)), ((i * s, i * s), (s, -s))]
    if inner == "S4":
        i = ctx.root_of_unity(4)
        o, zero = ctx.one, ctx.zero
        s = (1 + i).inverse()  # (1 + i)^2 = 2i = det [[i, -i], [1, 1]]
        return [((i, zero), (zero, o)), ((zero, o), (o, zero)), ((i * s, -i * s), (s, s))]
    if inner == "A5":
        e = ctx.root_of_unity(5)
        w, _ = golden(ctx)
        o, zero = ctx.one, ctx.zero
        s = (e**2 * (1 - e)).inverse()  # square root of det [[w, 1], [1, -w]] = -(w^2 + 1)
        return [((e, zero), (zero, o)), ((zero, o), (-o, zero)), ((w * s, s), (s, -w * s))]
    if inner in ("PSL2_Fq", "PGL2_Fq"):
        gens = psl2_gens(ctx) if inner == "PSL2_Fq" else pgl2_gens(ctx)
        return [m.rows for m in gens]
    raise ValidationError(f"no intransitive lift for {inner!r}")


def catalog(name, ctx=None, cap=None, **params):
    """Construct a named group; ``params`` as required by the entry.

    n: order parameter of C_n and D_2n.  q or (p, r): finite field for the
    F_q groups (or pass an FqCtx as ``ctx``).  beta, A: data of G_beta_A.
    diag: list of diagonal triples generating the diagonal part of typeC /
    typeD.  inner, inner_params: PGL_2 group for intransitive_lift.
    """
    if isinstance(name, CatalogKey):
        params = {**name.params, **params}
        name = name.name
    CatalogKey(name)
    label = name
    if name == "C_n":
        n = _positive(params, "n")
        ctx = _ctx_for(ctx, n)
        return _closed(cyclic_gens(n, ctx), n, f"C_{n}", cap)
    if name == "D_2n":
        n = _positive(params, "n")
        if n < 2:
            raise ValidationError("D_2n needs n > 1")
        ctx = _ctx_for(ctx, n)
        return _closed(dihedral_gens(n, ctx), 2 * n, f"D_{2 * n}", cap)
    if name == "A4":
        ctx = _ctx_for(ctx, 4)
        return _closed(a4_elements(ctx), 12, label, cap)
    if name == "S4":
        ctx = _ctx_for(ctx, 4)
        return _closed(s4_elements(ctx), 24, label, cap)
    if name == "A5":
        ctx = _ctx_for(ctx, 5)
        return _closed(a5_elements(ctx), 60, label, cap)
    if name == "G_beta_A":
        if ctx is None:
            raise ValidationError("G_beta_A needs an explicit field context")
        beta = ctx(params["beta"])
        A = [ctx(a) for a in params["A"]]
        order = len(set(A)) * _mult_order(beta)
        return _closed(beta_a_gens(beta, A, ctx), order, label, cap)
    if name in ("PSL2_Fq", "PGL2_Fq", "PSL2q_in_PGL3", "PGL2q_in_PGL3"):
        ctx = _finite_ctx(ctx, params)
        q = _field_order(ctx)
        order = q * (q * q - 1) // (2 if name.startswith("PSL") else 1)
        gens = psl2_gens(ctx) if name.startswith("PSL") else pgl2_gens(ctx)
        if name.endswith("PGL3"):
            gens = [symmetric_square(g) for g in gens]
        return _closed(gens, order, f"{name}(q={q})", cap)
    if name in ("G9", "G18", "G36", "G72", "G216"):
        ctx = _ctx_for(ctx, 3)
        return _closed(hessian_gens(name, ctx), int(name[1:]), label, cap)
    if name in ("G60", "G360"):
        ctx = _ctx_for(ctx, 5 if name == "G60" else 15)
        gens = list(icosahedral_matrices(ctx).values())
        if name == "G360":
            gens.append(valentiner_e4(ctx))
        return _closed(gens, int(name[1:]), label, cap)
    if name == "G168":
        ctx = _ctx_for(ctx, 7)
        return _closed(list(klein_matrices(ctx).values()), 168, label, cap)
    if name in ("typeC", "typeD"):
        diags = params.get("diag")
        if not diags:
            raise ValidationError(f"{name} needs 'diag': a list of diagonal triples")
        if ctx is None:
            from .matrix import context_of

            ctx = context_of([x for d in diags for x in d])
        gens = _diag_gens(diags, ctx)
        gens.append(pmat_make([[0, 1, 0], [0, 0, 1], [1, 0, 0]], ctx))
        if name == "typeD":
            gens.append(pmat_make([[1, 0, 0], [0, 0, 1], [0, 1, 0]], ctx))
        return _closed(gens, params.get("order"), label, cap)
    if name == "intransitive_lift":
        inner = params.get("inner")
        inner_params = dict(params.get("inner_params") or {})
        if inner in ("PSL2_Fq", "PGL2_Fq"):
            ctx = _finite_ctx(ctx, inner_params)
        else:
            need = {"C_n": inner_params.get("n"), "D_2n": inner_params.get("n"), "A4": 4, "S4": 4, "A5": 5}
            if inner not in need or need[inner] is None:
                raise ValidationError(f"intransitive_lift needs a supported inner group, got {inner!r}")
            ctx = _ctx_for(ctx, need[inner])
        lifts = _finite_lifts(inner, inner_params, ctx)
        gens = [block_lift(pmat_make(l, ctx), l) for l in lifts]
        return _closed(gens, None, f"intransitive({inner})", cap)
    raise ValidationError(f"catalog entry {name!r} is not constructible")


def _positive(params, key):
    v = params.get(key)
    if not isinstance(v, int) or v < 1:
        raise ValidationError(f"parameter {key!r} must be a positive integer")
    return v


def _finite_ctx(ctx, params):
    if isinstance(ctx, FqCtx):
        return ctx
    if ctx is not None:
        raise ValidationError("finite-field groups need an FqCtx")
    if "p" in params:
        return fq_ctx(int(params["p"]), int(params.get("r", 1)))
    q = params.get("q")
    if not isinstance(q, int) or q < 3:
        raise ValidationError("parameter 'q' must be an odd prime power")
    for p in range(3, q + 1, 2):
        r, m = 0, q
        while m % p == 0:
            m //= p
            r += 1
        if m == 1 and r:
            return fq_ctx(p, r)
        if q % p == 0:
            break
    raise ValidationError(f"q={q} is not an odd prime power")


def _mult_order(x, bound=100000):
    one = x.ctx.one
    y, k = x, 1
    while y != one:
        y = y * x
        k += 1
        if k > bound:
            raise ValidationError("beta must be a root of unity")
    return k


def is_fq(x):
    return isinstance(x, FqElt)


def is_cyc(x):
    return isinstance(x, CycElt)
