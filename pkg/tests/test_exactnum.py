import cmath
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from fomdescent.errors import ContextError, PrecisionError, ValidationError
from fomdescent.exactnum import (
    GaloisAuto,
    certified_sign,
    complex_interval,
    cyc_ctx,
    cyc_make,
    decode_elt,
    embed,
    embed_quadratic,
    encode_elt,
    fq_ctx,
    galois_apply,
    quadratic_conductor,
    squarefree_part,
)

ORDERS = [3, 4, 5, 8, 12]
small_rat = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def numeric(x):
    """Independent evaluation: sum of c_j exp(2 pi i j / N)."""
    N = x.ctx.N
    return sum(complex(c) * cmath.exp(2j * cmath.pi * j / N) for j, c in enumerate(x.coeffs))


@st.composite
def elements(draw, N=None):
    N = N or draw(st.sampled_from(ORDERS))
    ctx = cyc_ctx(N)
    coeffs = draw(st.lists(small_rat, min_size=0, max_size=ctx.degree))
    return cyc_make(ctx, coeffs)


@st.composite
def triples(draw):
    N = draw(st.sampled_from(ORDERS))
    return tuple(draw(elements(N)) for _ in range(3))


@given(triples())
def test_field_axioms(t):
    a, b, c = t
    ctx = a.ctx
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ctx.zero == a and a * ctx.one == a
    assert a - a == ctx.zero
    if not a.is_zero():
        assert a * a.inverse() == ctx.one


@given(triples())
def test_arithmetic_matches_numeric_evaluation(t):
    a, b, _ = t
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-6 * (1 + abs(numeric(a) * numeric(b)))
    assert abs(numeric(a + b) - numeric(a) - numeric(b)) < 1e-9 * (1 + abs(numeric(a)) + abs(numeric(b)))


@st.composite
def galois_pairs(draw):
    N = draw(st.sampled_from(ORDERS + [7, 15]))
    ctx = cyc_ctx(N)
    units = [k for k in range(1, N) if gcd(k, N) == 1]
    s, t = (GaloisAuto(ctx, draw(st.sampled_from(units))) for _ in range(2))
    return s, t, draw(elements(N)), draw(elements(N))


@given(galois_pairs())
def test_galois_composition_and_homomorphism(data):
    s, t, x, y = data
    assert galois_apply(s * t, x) == galois_apply(s, galois_apply(t, x))
    assert galois_apply(s, x * y) == galois_apply(s, x) * galois_apply(s, y)
    assert galois_apply(s, x + y) == galois_apply(s, x) + galois_apply(s, y)
    assert galois_apply(s.inverse(), galois_apply(s, x)) == x


@given(elements())
def test_conjugation_is_complex_conjugate(x):
    assert abs(numeric(x.conj()) - numeric(x).conjugate()) < 1e-9 * (1 + abs(numeric(x)))
    assert x.conj() == galois_apply(x.ctx.conjugation, x)


@pytest.mark.parametrize("d", [2, -3, 5, 13, -15, -13, Fraction(8, 9), -1, -2, 3])
def test_embed_quadratic_squares_to_d(d):
    ctx = cyc_ctx(quadratic_conductor(d))
    r = embed_quadratic(ctx, d)
    assert r * r == ctx(d)
    z = complex(r)
    if d > 0:
        assert z.real > 0 and abs(z.imag) < 1e-9
    else:
        assert z.imag > 0 and abs(z.real) < 1e-9


def test_embed_quadratic_context_error_names_conductor():
    with pytest.raises(ContextError) as info:
        embed_quadratic(cyc_ctx(12), 13)
    assert info.value.minimal_order == 13


def test_squarefree_part_examples():
    assert squarefree_part(Fraction(8, 9)) == (Fraction(2, 3), 2)
    assert squarefree_part(-12) == (2, -3)
    assert quadratic_conductor(13) == 13
    assert quadratic_conductor(2) == 8
    assert quadratic_conductor(-1) == 4


def test_roots_of_unity():
    ctx = cyc_ctx(12)
    i = ctx.root_of_unity(4)
    assert i * i == -1
    w = ctx.root_of_unity(3)
    assert w * w + w + 1 == 0
    odd = cyc_ctx(5)
    z10 = odd.root_of_unity(10)
    assert z10**5 == -1 and z10**10 == 1
    with pytest.raises(ContextError):
        odd.root_of_unity(4)


@given(elements(N=24))
def test_embed_is_a_homomorphism(x):
    big = cyc_ctx(72)
    y = x * x + x
    assert embed(y, big) == embed(x, big) * embed(x, big) + embed(x, big)
    assert abs(numeric(embed(x, big)) - numeric(x)) < 1e-8 * (1 + abs(numeric(x)))


@given(elements())
def test_complex_interval_contains_value(x):
    box = complex_interval(x, 64)
    assert box.width < Fraction(1, 2**40)
    assert box.padded(Fraction(1, 10**9)).contains(numeric(x))


def test_certified_sign():
    ctx = cyc_ctx(8)
    r2 = embed_quadratic(ctx, 2)
    assert certified_sign(r2) == 1
    assert certified_sign(-r2) == -1
    assert certified_sign(ctx.root_of_unity(4), "re") == 0
    assert certified_sign(ctx.root_of_unity(4), "im") == 1
    tiny = r2 * 1000000 - 1414213
    assert certified_sign(tiny) == 1
    with pytest.raises(PrecisionError):
        certified_sign(tiny, precision_cap=16)
    with pytest.raises(ValidationError):
        certified_sign(r2, "abs")


@given(elements())
def test_encoding_round_trip(x):
    assert decode_elt(encode_elt(x)) == x


def test_encoding_rejects_garbage():
    with pytest.raises(ValidationError):
        decode_elt({"N": 5, "coeffs": ["1/0"]})
    with pytest.raises(ValidationError):
        decode_elt("7")


@pytest.mark.parametrize("p,r", [(3, 1), (3, 2), (5, 1), (7, 1)])
def test_finite_field(p, r):
    F = fq_ctx(p, r)
    q = p**r
    elts = list(F.elements())
    assert len(set(elts)) == q
    for x in elts:
        assert x**q == x
        assert x.frobenius(r) == x
        if not x.is_zero():
            assert x * x.inverse() == F.one
    orders = [x.multiplicative_order() for x in elts if not x.is_zero()]
    assert max(orders) == q - 1
