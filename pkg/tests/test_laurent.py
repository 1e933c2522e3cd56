"""Exact Laurent arithmetic: ring axioms, division, substitution, text form."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qac import (
    DivisionFailure,
    Family,
    LPoly,
    Monomial,
    NonInvertibleSubstitution,
    VarKey,
    Weight,
    ell_plus,
    parse_lpoly,
    poly_add,
    poly_div_exact,
    poly_mul,
    psivar,
    substitute,
    try_div_exact,
    yvar,
    zvar,
)

N = 2


def w(*coords) -> Weight:
    return Weight(coords)


def tok(*coords) -> LPoly:
    return LPoly.weight_token(w(*coords))


def var(key: VarKey, e: int = 1) -> LPoly:
    return LPoly.var(N, key, e)


def test_add_cancellation():
    x = var(zvar(1, 0))
    assert poly_add(x, -x).is_zero()


def test_add_like_terms_weight_tokens():
    assert poly_add(tok(1, 0), tok(1, 0)) == LPoly(N, {Monomial(w(1, 0)): 2})


def test_add_like_terms_variables():
    a = var(yvar(1, 1)) + var(yvar(1, 3), -1)
    b = var(yvar(1, 3), -1)
    out = poly_add(a, b)
    assert out.coefficient(Monomial.var(N, yvar(1, 1))) == 1
    assert out.coefficient(Monomial.var(N, yvar(1, 3), -1)) == 2


def test_mul_inverse_weights():
    assert poly_mul(tok(1, 0), tok(-1, 0)) == LPoly.one(N)


def test_mul_laurent_inverse():
    assert poly_mul(var(zvar(1, 0)), var(zvar(1, 0), -1)) == LPoly.one(N)


def test_mul_binomial_square():
    y = var(yvar(1, 0))
    yinv = var(yvar(1, 0), -1)
    sq = poly_mul(y + yinv, y + yinv)
    assert sq == var(yvar(1, 0), 2) + LPoly.const(N, 2) + var(yvar(1, 0), -2)


def test_div_monomial_denominator():
    num = var(zvar(1, 2)) + var(zvar(1, -2))
    den = var(zvar(1, 0))
    q = poly_div_exact(num, den)
    assert q * den == num
    assert len(q.terms) == 2


def test_div_factorization():
    y = var(yvar(1, 0))
    yinv = var(yvar(1, 0), -1)
    num = poly_mul(y, y) - poly_mul(yinv, yinv)
    den = y - yinv
    assert poly_div_exact(num, den) == y + yinv


def test_div_failure():
    y = var(yvar(1, 0))
    with pytest.raises(DivisionFailure):
        poly_div_exact(y + LPoly.one(N), y - LPoly.one(N))
    assert try_div_exact(y + LPoly.one(N), y - LPoly.one(N)) is None


def test_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        poly_div_exact(LPoly.one(N), LPoly.zero(N))


def test_substitute_single_variable():
    # Y(1,0) image with weight dressing and two ell factors.
    image = LPoly.from_monomial(
        Monomial(w(1, 0), {ell_plus(1, -1): 1, ell_plus(1, 1): -1})
    )
    out = substitute(var(yvar(1, 0)), {yvar(1, 0): image})
    assert out == image


def test_substitute_identity_map():
    p = var(yvar(1, 0)) + var(yvar(2, 3), -2) + tok(0, 1)
    assert substitute(p, {}) == p


def test_substitute_negative_exponent_needs_unit():
    with pytest.raises(NonInvertibleSubstitution):
        substitute(
            var(yvar(1, 0), -1),
            {yvar(1, 0): LPoly.one(N) + var(yvar(1, 2))},
        )


def test_substitute_weight_accumulates():
    image = LPoly.from_monomial(Monomial(w(0, 1), {zvar(1, 0): 1}))
    p = LPoly.from_monomial(Monomial(w(1, 0), {yvar(1, 0): 2}))
    out = substitute(p, {yvar(1, 0): image})
    assert out == LPoly.from_monomial(Monomial(w(1, 2), {zvar(1, 0): 2}))


# -- randomized ring properties ------------------------------------------

KEYS = [zvar(1, 0), zvar(1, 2), yvar(2, -1), ell_plus(1, 1), psivar(2, 3)]


@st.composite
def monomials(draw):
    exps = {}
    for key in draw(st.lists(st.sampled_from(KEYS), max_size=3)):
        exps[key] = exps.get(key, 0) + draw(st.integers(-3, 3))
    coords = [Fraction(draw(st.integers(-4, 4)), draw(st.sampled_from([1, 2, 4]))) for _ in range(N)]
    return Monomial(Weight(coords), exps)


@st.composite
def polys(draw):
    terms = draw(st.dictionaries(monomials(), st.integers(-5, 5), max_size=4))
    return LPoly(N, terms)


@given(polys(), polys(), polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert poly_add(a, b) == poly_add(b, a)
    assert poly_mul(a, b) == poly_mul(b, a)
    assert poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c))
    assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))
    assert poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c))


@given(polys(), polys())
@settings(max_examples=60, deadline=None)
def test_division_round_trip(a, b):
    if b.is_zero():
        return
    assert poly_div_exact(poly_mul(a, b), b) == a


@given(polys())
@settings(max_examples=80, deadline=None)
def test_text_round_trip(p):
    assert parse_lpoly(p.text(), N) == p


def test_text_examples():
    m = Monomial(
        Weight([Fraction(3, 2), Fraction(-1)]),
        {yvar(1, -1): 2, ell_plus(2, 3): -1},
    )
    p = LPoly.from_monomial(m)
    assert p.text() == "[3/2*w1 - 1*w2] * l+(2,3)^-1 * Y(1,-1)^2"
    assert parse_lpoly(p.text(), N) == p
    # Factor order inside a monomial is free on input.
    assert parse_lpoly("[3/2*w1 - 1*w2] * Y(1,-1)^2 * l+(2,3)^-1", N) == p
    assert LPoly.zero(N).text() == "0"
    assert parse_lpoly("0", N) == LPoly.zero(N)
    assert LPoly.one(N).text() == "1"


def test_frozen_keys_have_no_shift():
    with pytest.raises(ValueError):
        VarKey(Family.FROZEN, 1, 2)
