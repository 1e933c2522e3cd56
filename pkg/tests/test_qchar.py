"""Rank-one character ladders, series, normalization, truncation, limits."""

import pytest

from qac import (
    DepthMismatch,
    LPoly,
    Monomial,
    NoUniqueTop,
    QCharacter,
    Weight,
    a_certificate,
    a_monomial,
    avar,
    cartan_data,
    character,
    compare_at,
    kr_qchar_sl2,
    limit_stabilizes,
    normalize,
    prefund_minus_qchar_sl2,
    prefund_plus_qchar_sl2,
    psivar,
    qchar_equal,
    qchar_mul,
    term_depth,
    to_a_form,
    top_term,
    truncate_depth,
    truncate_leR,
    yvar,
)

A1 = cartan_data("A1")


def Y(r, e=1):
    return LPoly.var(1, yvar(1, r), e)


def test_kr_trivial():
    assert kr_qchar_sl2(0, 0).poly == LPoly.one(1)


def test_kr_two_terms_matches_fundamental():
    assert kr_qchar_sl2(1, 0).poly == Y(0) + Y(2, -1)


def test_kr_length_three_ladder():
    c = kr_qchar_sl2(3, -3)
    assert len(c.poly.terms) == 4
    top = Monomial(Weight.zero(1), {yvar(1, -3): 1, yvar(1, -1): 1, yvar(1, 1): 1})
    assert c.poly.coefficient(top) == 1
    # Each lower term hangs off the top by descending inverse-root steps.
    cur = top
    for shift in (2, 0, -2):
        cur = cur * a_monomial(A1, 1, shift).inverse()
        assert c.poly.coefficient(cur) == 1


def test_prefund_plus():
    assert prefund_plus_qchar_sl2(3, 0).poly == LPoly.from_monomial(
        Monomial(Weight.zero(1), {psivar(1, 3): 1})
    )
    c = prefund_plus_qchar_sl2(3, 2)
    psi = Monomial(Weight.zero(1), {psivar(1, 3): 1})
    for r in range(3):
        tokn = Monomial.weight_token(Weight.fundamental(1, 1, -2 * r))
        assert c.poly.coefficient(psi * tokn) == 1
    # Normalized series is independent of the spectral shift.
    assert normalize(prefund_plus_qchar_sl2(0, 4)).poly == normalize(
        prefund_plus_qchar_sl2(5, 4)
    ).poly


def test_prefund_minus():
    c = prefund_minus_qchar_sl2(0, 1)
    psi_inv = Monomial(Weight.zero(1), {psivar(1, 0): -1})
    assert c.poly.coefficient(psi_inv) == 1
    assert c.poly.coefficient(psi_inv * a_monomial(A1, 1, 0).inverse()) == 1
    assert len(c.poly.terms) == 2
    # Normalized series depends on the shift (indices move with it).
    assert normalize(prefund_minus_qchar_sl2(0, 3)).poly != normalize(
        prefund_minus_qchar_sl2(2, 3)
    ).poly
    # Weight projections of both families agree at equal depth.
    assert character(prefund_plus_qchar_sl2(4, 3)) == character(
        prefund_minus_qchar_sl2(4, 3)
    )


def test_normalize_fundamental():
    c = normalize(kr_qchar_sl2(1, 0))
    one = Monomial(Weight.zero(1))
    assert c.poly.coefficient(one) == 1
    assert c.poly.coefficient(a_monomial(A1, 1, 1).inverse()) == 1
    assert normalize(c).poly == c.poly  # idempotent


def test_normalize_drops_minus_prefix():
    c = prefund_minus_qchar_sl2(0, 2)
    norm = normalize(c)
    assert norm.poly.coefficient(Monomial(Weight.zero(1))) == 1
    assert all(
        all(k.family.name != "PSI" for k, _ in m.exps) for m in norm.poly.terms
    )


def test_character_examples():
    assert character(kr_qchar_sl2(1, 0)) == LPoly(1, {
        Monomial(Weight.fundamental(1, 1)): 1,
        Monomial(Weight.fundamental(1, 1, -1)): 1,
    })
    a = kr_qchar_sl2(2, 0)
    b = kr_qchar_sl2(1, 5)
    assert character(qchar_mul(a, b)) == character(a) * character(b)


def test_top_term_unique():
    with pytest.raises(NoUniqueTop):
        top_term(QCharacter(A1, LPoly.zero(1)))
    c = kr_qchar_sl2(2, 0)
    assert top_term(c) == Monomial(Weight.zero(1), {yvar(1, 0): 1, yvar(1, 2): 1})


def test_term_depth_counts_root_steps():
    c = kr_qchar_sl2(3, -3)
    top = top_term(c)
    depths = sorted(term_depth(A1, top, m) for m in c.poly.terms)
    assert depths == [0, 1, 2, 3]


def test_truncate_leR():
    c = kr_qchar_sl2(3, -3)
    assert truncate_leR(c, 100).poly == c.poly
    r = 5
    c2 = kr_qchar_sl2(1, r - 1)
    kept = truncate_leR(c2, r + 1)
    assert kept.poly == c2.poly  # both terms kept
    only_top = truncate_leR(c2, r - 5)
    assert only_top.poly == LPoly.from_monomial(top_term(c2))


def test_truncate_leR_intermediate():
    c = kr_qchar_sl2(3, -3)  # ladder steps at shifts 2, 0, -2
    kept = truncate_leR(c, 1)  # allows steps at shifts <= 0 only
    # Terms using the shift-2 step are filtered out; only the top survives
    # (every deeper term's certificate starts with the shift-2 step).
    assert kept.poly == LPoly.from_monomial(top_term(c))


def test_depth_compare_rules():
    a = prefund_plus_qchar_sl2(0, 3)
    b = prefund_plus_qchar_sl2(0, 5)
    with pytest.raises(DepthMismatch):
        qchar_equal(a, b)
    assert compare_at(a, b, 3)
    with pytest.raises(DepthMismatch):
        compare_at(a, b, 4)  # a is only valid to depth 3


def test_limit_stabilizes():
    rep = limit_stabilizes("KR_to_prefund_minus", 0, 6)
    assert rep.ok
    # Already at length two the ladders agree to depth one.
    ladder = normalize(kr_qchar_sl2(2, 1 - 4))
    series = normalize(prefund_minus_qchar_sl2(0, 4))
    assert compare_at(ladder, series, 1)


def test_limit_stabilizes_other_shifts():
    for s in (-2, 2):
        assert limit_stabilizes("KR_to_prefund_minus", s, 5).ok


def test_generators_have_unit_top_and_cone_shape():
    for c in (kr_qchar_sl2(3, -1), prefund_minus_qchar_sl2(2, 4)):
        top = top_term(c)
        assert c.poly.coefficient(top) == 1
        for m in c.poly.terms:
            cert = a_certificate(A1, m, top)
            assert cert is not None and all(v >= 0 for v in cert.values())


def test_to_a_form():
    c = normalize(kr_qchar_sl2(2, 0))
    a_form = to_a_form(c)
    # 1 + A^{-1}(shift 3) + A^{-1}(3) A^{-1}(1)
    assert a_form == LPoly(1, {
        Monomial(Weight.zero(1)): 1,
        Monomial(Weight.zero(1), {avar(1, 3): -1}): 1,
        Monomial(Weight.zero(1), {avar(1, 3): -1, avar(1, 1): -1}): 1,
    })


def test_qchar_mul_depth_tracking():
    a = kr_qchar_sl2(1, 0)
    b = prefund_plus_qchar_sl2(0, 4)
    prod = qchar_mul(a, b)
    assert prod.depth == 4
