"""Monomial l-weights: classification, involutions, builders, dominance."""

import random
from fractions import Fraction

import pytest

from qac import (
    LWeightMono,
    Monomial,
    NotComparableWindow,
    NotNegative,
    Weight,
    a_certificate,
    a_monomial,
    bar,
    cartan_data,
    classify,
    dominance_leq,
    first_mutation_psi,
    is_negative,
    is_positive,
    kr_truncation_monomial,
    lw_equal_rational,
    lw_mul,
    lw_product,
    m_r_monomial,
    rational_form,
    tilde,
    varpi_lw,
    varpi_monomial,
    yvar,
)

A1 = cartan_data("A1")
A2 = cartan_data("A2")


def test_group_structure():
    psi = LWeightMono.psi_gen(1, 1, 0)
    assert lw_mul(psi, psi.inverse()) == LWeightMono.unit(1)
    assert lw_mul(LWeightMono.unit(1), psi) == psi


def test_sl3_first_mutation_weight_product():
    target = lw_product(
        [
            LWeightMono.y_gen(2, 1, -1),
            LWeightMono.psi_gen(2, 2, 1),
            LWeightMono.omega(Weight.fundamental(2, 1, -1)),
        ],
        2,
    )
    psi, lam = first_mutation_psi(A2, 1, 0)
    assert psi == target
    assert lam == A2.simple_root(1).scale(Fraction(1, 2))


def test_positivity_examples():
    psi = LWeightMono.psi_gen(1, 1, 2)
    assert is_positive(psi) and not is_negative(psi)
    mixed = LWeightMono(Weight.zero(1), {(1, 0): 1}, {(1, 3): -1})
    assert is_negative(mixed) and not is_positive(mixed)
    assert classify(mixed) == "negative"
    neither = LWeightMono(Weight.zero(1), {(1, 0): 1, (1, 2): -1})
    assert classify(neither) == "neither"
    assert classify(LWeightMono.unit(1)) == "both"


def test_positivity_closed_under_product():
    rng = random.Random(3)
    for _ in range(50):
        def rand_pos():
            return LWeightMono(
                Weight([rng.randint(-2, 2)]),
                {(1, rng.randint(-5, 5)): rng.randint(0, 2)},
                {(1, rng.randint(-5, 5)): rng.randint(0, 2)},
            )

        a, b = rand_pos(), rand_pos()
        assert is_positive(a) and is_positive(b)
        assert is_positive(lw_mul(a, b))


def test_bar():
    assert bar(LWeightMono.psi_gen(1, 1, 3)) == LWeightMono.psi_gen(1, 1, -3)
    psi, _ = first_mutation_psi(A2, 1, 0)
    assert bar(bar(psi)) == psi
    assert bar(psi) == lw_product(
        [
            LWeightMono.y_gen(2, 1, 1),
            LWeightMono.psi_gen(2, 2, -1),
            LWeightMono.omega(Weight.fundamental(2, 1, -1)),
        ],
        2,
    )


def test_tilde():
    y = LWeightMono.y_gen(1, 1, 0)
    t = tilde(A1, y)
    assert t.weight == Weight.fundamental(1, 1, -1)
    assert varpi_lw(A1, t).is_zero()
    assert tilde(A1, t) == t
    psi = LWeightMono.psi_gen(1, 1, 3)
    assert tilde(A1, psi) == psi
    # bar and tilde commute.
    m = lw_mul(y, psi)
    assert bar(tilde(A1, m)) == tilde(A1, bar(m))


def test_rational_form_identity():
    # Y_{1,q^r} = [w1] Psi_{1,q^{r-1}} Psi_{1,q^{r+1}}^{-1} in rank one.
    y = LWeightMono.y_gen(1, 1, 0)
    expanded = LWeightMono(Weight.fundamental(1, 1), (), {(1, -1): 1, (1, 1): -1})
    assert rational_form(A1, y) == expanded
    assert lw_equal_rational(A1, y, expanded)


def test_m_r_monomial_sl2_string():
    psi = LWeightMono.psi_gen(1, 1, 0, -1)
    for k in (1, 2, 3):
        m = m_r_monomial(A1, psi, 2 * k)
        want = Monomial(
            Weight.zero(1), {yvar(1, -1 - 2 * t): 1 for t in range(k + 1)}
        )
        assert m == want
    # Growing R extends the string monotonically.
    small = m_r_monomial(A1, psi, 2).exp_map()
    large = m_r_monomial(A1, psi, 4).exp_map()
    assert all(large.get(k, 0) >= e for k, e in small.items())


def test_m_r_monomial_pure_y_part():
    psi = LWeightMono(Weight.zero(1), {(1, 4): 2}, {})
    for R in (0, 2, 6):
        assert m_r_monomial(A1, psi, R) == Monomial(Weight.zero(1), {yvar(1, 4): 2})


def test_m_r_monomial_requires_negative():
    with pytest.raises(NotNegative):
        m_r_monomial(A1, LWeightMono.psi_gen(1, 1, 0, 1), 4)


def test_kr_truncation_monomial():
    # Unit when the shift exceeds the window height.
    assert kr_truncation_monomial(A1, 1, 5, 2) == Monomial(Weight.zero(1))
    got = kr_truncation_monomial(A1, 1, 0, 2)
    want = Monomial(Weight.zero(1), {yvar(1, -1): 1, yvar(1, -3): 1, yvar(1, -5): 1})
    assert got == want
    w = varpi_monomial(A1, got)
    assert w == Weight.fundamental(1, 1, 3)  # one omega per factor


def test_kr_truncation_b2():
    b2 = cartan_data("B2")
    # d = 2; node 2 has d_2 = 1: shifts -r-1-2k while r+2k <= 4N.
    got = kr_truncation_monomial(b2, 2, -1, 1)
    want = Monomial(
        Weight.zero(2), {yvar(2, 0): 1, yvar(2, -2): 1, yvar(2, -4): 1}
    )
    assert got == want


def test_first_mutation_sl2():
    psi, lam = first_mutation_psi(A1, 1, 0)
    assert psi == LWeightMono(Weight.fundamental(1, 1, -1), {(1, -1): 1}, {})
    assert lam == A1.simple_root(1).scale(Fraction(1, 2))
    assert varpi_lw(A1, psi).is_zero()
    assert tilde(A1, psi) == psi


def test_first_mutation_shift_dependence():
    psi, lam = first_mutation_psi(A2, 1, 4)
    assert psi.psi == (((2, 5), 1),)
    assert lam == A2.simple_root(1).scale(Fraction(1, 2)) - Weight.fundamental(
        2, 2, Fraction(4, 2)
    )


def test_dominance_reflexive():
    m = Monomial(Weight.zero(1), {yvar(1, 0): 1})
    assert dominance_leq(A1, m, m)


def test_dominance_sl2_example():
    lower = Monomial(Weight.zero(1), {yvar(1, 3): -1})
    upper = Monomial(Weight.zero(1), {yvar(1, 1): 1})
    assert dominance_leq(A1, lower, upper)
    assert not dominance_leq(A1, upper, lower)
    cert = a_certificate(A1, lower, upper)
    assert cert == {(1, 2): 1}
    assert a_monomial(A1, 1, 2).exp_map() == {yvar(1, 1): 1, yvar(1, 3): 1}


def test_dominance_parity_obstruction():
    even = Monomial(Weight.zero(1), {yvar(1, 0): 1})
    odd = Monomial(Weight.zero(1), {yvar(1, 1): 1})
    assert not dominance_leq(A1, even, odd)
    assert not dominance_leq(A1, odd, even)


def test_dominance_partial_order_on_ladder():
    """Antisymmetry and transitivity on the terms of a string ladder."""
    from qac import kr_qchar_sl2

    terms = list(kr_qchar_sl2(3, -3).poly.terms)
    for a in terms:
        for b in terms:
            ab = dominance_leq(A1, a, b)
            ba = dominance_leq(A1, b, a)
            if ab and ba:
                assert a == b
            for c in terms:
                if ab and dominance_leq(A1, b, c):
                    assert dominance_leq(A1, a, c)


def test_dominance_sl3():
    # alpha_1 + alpha_2 certificate across two nodes.
    top = Monomial(Weight.zero(2), {yvar(1, 0): 1})
    bottom = Monomial(
        Weight.zero(2),
        {yvar(1, 0): 1},
    )
    g = a_monomial(A2, 1, 1) * a_monomial(A2, 2, 2)
    lower = Monomial(Weight.zero(2), (top * g.inverse()).exps)
    assert dominance_leq(A2, lower, top)
    cert = a_certificate(A2, lower, top)
    assert cert == {(1, 1): 1, (2, 2): 1}
