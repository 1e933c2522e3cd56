"""Seeds, exchange mutation, Laurent checks, multigrading and the lift."""

import random

import pytest

from qac import (
    Family,
    FrozenVertex,
    LPoly,
    Monomial,
    MultiDegree,
    NotHomogeneousError,
    RationalAttachment,
    Seed,
    Vertex,
    Weight,
    build_gamma_window,
    build_ice_hminus,
    cartan_data,
    exchange_holds,
    f_hom,
    frozen_lift,
    fvar,
    hminus_seed,
    initial_seed,
    is_laurent,
    is_multihomogeneous,
    multidegree,
    mutate,
    mutate_seq,
    poly_div_exact,
    uvar,
    zvar,
)


def sl2_window(half=6):
    cd = cartan_data("A1")
    return cd, build_gamma_window(cd, Vertex(1, 0), -half, half)


def test_initial_seed_attaches_variables():
    cd, q = sl2_window()
    s = initial_seed(q, n=cd.n)
    assert s.attach[Vertex(1, 0)] == LPoly.var(1, zvar(1, 0))
    assert s.attach[Vertex(1, -6)] == LPoly.var(1, zvar(1, -6))  # frozen too
    assert s.history == ()


def test_mutate_sl2_exchange():
    cd, q = sl2_window()
    s = mutate(initial_seed(q, n=cd.n), Vertex(1, 0))
    z = lambda r: LPoly.var(1, zvar(1, r))
    assert s.attach[Vertex(1, 0)] == poly_div_exact(z(-2) + z(2), z(0))


def test_mutate_sl3_exchange():
    cd = cartan_data("A2")
    q = build_gamma_window(cd, Vertex(1, 0), -3, 3)
    s = mutate(initial_seed(q, n=cd.n), Vertex(1, 0))
    z = lambda i, r: LPoly.var(2, zvar(i, r))
    num = z(1, -2) * z(2, 1) + z(1, 2) * z(2, -1)
    assert s.attach[Vertex(1, 0)] == poly_div_exact(num, z(1, 0))


def test_mutate_twice_restores_seed():
    cd, q = sl2_window()
    base = initial_seed(q, n=cd.n)
    twice = mutate(mutate(base, Vertex(1, 0)), Vertex(1, 0))
    assert twice.attach == base.attach
    assert twice.quiver == base.quiver


def test_mutate_frozen_raises():
    cd, q = sl2_window()
    with pytest.raises(FrozenVertex):
        mutate(initial_seed(q, n=cd.n), Vertex(1, 6))


def test_mutate_seq_identity_and_involution():
    cd, q = sl2_window()
    base = initial_seed(q, n=cd.n)
    assert mutate_seq(base, []).attach == base.attach
    k = Vertex(1, -2)
    assert mutate_seq(base, [k, k]).attach == base.attach


def test_exchange_holds_reverification():
    cd, q = sl2_window()
    base = initial_seed(q, n=cd.n)
    for k in sorted(q.mutable_vertices()):
        nxt = mutate(base, k)
        assert exchange_holds(base, k, nxt)


def test_is_laurent():
    cd, q = sl2_window()
    base = initial_seed(q, n=cd.n)
    assert is_laurent(base)
    assert is_laurent(mutate(base, Vertex(1, 0)))
    attach = dict(base.attach)
    attach[Vertex(1, 0)] = RationalAttachment(
        LPoly.one(1), LPoly.var(1, zvar(1, 0)) + LPoly.one(1)
    )
    assert not is_laurent(Seed(q, attach))


def test_random_walks_stay_laurent_and_involutive():
    rng = random.Random(7)
    for kind in ("A1", "A2", "B2"):
        cd = cartan_data(kind)
        half = 4 * cd.lacing
        q = build_gamma_window(cd, Vertex(1, 0), -half, half)
        base = initial_seed(q, n=cd.n)
        mutable = sorted(q.mutable_vertices())
        for _ in range(5):
            s = base
            for _ in range(6):
                k = rng.choice(mutable)
                nxt = mutate(s, k)
                assert exchange_holds(s, k, nxt)
                back = mutate(nxt, k)
                assert back.attach == s.attach and back.quiver == s.quiver
                s = nxt
            assert is_laurent(s)


def test_multidegree_examples():
    n = 2
    z10 = LPoly.var(n, zvar(1, 0))
    assert multidegree(z10) == MultiDegree.of({1: 1})
    with pytest.raises(NotHomogeneousError):
        multidegree(z10 + LPoly.var(n, zvar(2, 1)))
    assert not is_multihomogeneous(z10 + LPoly.var(n, zvar(2, 1)))
    mixed = LPoly.from_monomial(Monomial(Weight.zero(n), {zvar(1, 0): 1, fvar(2): -3}))
    assert multidegree(mixed) == MultiDegree.of({1: 1, 2: -3})


def test_f_hom_examples():
    n = 2
    u = LPoly.var(n, uvar(1, -2))
    img = f_hom(u)
    assert img == LPoly.from_monomial(
        Monomial(Weight.zero(n), {zvar(1, -2): 1, fvar(1): -1})
    )
    assert multidegree(img).is_zero()
    # Products map to products.
    u2 = LPoly.var(n, uvar(2, -1))
    assert f_hom(u * u2) == f_hom(u) * f_hom(u2)


def test_frozen_lift_examples():
    n = 2
    u = LPoly.var(n, uvar(1, 0))
    assert frozen_lift(u) == LPoly.var(n, zvar(1, 0))
    # With no frozen content the map is the identity on the image.
    p = f_hom(LPoly.var(n, uvar(1, 0))) * LPoly.var(n, fvar(1))
    assert frozen_lift(LPoly.var(n, uvar(1, 0))) == p


def _hminus_pair(depth=5):
    """Matching iced and coefficient-free seeds over the same window."""
    cd = cartan_data("A2")
    iced_q = build_ice_hminus(cd, Vertex(1, 0), depth)
    iced = hminus_seed(iced_q, cd)
    part = {v for v in iced_q.vertices if v.shift <= 0}
    free_arrows = [(a, b) for a, b in iced_q.arrows if a in part and b in part]
    from qac import Quiver

    free_frozen = {v for v in iced_q.frozen if v in part}
    free_q = Quiver(part, free_arrows, free_frozen)
    free = initial_seed(free_q, family=Family.U, n=cd.n)
    return cd, iced, free


def test_hminus_initial_attachments():
    cd, iced, free = _hminus_pair()
    assert iced.attach[Vertex(1, 2)] == LPoly.var(cd.n, fvar(1))
    assert iced.attach[Vertex(2, 1)] == LPoly.var(cd.n, fvar(2))
    assert iced.attach[Vertex(1, 0)] == LPoly.var(cd.n, zvar(1, 0))
    assert free.attach[Vertex(1, 0)] == LPoly.var(cd.n, uvar(1, 0))


def test_iced_variables_multihomogeneous_and_lift_matches():
    """Mutated iced variables are multihomogeneous; the minimal frozen lift
    of the coefficient-free variable reproduces them exactly."""
    cd, iced, free = _hminus_pair()
    mutable = sorted(free.quiver.mutable_vertices())
    rng = random.Random(11)
    for _ in range(8):
        seq = [rng.choice(mutable) for _ in range(rng.randint(1, 6))]
        y_seed = mutate_seq(iced, seq)
        x_seed = mutate_seq(free, seq)
        for v in mutable:
            y = y_seed.attach[v]
            assert is_multihomogeneous(y)
            assert frozen_lift(x_seed.attach[v]) == y
            assert multidegree(f_hom(x_seed.attach[v])).is_zero()


def test_mutable_sets_match_between_iced_and_free():
    cd, iced, free = _hminus_pair()
    assert free.quiver.mutable_vertices() == iced.quiver.mutable_vertices() & free.quiver.vertices
