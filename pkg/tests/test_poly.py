import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsroots import ChainRingCtx, FrobeniusLift, Poly, frobenius_apply, phi_decompose
from bsroots.poly import NEG_INF, grevlex_key

from _oracles import random_poly

Z9 = ChainRingCtx(3, 1)
Z4 = ChainRingCtx(2, 1)


def F23Y():
    return Poly(Z9, 2, {(2, 0): 1, (0, 1): 3})


def test_grevlex_order():
    # x1 > x2 and degree dominates: x^2 > x*y > y^2 > x > y > 1
    chain = [(2, 0), (1, 1), (0, 2), (1, 0), (0, 1), (0, 0)]
    keys = [grevlex_key(mono) for mono in chain]
    assert keys == sorted(keys, reverse=True)
    # revlex tie-break, not lex: x1*x3 < x2^2 although lex would say otherwise
    assert grevlex_key((1, 0, 1)) < grevlex_key((0, 2, 0))


def test_leading_term_and_degree():
    f = F23Y()
    assert f.leading_term() == ((2, 0), 1)
    assert f.degree() == 2
    assert Poly.zero(Z9, 2).degree() == NEG_INF
    with pytest.raises(ValueError):
        Poly.zero(Z9, 2).leading_term()


def test_coefficients_normalized_mod_modulus():
    f = Poly(Z9, 1, {(0,): 9, (1,): 10, (2,): -1})
    assert f.terms == {(1,): 1, (2,): 8}


def test_pow_matches_repeated_multiplication():
    rng = random.Random(5)
    for _ in range(10):
        f = random_poly(rng, Z4, 2, 2, 3)
        acc = Poly.one(Z4, 2)
        for k in range(6):
            assert f**k == acc
            acc = acc * f


def test_frozen_decompose_standard():
    got = phi_decompose(F23Y(), FrobeniusLift.standard(Z9, 2), 1)
    assert {k: v.terms for k, v in got.items()} == {
        (2, 0): {(0, 0): 1},
        (0, 1): {(0, 0): 3},
    }


def test_frozen_decompose_x5_level2():
    x = Poly.variable(Z4, 1, 0)
    got = phi_decompose(x**5, FrobeniusLift.standard(Z4, 1), 2)
    assert {k: v.terms for k, v in got.items()} == {(1,): {(1,): 1}}


def _lift_f2():
    x = Poly.variable(Z4, 2, 0)
    y = Poly.variable(Z4, 2, 1)
    return FrobeniusLift(Z4, 2, [x * y + y * y, None])


def test_frozen_lift_images():
    f2 = _lift_f2()
    assert frobenius_apply(Poly.variable(Z4, 2, 0), f2, 1).terms == {
        (2, 0): 1,
        (1, 1): 2,
        (0, 2): 2,
    }
    assert frobenius_apply(Poly.variable(Z4, 2, 1), f2, 1).terms == {(0, 2): 1}


def test_frozen_decompose_under_nonstandard_lift():
    x = Poly.variable(Z4, 2, 0)
    got = phi_decompose(x * x, _lift_f2(), 1)
    assert {k: v.terms for k, v in got.items()} == {
        (0, 0): {(1, 0): 1, (0, 1): 2},
        (1, 1): {(0, 0): 2},
    }


@pytest.mark.parametrize("e", [1, 2])
def test_decompose_resubstitution_identity(e):
    rng = random.Random(60 + e)
    lifts = [FrobeniusLift.standard(Z4, 2), _lift_f2()]
    for _ in range(15):
        f = random_poly(rng, Z4, 2, 4, 4)
        for lift in lifts:
            comps = phi_decompose(f, lift, e)
            rebuilt = Poly.zero(Z4, 2)
            for alpha, g in comps.items():
                assert not g.is_zero()
                assert all(0 <= t < Z4.p**e for t in alpha)
                rebuilt = rebuilt + frobenius_apply(g, lift, e).term_mul(alpha, 1)
            assert rebuilt == f


def test_decompose_level_zero():
    f = F23Y()
    assert phi_decompose(f, FrobeniusLift.standard(Z9, 2), 0) == {(0, 0): f}
    assert phi_decompose(Poly.zero(Z9, 2), FrobeniusLift.standard(Z9, 2), 1) == {}


def test_frobenius_is_ring_hom():
    rng = random.Random(61)
    f2 = _lift_f2()
    for _ in range(8):
        a = random_poly(rng, Z4, 2, 2, 3)
        b = random_poly(rng, Z4, 2, 2, 3)
        assert frobenius_apply(a + b, f2, 1) == frobenius_apply(a, f2, 1) + frobenius_apply(b, f2, 1)
        assert frobenius_apply(a * b, f2, 1) == frobenius_apply(a, f2, 1) * frobenius_apply(b, f2, 1)


def test_standard_frobenius_scales_exponents():
    f = F23Y()
    g = frobenius_apply(f, FrobeniusLift.standard(Z9, 2), 2)
    assert g.terms == {(18, 0): 1, (0, 9): 3}


small_coeff = st.integers(min_value=0, max_value=8)
small_mono = st.tuples(st.integers(0, 3), st.integers(0, 3))


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(small_mono, small_coeff, max_size=4),
       st.dictionaries(small_mono, small_coeff, max_size=4),
       st.dictionaries(small_mono, small_coeff, max_size=4))
def test_ring_laws(ta, tb, tc):
    a, b, c = (Poly(Z9, 2, t) for t in (ta, tb, tc))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a + Poly.zero(Z9, 2) == a
    assert a * Poly.one(Z9, 2) == a
    assert a - a == Poly.zero(Z9, 2)


def test_with_ctx_reduces():
    f = F23Y()
    z3 = ChainRingCtx(3, 0)
    assert f.with_ctx(z3).terms == {(2, 0): 1}


def test_nonzerodivisor_flag():
    assert F23Y().has_unit_coeff()
    assert not Poly(Z9, 2, {(1, 0): 3}).has_unit_coeff()
    assert not Poly.zero(Z9, 2).has_unit_coeff()
