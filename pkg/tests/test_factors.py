from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasimap_ifunc import (Coeff, CurveClass, FactorSpec,
                            NonUnitInversionError, build_ring, c_factor,
                            grassmannian, k_range, projective_space)
from quasimap_ifunc.chowring import tp_mul_trunc, tp_truncate
from quasimap_ifunc.factors import (c_factor_lift, chern_lift,
                                    is_i_nonnegative, weyl_numerator_factor)

Frac = Fraction


def test_k_range_values():
    assert k_range(3) == [1, 2, 3]
    assert k_range(0) == []
    assert k_range(-1) == []
    assert k_range(-2) == [-1]
    assert k_range(Frac(-3, 2)) == [Frac(-1, 2)]
    assert k_range(Frac(5, 2)) == [Frac(1, 2), Frac(3, 2), Frac(5, 2)]
    assert k_range(Frac(1, 2)) == [Frac(1, 2)]


def test_base_factor_at_minus_three_halves():
    ring = build_ring(projective_space(2), (0, 1, 2))
    beta = CurveClass((Frac(-3, 2),))
    got = c_factor(FactorSpec(beta, (1,), variant="base"), ring)
    want = ring.reduce({(1,): Coeff.one(1),
                        (0,): Coeff.z_power(1, 1, Frac(-1, 2))})
    assert got == want


def test_full_factor_gains_chern_at_negative_integers():
    ring = build_ring(projective_space(2), (0, 1, 2))
    beta = CurveClass((Frac(-2),))
    base = c_factor(FactorSpec(beta, (1,), variant="base"), ring)
    full = c_factor(FactorSpec(beta, (1,)), ring)
    t = ring.reduce({(1,): Coeff.one(1)})
    assert full == base * t
    with pytest.raises(NonUnitInversionError):
        c_factor(FactorSpec(beta, (1,), inverted=True), ring)


@given(st.fractions(min_value=-3, max_value=3, max_denominator=3),
       st.integers(-2, 2).filter(bool))
@settings(max_examples=60, deadline=None)
def test_lift_reduces_to_the_ring_factor(q, c):
    pres = projective_space(3)
    ring = build_ring(pres, (0, 1, 2, 3))
    beta = CurveClass((q,))
    lift = c_factor_lift(pres, FactorSpec(beta, (c,)), 1, ring.dim_bound)
    assert ring.reduce(tp_truncate(lift, ring.dim_bound)) == \
        c_factor(FactorSpec(beta, (c,)), ring)


def test_weyl_numerator_collapses_integral_pairs():
    pres = grassmannian(2, 4)
    for d1, d2 in ((1, 0), (0, 1), (2, 0), (1, 1), (2, 1)):
        beta = CurveClass((Frac(d1), Frac(d2)))
        poly, forms = weyl_numerator_factor(pres, beta, 1, 8)
        assert forms == [(Frac(1), Frac(-1))]
        d = d1 - d2
        sign = Frac((-1) ** abs(d))
        want = {(1, 0): Coeff.const(1, sign),
                (0, 1): Coeff.const(1, -sign)}
        if d:
            want[(0, 0)] = Coeff.z_power(1, 1, sign * d)
        assert poly == want


def test_weyl_numerator_fractional_pairs_are_unit_reciprocals():
    pres = grassmannian(2, 4)
    beta = CurveClass((Frac(1, 2), Frac(0)))
    poly, forms = weyl_numerator_factor(pres, beta, 1, 8)
    assert forms == []
    # multiplying back by the two non-inverted base factors returns 1
    back = poly
    for rho in ((1, -1), (-1, 1)):
        lift = c_factor_lift(pres, FactorSpec(beta, rho, variant="base"),
                             1, 8)
        back = tp_mul_trunc(back, lift, 8)
    assert back == {(0, 0): Coeff.one(1)}


def test_i_nonnegativity():
    import dataclasses
    pres = dataclasses.replace(projective_space(2), e_weights=((-1,),))
    assert is_i_nonnegative(pres, CurveClass((Frac(1, 2),)))
    assert not is_i_nonnegative(pres, CurveClass((Frac(1),)))
    assert is_i_nonnegative(pres, CurveClass((Frac(-1),)))


def test_chern_lift_equivariant_constant():
    from quasimap_ifunc import with_equivariant_columns
    pres = with_equivariant_columns(projective_space(2),
                                    [(2,), (0,), (0,)])
    lift = chern_lift(pres, 2, (1, 2))
    assert lift[(1,)] == Coeff.one(2)
    assert lift[(0,)] == Coeff.from_poly(2, {(0, 1): Frac(2)})
