from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasimap_ifunc.coeffs import (Coeff, factor_into_linforms,
                                   linform_poly, poly_divide_linform,
                                   poly_mul, poly_pow)

Frac = Fraction

fracs = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def coeffs(draw, nv=2):
    """Rational functions with small polynomial numerators and factored
    linear-form denominators."""
    nterms = draw(st.integers(0, 3))
    num = {}
    for _ in range(nterms):
        e = tuple(draw(st.integers(0, 2)) for _ in range(nv))
        c = draw(fracs)
        if c:
            num[e] = num.get(e, Frac(0)) + c
    den = []
    for _ in range(draw(st.integers(0, 2))):
        form = tuple(draw(st.fractions(min_value=-2, max_value=2,
                                       max_denominator=2))
                     for _ in range(nv))
        if any(form):
            den.append((form, draw(st.integers(1, 2))))
    c = Coeff.from_poly(nv, num)
    for form, mult in den:
        c = c * Coeff(nv, {(0,) * nv: Frac(1)},
                      ((tuple(Frac(x) for x in form), mult),))
    return c


@given(coeffs(), coeffs(), coeffs())
@settings(max_examples=80, deadline=None)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
    assert (a * Coeff.one(a.nv)) == a


@given(coeffs())
@settings(max_examples=60, deadline=None)
def test_canonical_form_saturates_common_factors(a):
    # multiplying and then adding zero must not change the representation
    assert a + Coeff.zero(a.nv) == a
    b = a * Coeff.const(a.nv, 2)
    assert b == a + a


@given(st.integers(-3, 3).filter(bool), st.integers(-2, 2))
def test_z_power_inverse(c, k):
    a = Coeff.z_power(2, k, c)
    assert a * a.inverse() == Coeff.one(2)


@given(st.tuples(fracs, fracs).filter(lambda f: any(f)),
       st.integers(1, 3), fracs.filter(bool))
def test_linform_power_inverse(form, mult, scalar):
    nv = 2
    p = poly_pow(linform_poly(nv, form), mult)
    a = Coeff.from_poly(nv, p) * Coeff.const(nv, scalar)
    assert a * a.inverse() == Coeff.one(nv)


def test_inverse_of_a_sum_of_forms_is_refused():
    # t... there is no t here: z^2 + s1^2 is not a product of linear forms
    a = Coeff.from_poly(2, {(2, 0): Frac(1), (0, 2): Frac(1)})
    with pytest.raises(ValueError):
        a.inverse()


def test_factor_into_linforms_roundtrip():
    nv = 2
    p = poly_mul(poly_pow(linform_poly(nv, (Frac(1), Frac(2))), 2),
                 {(1, 0): Frac(3)})
    scalar, forms = factor_into_linforms(nv, p)
    rebuilt = {(0, 0): Frac(scalar)}
    for form, mult in forms.items():
        rebuilt = poly_mul(rebuilt, poly_pow(linform_poly(nv, form), mult))
    assert rebuilt == p


def test_poly_divide_linform_exact_and_inexact():
    nv = 2
    form = (Frac(1), Frac(-1))
    p = poly_mul(linform_poly(nv, form), {(1, 1): Frac(2), (0, 0): Frac(1)})
    q = poly_divide_linform(p, form)
    assert q == {(1, 1): Frac(2), (0, 0): Frac(1)}
    assert poly_divide_linform({(0, 0): Frac(1)}, form) is None


def test_specialize_szero():
    a = Coeff.from_poly(2, {(1, 0): Frac(1), (0, 1): Frac(2)})
    b = a.specialize_szero()
    assert b.num == {(1, 0): Frac(1)}
    bad = Coeff(2, {(0, 0): Frac(1)}, (((Frac(0), Frac(1)), 1),))
    with pytest.raises(ValueError):
        bad.specialize_szero()


def test_denominator_is_kept_factored_and_monic():
    nv = 2
    two_z = Coeff.from_poly(nv, {(1, 0): Frac(2)})
    a = two_z.inverse()
    assert a.den == (((Frac(1), Frac(0)), 1),)
    assert a.num == {(0, 0): Frac(1, 2)}
