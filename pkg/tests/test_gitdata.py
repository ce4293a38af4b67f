import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasimap_ifunc import (CurveClass, GitPresentation, UnboundedFiberError,
                            ValidationError, enumerate_candidates,
                            enumerate_fiber, grassmannian, involute,
                            projective_space, sector_of, sector_orders,
                            validate, weighted_projective, weyl_group)
from quasimap_ifunc.gitdata import (act_on_class, class_residue,
                                    sector_stabilizer, unstable_supports,
                                    weyl_sign)
from quasimap_ifunc.linalg import cone_contains

Frac = Fraction


# -- unstable supports ------------------------------------------------------

def brute_unstable(weights, subset, theta):
    """All minimal S inside the subset with theta outside the cone of the
    remaining weights, by direct enumeration."""
    subset = list(subset)
    minimal = []
    for size in range(len(subset) + 1):
        for s in itertools.combinations(subset, size):
            rest = [list(weights[i]) for i in subset if i not in s]
            if cone_contains(rest, list(theta)):
                continue
            if any(set(m) <= set(s) for m in minimal):
                continue
            minimal.append(s)
    return sorted(tuple(sorted(s)) for s in minimal)


@given(st.integers(1, 2).flatmap(
    lambda r: st.lists(st.lists(st.integers(-2, 3), min_size=r, max_size=r),
                       min_size=2, max_size=6).map(lambda ws: (r, ws))))
@settings(max_examples=60, deadline=None)
def test_unstable_supports_match_brute_force(data):
    r, ws = data
    theta = [1] * r
    subset = tuple(range(len(ws)))
    got = sorted(tuple(sorted(s))
                 for s in unstable_supports(tuple(map(tuple, ws)), subset,
                                            theta))
    assert got == brute_unstable(ws, subset, theta)


def test_grassmannian_unstable_supports_are_the_two_blocks():
    pres = grassmannian(2, 4)
    got = sorted(tuple(sorted(s))
                 for s in unstable_supports(pres.t_weights,
                                            tuple(range(8)), [1, 1]))
    assert got == [(0, 1, 2, 3), (4, 5, 6, 7)]


# -- sectors ----------------------------------------------------------------

@given(st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_involution_is_an_involution(q):
    pres = weighted_projective(1, 1, 2)
    sec = sector_of(pres, CurveClass((q,)))
    assert involute(pres, involute(pres, sec)) == sec


@given(st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_sector_order_divides_class_order(q):
    pres = weighted_projective(1, 2, 3)
    beta = CurveClass((q,))
    sec = sector_of(pres, beta)
    assert beta.order() % sec.order == 0
    for f in sec.fracs:
        assert 0 <= f < 1


def test_sector_orders_of_presets():
    assert set(sector_orders(weighted_projective(1, 1, 2))) == {1, 2}
    assert set(sector_orders(projective_space(3))) == {1}
    # an order-6 element fixes no coordinate of C(2,3), so 6 never occurs
    assert set(sector_orders(weighted_projective(2, 3))) == {1, 2, 3}


# -- Weyl group -------------------------------------------------------------

def test_weyl_group_sizes():
    assert len(weyl_group(grassmannian(2, 4))) == 2
    assert len(weyl_group(grassmannian(3, 5))) == 6
    assert len(weyl_group(projective_space(2))) == 1


def test_weyl_action_permutes_residues():
    pres = grassmannian(2, 4)
    beta = CurveClass((Frac(1, 2), Frac(3, 2)))
    for w in weyl_group(pres):
        img = act_on_class(pres, w, beta)
        assert sorted(img.values) == sorted(beta.values)
        assert weyl_sign(w) in (1, -1)
    stab = sector_stabilizer(pres, beta)
    for w in stab:
        img = act_on_class(pres, w, beta)
        assert class_residue(img) == class_residue(beta)


# -- enumeration ------------------------------------------------------------

def test_enumerate_candidates_projective():
    pres = projective_space(2)
    got = [b.values for b in enumerate_candidates(pres, 3, 1)]
    assert sorted(got) == [(Frac(d),) for d in (1, 2, 3)]


def test_enumerate_candidates_weighted_halves():
    pres = weighted_projective(1, 1, 2)
    got = sorted(b.values[0] for b in enumerate_candidates(pres, 2, 2))
    assert got == [Frac(1, 2), Frac(1), Frac(3, 2), Frac(2)]


def test_enumerate_fiber_grassmannian():
    pres = grassmannian(2, 4)
    fiber = enumerate_fiber(pres, (Frac(1),), 1)
    assert sorted(b.values for b in fiber) == [(Frac(0), Frac(1)),
                                               (Frac(1), Frac(0))]
    fiber2 = enumerate_fiber(pres, (Frac(2),), 2)
    assert sorted(b.values for b in fiber2) == [
        (Frac(0), Frac(2)), (Frac(1), Frac(1)), (Frac(2), Frac(0))]


def test_unbounded_fiber_is_detected():
    # the direction (0, 1) has theta-degree zero and keeps the sign pattern
    # ((1,-1) strictly negative, the rest nonnegative) feasible forever
    pres = GitPresentation(rank=2,
                           weights=((1, 0), (1, 0), (1, 1), (1, -1)),
                           theta=(1, 0), chi_g_basis=((1, 0), (0, 1)))
    with pytest.raises(UnboundedFiberError):
        enumerate_candidates(pres, 2, 1)


# -- validation -------------------------------------------------------------

def test_validate_accepts_presets():
    for pres in (projective_space(3), weighted_projective(1, 1, 2),
                 grassmannian(2, 4)):
        warnings = validate(pres)
        assert any("assumed" in w for w in warnings)


def test_validate_rejects_zero_theta():
    pres = GitPresentation(rank=1, weights=((1,), (1,)), theta=(0,),
                           chi_g_basis=((1,),))
    with pytest.raises(ValidationError):
        validate(pres)


def test_validate_rejects_wall_theta():
    # theta on the boundary of the weight cone (a wall position)
    pres = GitPresentation(rank=2, weights=((1, 0), (0, 1), (1, 1)),
                           theta=(1, 0),
                           chi_g_basis=((1, 0), (0, 1)))
    with pytest.raises(ValidationError):
        validate(pres)


def test_validate_rejects_unpointed_cone():
    pres = GitPresentation(rank=1, weights=((1,), (-1,)), theta=(1,),
                           chi_g_basis=((1,),))
    with pytest.raises(ValidationError):
        validate(pres)


def test_validate_rejects_asymmetric_roots():
    pres = GitPresentation(rank=2,
                           weights=tuple((1, 0) for _ in range(3))
                           + tuple((0, 1) for _ in range(3)),
                           theta=(1, 1), roots=((1, -1),),
                           positive_roots=((1, -1),),
                           chi_g_basis=((1, 1),))
    with pytest.raises(ValidationError):
        validate(pres)
