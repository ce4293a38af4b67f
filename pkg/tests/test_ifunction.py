from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasimap_ifunc import (CurveClass, GitPresentation, assemble,
                            big_i_twist, grassmannian, projective_space,
                            weighted_projective, with_bundle,
                            TAG_PUSHFORWARD, TAG_RESTRICTED)
from quasimap_ifunc.chowring import chern
from quasimap_ifunc.corpus import (dp_hypergeom, dp_mul, dp_linform,
                                   element_to_dense)
from quasimap_ifunc.ifunction import SymbolicResidue

Frac = Fraction


@given(st.lists(st.integers(1, 3), min_size=2, max_size=5),
       st.fractions(min_value="1/2", max_value=3, max_denominator=2))
@settings(max_examples=40, deadline=None)
def test_rank_one_series_against_dense_oracle(ws, q):
    pres = GitPresentation(rank=1, weights=tuple((w,) for w in ws),
                           theta=(1,), chi_g_basis=((1,),))
    beta = CurveClass((q,))
    support = [i for i, w in enumerate(ws) if (w * q).denominator == 1]
    series = assemble(pres, "toric", q, denom_bound=q.denominator)
    term = series.term_for(beta)
    if not support:
        assert term is None
        return
    tmax = len(support) - 1
    want = dp_hypergeom([(w,) for w in ws], [w * q for w in ws], tmax)
    if not want:
        assert term is None
    else:
        assert element_to_dense(term.coefficient) == want


def test_degree_bound_gives_a_prefix():
    for pres, mode in ((projective_space(3), "toric"),
                       (weighted_projective(1, 1, 2), "toric"),
                       (grassmannian(2, 4), "nonabelian")):
        short = assemble(pres, mode, 1)
        long = assemble(pres, mode, 2)
        for t in short.terms:
            other = long.term_for(t.beta)
            assert other is not None
            assert other.coefficient == t.coefficient


def test_convex_only_skips_and_marks_negative_lines():
    pres = with_bundle(projective_space(2), [(-1,)])
    series = assemble(pres, "lefschetz", 2)
    assert series.term_for(CurveClass((Frac(1),))) is None
    assert series.term_for(CurveClass((Frac(2),))) is None
    assert len(series.markers) == 2
    m = series.markers[0]
    assert isinstance(m, SymbolicResidue)
    assert m.beta == CurveClass((Frac(1),))
    assert m.nonnegative_bundle_weights == ()
    assert any("not I-nonnegative" in d for d in series.diagnostics)


def test_transverse_unit_term_is_the_euler_class():
    pres = with_bundle(projective_space(2), [(-1,)])
    series = assemble(pres, "lefschetz", 1, convexity="assume-transverse")
    unit = series.term_for(CurveClass((Frac(0),)))
    assert unit.tag == TAG_PUSHFORWARD
    ring = unit.coefficient.ring
    assert unit.coefficient == chern(ring, (-1,))
    # with the Euler prefactor the d = 1 term now exists
    assert series.term_for(CurveClass((Frac(1),))) is not None


def test_unit_term_is_one_otherwise():
    series = assemble(projective_space(2), "toric", 1)
    unit = series.term_for(CurveClass((Frac(0),)))
    assert unit.tag == TAG_RESTRICTED
    assert unit.coefficient == unit.coefficient.ring.one()
    assert unit.sector.is_untwisted()


def test_mode_checks():
    with pytest.raises(ValueError):
        assemble(projective_space(2), "no-such-mode", 1)
    with pytest.raises(ValueError):
        assemble(grassmannian(2, 4), "toric", 1)


def test_big_twist_second_order_has_factorials():
    pres = projective_space(2)
    small = assemble(pres, "toric", 1)
    big = big_i_twist(small, [[(Frac(1), [(1,)])]], 2)
    for bt in big.terms:
        base = element_to_dense(small.term_for(bt.beta).coefficient)
        d = bt.beta.values[0]
        x = dp_linform((1,), d)
        want = {(e, z - 2): v / 2
                for (e, z), v in dp_mul(dp_mul(base, x, 2), x, 2).items()}
        got = bt.coeffs.get((2,))
        assert (want == {} if got is None
                else element_to_dense(got) == want)


def test_big_twist_with_two_insertions_mixes_indices():
    pres = projective_space(2)
    small = assemble(pres, "toric", 1)
    ins = [[(Frac(1), [(1,)])], [(Frac(2), [])]]
    big = big_i_twist(small, ins, 2)
    for bt in big.terms:
        base = element_to_dense(small.term_for(bt.beta).coefficient)
        # the scalar insertion contributes 2/z per power
        want = {(e, z - 1): 2 * v for (e, z), v in base.items()}
        assert element_to_dense(bt.coeffs[(0, 1)]) == want
        d = bt.beta.values[0]
        x = dp_linform((1,), d)
        mixed = {(e, z - 2): 2 * v
                 for (e, z), v in dp_mul(base, x, 2).items()}
        got = bt.coeffs.get((1, 1))
        assert (mixed == {} if got is None
                else element_to_dense(got) == mixed)


def test_weighted_sector_bookkeeping():
    series = assemble(weighted_projective(1, 2, 4), "toric", 1)
    for t in series.terms:
        d = t.beta.values[0]
        # the landing sector inverts the acting element
        from quasimap_ifunc import sector_of, involute
        assert t.sector == involute(series.pres,
                                    sector_of(series.pres, t.beta))
