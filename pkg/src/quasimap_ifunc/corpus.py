"""Built-in sanity corpus.

Each check recomputes a small series through the public pipeline and
compares it, coefficient by coefficient, against a value produced by the
dense oracle below.  The oracle is deliberately written against its own
representation (t-monomial, z-exponent) -> Fraction and shares no code with
the Coeff / RingElement classes; agreement is therefore meaningful.
"""

from fractions import Fraction

from .errors import ConfigError
from .gitdata import CurveClass, sector_orders
from .ifunction import assemble, big_i_twist, TAG_PUSHFORWARD
from .presets import (projective_space, weighted_projective, grassmannian,
                      with_bundle, with_equivariant_columns)
from .render import render_json, parse_json, reserialize

Frac = Fraction


class CorpusFailure(AssertionError):
    pass


# ---------------------------------------------------------------------------
# Dense oracle: dict[(t_exps, z_exp)] -> Fraction.

def dp_add(a, b):
    out = dict(a)
    for k, v in b.items():
        c = out.get(k, Frac(0)) + v
        if c == 0:
            out.pop(k, None)
        else:
            out[k] = c
    return out


def dp_scale(a, c):
    c = Frac(c)
    if c == 0:
        return {}
    return {k: v * c for k, v in a.items()}


def dp_mul(a, b, tmax):
    out = {}
    for (e1, z1), c1 in a.items():
        for (e2, z2), c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            if sum(e) > tmax:
                continue
            k = (e, z1 + z2)
            c = out.get(k, Frac(0)) + c1 * c2
            if c == 0:
                out.pop(k, None)
            else:
                out[k] = c
    return out


def dp_linform(form, zcoeff=0):
    """form . t + zcoeff * z as a dense polynomial."""
    r = len(form)
    out = {}
    for i, x in enumerate(form):
        if x:
            e = tuple(1 if j == i else 0 for j in range(r))
            out[(e, 0)] = Frac(x)
    if zcoeff:
        out[((0,) * r, 1)] = Frac(zcoeff)
    return out


def dp_inv_linform(form, zcoeff, tmax):
    """1 / (form . t + zcoeff * z) as a z-Laurent series, t-degree <= tmax."""
    if zcoeff == 0:
        raise ValueError("not a unit: no z part")
    r = len(form)
    c = Frac(zcoeff)
    nil = dp_linform(form)
    out = {((0,) * r, -1): 1 / c}
    power = {((0,) * r, 0): Frac(1)}
    for i in range(1, tmax + 1):
        power = dp_mul(power, nil, tmax)
        if not power:
            break
        out = dp_add(out, dp_scale({(e, z - i - 1): v
                                    for (e, z), v in power.items()},
                                   (-1) ** i / c ** (i + 1)))
    return out


def dp_div_tform(a, form):
    """Exact division by a linear t-form; raises on a nonzero remainder."""
    lead = None
    for i, x in enumerate(form):
        if x:
            lead = i
            break
    rem = dict(a)
    out = {}
    while rem:
        key = max(rem, key=lambda k: (k[0][lead], k[0], k[1]))
        (e, z) = key
        if e[lead] == 0:
            raise CorpusFailure("dense division left a remainder")
        q = rem[key] / Frac(form[lead])
        eq = tuple(x - 1 if i == lead else x for i, x in enumerate(e))
        out[(eq, z)] = out.get((eq, z), Frac(0)) + q
        for i, x in enumerate(form):
            if x:
                e2 = tuple(y + (1 if j == i else 0)
                           for j, y in enumerate(eq))
                c = rem.get((e2, z), Frac(0)) - q * Frac(x)
                if c == 0:
                    rem.pop((e2, z), None)
                else:
                    rem[(e2, z)] = c
    return out


def dp_reduce(a, tmax, caps=None):
    """Truncate by total t-degree and drop monomials hit by pure-power
    relations t_i^cap."""
    out = {}
    for (e, z), v in a.items():
        if sum(e) > tmax:
            continue
        if caps and any(x >= c for x, c in zip(e, caps)):
            continue
        out[(e, z)] = v
    return out


def element_to_dense(elem):
    """Convert a ring element with pure-z-power denominators to the dense
    oracle representation (equivariant parameters must be absent or zero)."""
    out = {}
    for e, c in elem.coeffs.items():
        zden = 0
        scalar = Frac(1)
        for form, mult in c.den:
            if any(x != 0 for x in form[1:]):
                raise CorpusFailure("denominator is not a power of z")
            zden += mult
            scalar *= Frac(form[0]) ** mult
        for exps, v in c.num.items():
            if any(exps[1:]):
                raise CorpusFailure("equivariant parameter survived")
            k = (e, exps[0] - zden)
            c2 = out.get(k, Frac(0)) + v / scalar
            if c2 == 0:
                out.pop(k, None)
            else:
                out[k] = c2
    return out


def dp_hypergeom(weights, pairings, tmax, caps=None):
    """prod over weights of the factor prod_{k} (w.t + k z)^{+-1}, with the
    k range determined by the pairing as in the series definition."""
    r = len(weights[0])
    out = {((0,) * r, 0): Frac(1)}
    for w, p in zip(weights, pairings):
        p = Frac(p)
        if p > 0:
            k = p
            while k > 0:
                out = dp_mul(out, dp_inv_linform(w, k, tmax), tmax)
                k -= 1
        else:
            k = p + 1
            while k < 0:
                out = dp_mul(out, dp_linform(w, k), tmax)
                k += 1
            if p < 0 and p.denominator == 1:
                out = dp_mul(out, dp_linform(w), tmax)
    return dp_reduce(out, tmax, caps)


# ---------------------------------------------------------------------------
# Checks.

def _expect_dense(got, want, what):
    if got != want:
        raise CorpusFailure("%s: mismatch\n  got  %r\n  want %r"
                            % (what, sorted(got.items()),
                               sorted(want.items())))


def check_projective_plane():
    pres = projective_space(2)
    series = assemble(pres, "toric", 2)
    want1 = {((0,), -3): Frac(1), ((1,), -4): Frac(-3), ((2,), -5): Frac(6)}
    want2 = {((0,), -6): Frac(1, 8), ((1,), -7): Frac(-9, 16),
             ((2,), -8): Frac(3, 2)}
    for d, want in ((1, want1), (2, want2)):
        t = series.term_for(CurveClass((Frac(d),)))
        if t is None:
            raise CorpusFailure("degree %d term missing" % d)
        _expect_dense(element_to_dense(t.coefficient), want,
                      "plane, degree %d" % d)


def check_weighted_half_sector():
    pres = weighted_projective(1, 1, 2)
    if set(sector_orders(pres)) != {1, 2}:
        raise CorpusFailure("sector orders %r, expected {1, 2}"
                            % (sector_orders(pres),))
    series = assemble(pres, "toric", Frac(3, 2))
    t = series.term_for(CurveClass((Frac(1, 2),)))
    if t is None:
        raise CorpusFailure("class 1/2 term missing")
    if tuple(t.sector.fracs) != (Frac(1, 2), Frac(1, 2), Frac(0)):
        raise CorpusFailure("class 1/2 landed in sector %r"
                            % (t.sector.fracs,))
    _expect_dense(element_to_dense(t.coefficient), {((0,), -3): Frac(4)},
                  "weighted stack, class 1/2")
    t1 = series.term_for(CurveClass((Frac(1),)))
    want = dp_hypergeom([(1,), (1,), (2,)], [1, 1, 2], 2)
    _expect_dense(element_to_dense(t1.coefficient), want,
                  "weighted stack, class 1")


def check_quintic():
    pres = with_bundle(projective_space(4), [(5,)])
    series = assemble(pres, "lefschetz", 2)
    for d in (1, 2):
        t = series.term_for(CurveClass((Frac(d),)))
        want = dp_hypergeom([(1,)] * 5, [d] * 5, 4)
        prod = {((0,), 0): Frac(1)}
        for k in range(1, 5 * d + 1):
            prod = dp_mul(prod, dp_linform((5,), k), 4)
        want = dp_reduce(dp_mul(want, prod, 4), 4, (5,))
        _expect_dense(element_to_dense(t.coefficient), want,
                      "quintic, degree %d" % d)


def check_transverse_vs_convex():
    pres = with_bundle(projective_space(4), [(5,)])
    convex = assemble(pres, "lefschetz", 2, convexity="convex-only")
    trans = assemble(pres, "lefschetz", 2, convexity="assume-transverse")
    euler = dp_linform((5,))
    for d in (0, 1, 2):
        tc = convex.term_for(CurveClass((Frac(d),)))
        tt = trans.term_for(CurveClass((Frac(d),)))
        if tt.tag != TAG_PUSHFORWARD:
            raise CorpusFailure("transverse term has tag %r" % tt.tag)
        want = dp_reduce(dp_mul(element_to_dense(tc.coefficient), euler, 4),
                         4, (5,))
        _expect_dense(element_to_dense(tt.coefficient), want,
                      "quintic pushforward, degree %d" % d)


def check_grassmannian():
    pres = grassmannian(2, 4)
    series = assemble(pres, "nonabelian", 1)
    if len(series.terms) != 2:
        raise CorpusFailure("expected the unit and one degree-1 term, got "
                            "%d terms" % len(series.terms))
    t = series.terms[1]
    tmax = 7
    a = dp_scale(dp_mul(dp_linform((1, -1), 1),
                        dp_mul(dp_inv_linform((1, 0), 1, tmax),
                               dp_mul(dp_inv_linform((1, 0), 1, tmax),
                                      dp_mul(dp_inv_linform((1, 0), 1, tmax),
                                             dp_inv_linform((1, 0), 1, tmax),
                                             tmax), tmax), tmax), tmax), -1)
    b = dp_mul(dp_linform((-1, 1), 1),
               dp_mul(dp_inv_linform((0, 1), 1, tmax),
                      dp_mul(dp_inv_linform((0, 1), 1, tmax),
                             dp_mul(dp_inv_linform((0, 1), 1, tmax),
                                    dp_inv_linform((0, 1), 1, tmax),
                                    tmax), tmax), tmax), tmax)
    want = dp_reduce(dp_div_tform(dp_add(a, b), (1, -1)), 6, (4, 4))
    _expect_dense(element_to_dense(t.coefficient), want,
                  "grassmannian G(2,4), degree 1")


def check_equivariant_limit():
    plain = projective_space(2)
    eq = with_equivariant_columns(plain, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    s_eq = assemble(eq, "toric", 2)
    s_plain = assemble(plain, "toric", 2)
    for d in (1, 2):
        te = s_eq.term_for(CurveClass((Frac(d),)))
        tp = s_plain.term_for(CurveClass((Frac(d),)))
        got = element_to_dense(te.coefficient.specialize_szero())
        _expect_dense(got, element_to_dense(tp.coefficient),
                      "equivariant limit, degree %d" % d)


def check_big_twist():
    pres = projective_space(2)
    series = assemble(pres, "toric", 2)
    big = big_i_twist(series, [[(Frac(1), [(1,)])]], 1)
    for bt in big.terms:
        base = series.term_for(bt.beta)
        _expect_dense(element_to_dense(bt.coeffs[(0,)]),
                      element_to_dense(base.coefficient),
                      "big I, constant part, class %r" % (bt.beta.values,))
        d = bt.beta.values[0]
        x = dp_linform((1,), d)
        want = {(e, z - 1): v
                for (e, z), v in dp_mul(element_to_dense(base.coefficient),
                                        x, 2).items()}
        _expect_dense(element_to_dense(bt.coeffs.get((1,),
                                                     base.coefficient.ring
                                                     .zero())),
                      want, "big I, linear part, class %r" % (bt.beta.values,))


def check_json_roundtrip():
    pres = with_bundle(projective_space(4), [(5,)])
    series = assemble(pres, "lefschetz", 2)
    text = render_json(series)
    back = reserialize(parse_json(text))
    if back != text:
        raise CorpusFailure("JSON round trip is not byte-identical")


CHECKS = [
    ("projective-plane-degrees-1-2", check_projective_plane),
    ("weighted-stack-half-integer-sector", check_weighted_half_sector),
    ("quintic-threefold-degrees-1-2", check_quintic),
    ("quintic-pushforward-vs-restricted", check_transverse_vs_convex),
    ("grassmannian-2-4-degree-1", check_grassmannian),
    ("equivariant-parameter-limit", check_equivariant_limit),
    ("big-series-first-order-twist", check_big_twist),
    ("json-round-trip", check_json_roundtrip),
]


def run_corpus(write):
    if not CHECKS:
        raise ConfigError("the built-in corpus is empty")
    failures = 0
    for name, fn in CHECKS:
        try:
            fn()
        except Exception as exc:
            failures += 1
            write("FAIL %s: %s\n" % (name, exc))
        else:
            write("PASS %s\n" % name)
    write("%d/%d checks passed\n" % (len(CHECKS) - failures, len(CHECKS)))
    return failures
