"""Assembly of small and big I-function series.

Terms are indexed by curve classes; each carries the twisted sector it lands
in, a coefficient in that sector's ring, and a presentation tag:

* "restricted": the coefficient is the restriction of a class on the cut
  subvariety, written in the ambient sector ring.
* "pushforward": the coefficient is the pushforward of that class to the
  ambient quotient (it differs by Euler factors of the normal data).

The two presentations are never mixed inside one series.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import gitdata
from .coeffs import Coeff
from .gitdata import (CurveClass, sector_of, involute, sector_orders,
                      enumerate_candidates, weyl_group, act_on_class,
                      class_residue)
from .chowring import (build_ring, tp_add, tp_mul, tp_neg, tp_apply_matrix,
                       tp_mul_trunc, tp_truncate, antisymmetrize,
                       divide_by_delta, chern)
from .factors import (FactorSpec, c_factor, c_factor_lift, chern_lift,
                      is_i_nonnegative, euler_class, weyl_numerator_factor)
from .errors import PipelineIntegrityError

Frac = Fraction

TAG_RESTRICTED = "restricted"
TAG_PUSHFORWARD = "pushforward"


@dataclass
class SectorClass:
    """One term of the series: a curve class with its sector coefficient."""
    beta: CurveClass
    sector: object            # landing sector (the involuted one)
    coefficient: object       # RingElement
    tag: str = TAG_RESTRICTED
    on_g: tuple = None        # values on the invariant characters, if any


@dataclass
class SymbolicResidue:
    """Marker for a term the convex correspondence cannot evaluate."""
    beta: CurveClass
    sector: object
    vanishing_coordinates: tuple
    nonnegative_bundle_weights: tuple


@dataclass
class IFunctionSeries:
    pres: object
    mode: str
    degree_bound: Fraction
    denom_bound: int
    terms: list
    diagnostics: list = field(default_factory=list)
    markers: list = field(default_factory=list)

    def term_for(self, beta):
        for t in self.terms:
            if t.beta == beta:
                return t
        return None


def ring_for(pres, beta):
    sec = sector_of(pres, beta)
    return build_ring(pres, sec.fixed_support)


def toric_coefficient(pres, beta):
    """Series coefficient of one class for an abelian presentation: the
    product of the full factors of all weights, placed in the ring of the
    inverse sector."""
    ring = ring_for(pres, beta)
    out = ring.one()
    for w in pres.weights:
        out = out * c_factor(FactorSpec(beta, tuple(w)), ring)
    return SectorClass(beta, involute(pres, sector_of(pres, beta)), out,
                       TAG_RESTRICTED)


def _lefschetz_extra(pres, ring, beta, convexity):
    """Extra bundle factor of one class, or None when the convex
    correspondence does not apply.  Returns (element, tag)."""
    if convexity == "convex-only":
        if not is_i_nonnegative(pres, beta):
            return None
        out = ring.one()
        for eps in pres.e_weights:
            out = out * c_factor(FactorSpec(beta, tuple(eps), inverted=True),
                                 ring)
        return out, TAG_RESTRICTED
    if convexity == "assume-transverse":
        out = ring.one()
        nonneg = []
        for eps in pres.e_weights:
            out = out * c_factor(FactorSpec(beta, tuple(eps), variant="base",
                                            inverted=True), ring)
            p = beta.pairing(eps)
            if p >= 0 and p.denominator == 1:
                nonneg.append(tuple(eps))
        out = out * euler_class(ring, nonneg)
        return out, TAG_PUSHFORWARD
    raise ValueError("unknown convexity mode %r" % (convexity,))


def _convexity_marker(pres, beta):
    sec = sector_of(pres, beta)
    vanishing = tuple(i for i, w in enumerate(pres.t_weights)
                      if (p := beta.pairing(w)) < 0 and p.denominator == 1)
    nonneg = tuple(tuple(e) for e in pres.e_weights
                   if (p := beta.pairing(e)) >= 0 and p.denominator == 1)
    return SymbolicResidue(beta, involute(pres, sec), vanishing, nonneg)


def abelian_term(pres, beta, mode, convexity, diagnostics, markers):
    """One series term (or None) of an abelian presentation."""
    ring = ring_for(pres, beta)
    base = toric_coefficient(pres, beta)
    if mode != "lefschetz":
        return None if base.coefficient.is_zero() else base
    extra = _lefschetz_extra(pres, ring, beta, convexity)
    if extra is None:
        markers.append(_convexity_marker(pres, beta))
        diagnostics.append(
            "class %s is not I-nonnegative; term skipped in convex-only "
            "mode" % (tuple(beta.values),))
        return None
    elem, tag = extra
    coeff = base.coefficient * elem
    if coeff.is_zero():
        return None
    return SectorClass(beta, base.sector, coeff, tag)


# ---------------------------------------------------------------------------
# Nonabelian assembly.

def _residue_orbit_reps(pres, fiber):
    """Group the fiber classes by their sector group element (class values
    mod 1) and pick one representative residue per Weyl orbit."""
    group = weyl_group(pres)
    by_res = {}
    for beta in fiber:
        by_res.setdefault(class_residue(beta), []).append(beta)
    seen = set()
    out = []
    for res in sorted(by_res):
        if res in seen:
            continue
        orbit = set()
        for w in group:
            img = act_on_class(pres, w, CurveClass(res))
            orbit.add(tuple(gitdata._frac_part(v) for v in img.values))
        rep = min(orbit)
        seen |= orbit
        out.append((rep, by_res.get(rep, [])))
    return out


def _lefschetz_extra_lift(pres, beta, nv, dmax, convexity):
    """Lift version of the bundle factor; None when the convex
    correspondence does not apply to this class."""
    r = pres.rank
    if convexity == "convex-only":
        if not is_i_nonnegative(pres, beta):
            return None
        out = {(0,) * r: Coeff.one(nv)}
        for eps in pres.e_weights:
            out = tp_mul_trunc(
                out, c_factor_lift(pres, FactorSpec(beta, tuple(eps),
                                                    inverted=True),
                                   nv, dmax), dmax)
        return out, TAG_RESTRICTED
    if convexity == "assume-transverse":
        out = {(0,) * r: Coeff.one(nv)}
        for eps in pres.e_weights:
            out = tp_mul_trunc(
                out, c_factor_lift(pres, FactorSpec(beta, tuple(eps),
                                                    variant="base",
                                                    inverted=True),
                                   nv, dmax), dmax)
            p = beta.pairing(eps)
            if p >= 0 and p.denominator == 1:
                out = tp_mul_trunc(out, chern_lift(pres, nv, tuple(eps)),
                                   dmax)
        return out, TAG_PUSHFORWARD
    raise ValueError("unknown convexity mode %r" % (convexity,))


def nonabelian_terms(pres, fiber, mode, convexity, diagnostics, markers,
                     on_g=None):
    """Series terms of one fiber of classes over a class of the nonabelian
    quotient: one term per Weyl orbit of sectors met by the fiber.

    All factor products are assembled as truncated power-series lifts so the
    division by the Weyl denominator is lift-independent; the quotient is
    reduced into the sector ring at the end.
    """
    nv = 1 + pres.equivariant_rank
    r = pres.rank
    out = []
    for res, classes in _residue_orbit_reps(pres, fiber):
        if not classes:
            continue
        stab = gitdata.sector_stabilizer(pres, classes[0])
        sec = sector_of(pres, classes[0])
        ring = build_ring(pres, sec.fixed_support)
        if ring.is_zero:
            continue
        n_delta = sum(1 for rho in pres.positive_roots
                      if classes[0].pairing(rho).denominator == 1)
        dmax = ring.dim_bound + n_delta
        numerator = {}
        delta_forms = None
        tag = TAG_RESTRICTED
        for beta in sorted(classes, key=lambda b: b.values):
            base = {(0,) * r: Coeff.one(nv)}
            for w in pres.weights:
                base = tp_mul_trunc(
                    base, c_factor_lift(pres, FactorSpec(beta, tuple(w)),
                                        nv, dmax), dmax)
            if mode == "lefschetz":
                extra = _lefschetz_extra_lift(pres, beta, nv, dmax, convexity)
                if extra is None:
                    markers.append(_convexity_marker(pres, beta))
                    diagnostics.append(
                        "class %s is not I-nonnegative; term skipped in "
                        "convex-only mode" % (tuple(beta.values),))
                    continue
                lift, tag = extra
                base = tp_mul_trunc(base, lift, dmax)
            poly, dforms = weyl_numerator_factor(pres, beta, nv, dmax)
            if delta_forms is None:
                delta_forms = dforms
            elif delta_forms != dforms:
                raise PipelineIntegrityError(
                    "inconsistent integral root sets within one sector")
            numerator = tp_add(numerator, tp_mul_trunc(poly, base, dmax))
        if not numerator:
            continue
        anti = antisymmetrize(pres, numerator, stab)
        if tp_add(anti, tp_neg(numerator)):
            raise PipelineIntegrityError(
                "Weyl numerator failed the anti-invariance gate for sector "
                "residue %s" % (res,))
        quotient = divide_by_delta(numerator, delta_forms or [], nv)
        elem = ring.reduce(tp_truncate(quotient, ring.dim_bound))
        for w in stab:
            moved = ring.reduce(tp_apply_matrix(
                tp_truncate(quotient, ring.dim_bound),
                [list(row) for row in w], nv))
            if moved != elem:
                raise PipelineIntegrityError(
                    "sector coefficient is not invariant under the sector "
                    "stabilizer")
        if elem.is_zero():
            continue
        rep = min(classes, key=lambda b: b.values)
        out.append(SectorClass(rep, involute(pres, sec), elem, tag,
                               on_g=on_g))
    return out


# ---------------------------------------------------------------------------
# Series assembly.

def _unit_term(pres, mode, convexity):
    beta = CurveClass((Frac(0),) * pres.rank)
    sec = sector_of(pres, beta)
    ring = build_ring(pres, sec.fixed_support)
    if mode == "lefschetz" and convexity == "assume-transverse":
        coeff = euler_class(ring, [tuple(e) for e in pres.e_weights])
        tag = TAG_PUSHFORWARD
    else:
        coeff = ring.one()
        tag = TAG_RESTRICTED
    return SectorClass(beta, sec, coeff, tag,
                       on_g=_restriction(pres, beta))


def _restriction(pres, beta):
    if not pres.chi_g_basis:
        return None
    return tuple(beta.pairing(chi) for chi in pres.chi_g_basis)


def assemble(pres, mode, degree_bound, denom_bound=None,
             convexity="convex-only"):
    """The small I-function series up to the degree bound."""
    if mode not in ("toric", "nonabelian", "lefschetz"):
        raise ValueError("unknown mode %r" % (mode,))
    if mode == "toric" and not pres.is_abelian:
        raise ValueError("toric mode needs an abelian presentation")
    if denom_bound is None:
        denom_bound = math.lcm(*sector_orders(pres))
    diagnostics = []
    markers = []
    terms = [_unit_term(pres, mode, convexity)]
    candidates = enumerate_candidates(pres, degree_bound, denom_bound)
    if pres.is_abelian:
        for beta in candidates:
            t = abelian_term(pres, beta, mode, convexity, diagnostics,
                             markers)
            if t is not None:
                t.on_g = _restriction(pres, beta)
                terms.append(t)
    else:
        groups = {}
        for beta in candidates:
            groups.setdefault(_restriction(pres, beta), []).append(beta)
        for key in sorted(groups):
            fiber = groups[key]
            terms.extend(nonabelian_terms(pres, fiber, mode, convexity,
                                          diagnostics, markers, on_g=key))
    terms.sort(key=lambda t: t.beta.sort_key(pres))
    series = IFunctionSeries(pres, mode, Frac(degree_bound), denom_bound,
                             terms, diagnostics, markers)
    if pres.equivariant_rank == 0:
        for t in terms:
            for c in t.coefficient.coeffs.values():
                if not c.den_is_z_power():
                    raise PipelineIntegrityError(
                        "non-equivariant coefficient with a denominator "
                        "that is not a power of z")
    return series


# ---------------------------------------------------------------------------
# Big I-function.

@dataclass
class BigITerm:
    beta: CurveClass
    sector: object
    tag: str
    coeffs: dict              # multi-index over insertions -> RingElement


@dataclass
class BigISeries:
    base: IFunctionSeries
    t_order: int
    insertions: tuple
    terms: list


def _insertion_value(pres, ring, beta, insertion):
    """p(x_eta) with x_eta = c1(L_eta) + beta(eta) z, in the term's ring."""
    out = ring.zero()
    for coeff, chars in insertion:
        term = ring.const(Frac(coeff))
        for eta in chars:
            shift = beta.pairing(eta)
            x = chern(ring, tuple(eta))
            if shift != 0:
                x = x + ring.const(Coeff.z_power(ring.nv, 1, shift))
            term = term * x
        out = out + term
    return out


def _multi_indices(k, order):
    if k == 0:
        yield ()
        return
    for head in range(order + 1):
        for tail in _multi_indices(k - 1, order - head):
            yield (head,) + tail


def big_i_twist(series, insertions, t_order):
    """Multiply every term by exp(z^-1 sum_i t_i p_i(...)) truncated at the
    given total order in the formal insertion parameters t_i.

    Each insertion is a polynomial given as a list of (coefficient,
    [characters]) monomials in the classes x_eta = c1(L_eta) + beta(eta) z.
    """
    pres = series.pres
    k = len(insertions)
    out_terms = []
    for t in series.terms:
        ring = t.coefficient.ring
        vals = [_insertion_value(pres, ring, t.beta, ins)
                for ins in insertions]
        coeffs = {}
        for m in _multi_indices(k, t_order):
            total = sum(m)
            factor = ring.one()
            denom = 1
            for vi, mi in zip(vals, m):
                for _ in range(mi):
                    factor = factor * vi
                denom *= math.factorial(mi)
            c = t.coefficient * factor
            c = c.scale(Coeff.z_power(ring.nv, -total, Frac(1, denom))
                        if total else Frac(1, denom))
            if not c.is_zero():
                coeffs[m] = c
        out_terms.append(BigITerm(t.beta, t.sector, t.tag, coeffs))
    return BigISeries(series, t_order, tuple(insertions), out_terms)
