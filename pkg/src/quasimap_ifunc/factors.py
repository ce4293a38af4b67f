"""The modification-factor calculus.

Every coefficient of the series is a product of per-character factors.  For
a class beta and a character xi, the base factor is the product of
(c1(L_xi) + k z) over the finite arithmetic progression of k between the
pairing beta(xi) and 0 (exclusive as appropriate), congruent to the pairing
modulo 1; for positive pairing the factor is the reciprocal of that product.
The full variant additionally multiplies one bare c1(L_xi) when the pairing
is a negative integer; that extra class is never a unit, so its inversion is
refused and must be cleared through the Weyl numerator instead.
"""

from dataclasses import dataclass
from fractions import Fraction

from .coeffs import Coeff
from .chowring import (chern, invert_unit_plus_nilpotent, tp_mul,
                       tp_mul_trunc, tp_linform, tp_series_inverse, tp_add)
from .errors import NonUnitInversionError

Frac = Fraction


@dataclass(frozen=True)
class FactorSpec:
    beta: object              # CurveClass
    character: tuple          # full character, torus part first
    variant: str = "full"     # "full" (with the c1 prefactor) or "base"
    inverted: bool = False

    def __post_init__(self):
        if self.variant not in ("full", "base"):
            raise ValueError("variant must be 'full' or 'base'")


def k_range(pairing):
    """The k values of the factor product for one pairing value."""
    p = Frac(pairing)
    ks = []
    if p <= 0:
        k = p + 1
        while k < 0:
            ks.append(k)
            k += 1
    else:
        k = p
        while k > 0:
            ks.append(k)
            k -= 1
        ks.reverse()
    return ks


def _split_character(ring, character):
    """(nilpotent torus part as a ring element, equivariant part as a
    coefficient)."""
    r = ring.r
    tpart = tuple(character[:r]) + (0,) * (ring.nv - 1)
    alpha = chern(ring, tpart)
    spart = character[r:]
    sconst = Coeff.zero(ring.nv)
    for j, x in enumerate(spart):
        if x:
            e = [0] * ring.nv
            e[1 + j] = 1
            sconst = sconst + Coeff.from_poly(ring.nv, {tuple(e): Frac(x)})
    return alpha, sconst


def c_factor(spec, ring):
    """The modification factor of one (class, character) pair as an element
    of the sector ring."""
    if ring.is_zero:
        return ring.zero()
    beta = spec.beta
    xi = spec.character
    p = beta.pairing(xi)
    integral_negative = p < 0 and p.denominator == 1
    if spec.variant == "full" and integral_negative and spec.inverted:
        raise NonUnitInversionError(
            "the full factor at a negative integer pairing has a nilpotent "
            "prefactor; clear it through the Weyl numerator")
    ks = k_range(p)
    want_reciprocal = (p > 0) != spec.inverted
    alpha, sconst = _split_character(ring, xi)
    if want_reciprocal:
        out = ring.one()
        for k in ks:
            unit = Coeff.z_power(ring.nv, 1, k) + sconst
            out = out * invert_unit_plus_nilpotent(ring, unit, alpha)
    else:
        out = ring.one()
        for k in ks:
            unit = Coeff.z_power(ring.nv, 1, k) + sconst
            out = out * (alpha + ring.const(unit))
    if spec.variant == "full" and integral_negative:
        out = out * chern(ring, xi)
    return out


def is_i_nonnegative(pres, beta):
    """True when no bundle weight pairs to a negative integer."""
    for eps in pres.e_weights:
        p = beta.pairing(eps)
        if p < 0 and p.denominator == 1:
            return False
    return True


def euler_class(ring, characters):
    out = ring.one()
    for xi in characters:
        out = out * chern(ring, xi)
    return out


# ---------------------------------------------------------------------------
# Truncated series lifts.
#
# The Weyl-denominator clearing divides polynomial lifts by root forms, and
# that division is only lift-independent when the lifts are honest power
# series truncated by total degree.  The nonabelian pipeline therefore works
# with these series versions at a precision above the ring dimension and
# reduces into the sector ring only after the division.

def chern_lift(pres, nv, character):
    r = pres.rank
    out = tp_linform(r, nv, character[:r])
    spart = character[r:]
    if any(spart):
        c = Coeff.from_poly(
            nv, {tuple([0] + [1 if i == j else 0 for i in range(nv - 1)]):
                 Frac(x) for j, x in enumerate(spart) if x})
        prev = out.get((0,) * r)
        out[(0,) * r] = c if prev is None else prev + c
    return out


def _s_const(pres, nv, character):
    spart = character[pres.rank:]
    c = Coeff.zero(nv)
    for j, x in enumerate(spart):
        if x:
            e = [0] * nv
            e[1 + j] = 1
            c = c + Coeff.from_poly(nv, {tuple(e): Frac(x)})
    return c


def c_factor_lift(pres, spec, nv, dmax):
    """The modification factor as a truncated power-series lift."""
    r = pres.rank
    beta = spec.beta
    xi = spec.character
    p = beta.pairing(xi)
    integral_negative = p < 0 and p.denominator == 1
    if spec.variant == "full" and integral_negative and spec.inverted:
        raise NonUnitInversionError(
            "the full factor at a negative integer pairing has a nilpotent "
            "prefactor; clear it through the Weyl numerator")
    ks = k_range(p)
    want_reciprocal = (p > 0) != spec.inverted
    alpha = tp_linform(r, nv, xi[:r])
    sconst = _s_const(pres, nv, xi)
    out = {(0,) * r: Coeff.one(nv)}
    for k in ks:
        unit = Coeff.z_power(nv, 1, k) + sconst
        if want_reciprocal:
            fac = tp_series_inverse(unit, alpha, r, nv, dmax)
        else:
            fac = dict(alpha)
            prev = fac.get((0,) * r)
            fac[(0,) * r] = unit if prev is None else prev + unit
        out = tp_mul_trunc(out, fac, dmax)
    if spec.variant == "full" and integral_negative:
        out = tp_mul_trunc(out, chern_lift(pres, nv, xi), dmax)
    return out


def weyl_numerator_factor(pres, beta, nv, dmax):
    """Numerator form of the product of reciprocal root factors, as a
    truncated series lift.

    Returns (poly, delta_forms): delta_forms are the positive roots with
    integral pairing, and poly is prod(delta_forms) times the product over
    all roots of the reciprocal full factor.  For an opposite root pair with
    integral pairing d the combination collapses to (-1)^d (root(t) + d z);
    non-integral pairs contribute honest unit reciprocals.
    """
    r = pres.rank
    poly = {(0,) * r: Coeff.one(nv)}
    delta_forms = []
    for rho in pres.positive_roots:
        d = beta.pairing(rho)
        if d.denominator == 1:
            delta_forms.append(tuple(Frac(x) for x in rho))
            factor = tp_linform(r, nv, rho)
            if d != 0:
                factor[(0,) * r] = Coeff.z_power(nv, 1, d)
            if int(d) % 2:
                factor = {e: -c for e, c in factor.items()}
            poly = tp_mul_trunc(poly, factor, dmax)
        else:
            neg = tuple(-x for x in rho)
            for root in (rho, neg):
                spec = FactorSpec(beta, tuple(root) + (0,) * (nv - 1),
                                  variant="base", inverted=True)
                poly = tp_mul_trunc(poly,
                                    c_factor_lift(pres, spec, nv, dmax),
                                    dmax)
    return poly, delta_forms
