"""Truncated sector rings with exact normal forms.

The ring attached to a sector is generated by the divisor variables
t_1..t_rank modulo (i) one relation per minimal unstable support inside the
sector's fixed coordinate support, namely the product of the corresponding
weight linear forms, and (ii) every monomial of degree D + 1 where
D = |fixed support| - rank.  Coefficients live in the rational function
field of coeffs.Coeff.

Normal forms are computed degree by degree with exact row reduction, which
yields a canonical rewrite of every monomial into the ring basis.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from . import linalg
from .coeffs import Coeff
from .errors import PipelineIntegrityError

Frac = Fraction


# ---------------------------------------------------------------------------
# Polynomial lifts: dict {exponent tuple over t: Coeff}.

def tp_zero():
    return {}


def tp_add(a, b):
    out = dict(a)
    for e, c in b.items():
        c2 = out.get(e)
        c2 = c if c2 is None else c2 + c
        if c2.is_zero():
            out.pop(e, None)
        else:
            out[e] = c2
    return out


def tp_neg(a):
    return {e: -c for e, c in a.items()}


def tp_scale(a, coeff):
    if isinstance(coeff, (int, Fraction)):
        if coeff == 0:
            return {}
        return {e: c * coeff for e, c in a.items()}
    if coeff.is_zero():
        return {}
    return {e: c * coeff for e, c in a.items()}


def tp_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            c = c1 * c2
            prev = out.get(e)
            c = c if prev is None else prev + c
            if c.is_zero():
                out.pop(e, None)
            else:
                out[e] = c
    return out


def tp_const(r, coeff):
    if isinstance(coeff, (int, Fraction)):
        return {}
    if coeff.is_zero():
        return {}
    return {(0,) * r: coeff}


def tp_degree(a):
    return max((sum(e) for e in a), default=-1)


def tp_truncate(a, dmax):
    return {e: c for e, c in a.items() if sum(e) <= dmax}


def tp_mul_trunc(a, b, dmax):
    out = {}
    for e1, c1 in a.items():
        d1 = sum(e1)
        if d1 > dmax:
            continue
        for e2, c2 in b.items():
            if d1 + sum(e2) > dmax:
                continue
            e = tuple(x + y for x, y in zip(e1, e2))
            c = c1 * c2
            prev = out.get(e)
            c = c if prev is None else prev + c
            if c.is_zero():
                out.pop(e, None)
            else:
                out[e] = c
    return out


def tp_linform(r, nv, form):
    """Polynomial lift of a torus-linear form."""
    out = {}
    for i, c in enumerate(form):
        if c:
            e = [0] * r
            e[i] = 1
            out[tuple(e)] = Coeff.const(nv, c)
    return out


def tp_series_inverse(unit, alpha, r, nv, dmax):
    """(unit + alpha)^-1 as a truncated series lift, for an invertible
    coefficient unit and a polynomial lift alpha with zero constant term."""
    uinv = unit.inverse()
    out = {(0,) * r: uinv}
    term = {(0,) * r: uinv}
    for _ in range(dmax):
        term = tp_scale(tp_mul_trunc(term, alpha, dmax), -uinv)
        if not term:
            break
        out = tp_add(out, term)
    return out


def tp_apply_matrix(a, mat, nv):
    """Substitute t_i -> sum_j mat[j][i] t_j (the character action on the
    divisor variables)."""
    r = len(mat)
    images = []
    for i in range(r):
        form = {}
        for j in range(r):
            if mat[j][i]:
                e = [0] * r
                e[j] = 1
                form[tuple(e)] = Coeff.const(nv, mat[j][i])
        images.append(form)
    out = {}
    for e, c in a.items():
        term = {(0,) * r: c}
        for i, exp in enumerate(e):
            for _ in range(exp):
                term = tp_mul(term, images[i])
        out = tp_add(out, term)
    return out


def tp_divide_linform(a, form, nv):
    """Exact quotient of a polynomial lift by a t-linear form with rational
    coefficients; None when the division leaves a remainder."""
    r = len(form)
    lead = None
    for i, c in enumerate(form):
        if c != 0:
            lead = i
            break
    if lead is None:
        raise ZeroDivisionError("division by the zero form")
    c_lead = Frac(form[lead])
    rest = [(i, Frac(c)) for i, c in enumerate(form) if c != 0 and i != lead]
    by_deg = {}
    for e, c in a.items():
        d = e[lead]
        key = e[:lead] + (0,) + e[lead + 1:]
        slot = by_deg.setdefault(d, {})
        slot[key] = c
    if not by_deg:
        return {}
    top = max(by_deg)
    quot = {}
    cur = {d: dict(m) for d, m in by_deg.items()}
    for d in range(top, 0, -1):
        pd = cur.get(d, {})
        if not pd:
            continue
        qd = {e: c * (Frac(1) / c_lead) for e, c in pd.items()}
        for e, c in qd.items():
            e2 = list(e)
            e2[lead] = d - 1
            quot[tuple(e2)] = c
        cur.pop(d, None)
        tgt = cur.setdefault(d - 1, {})
        for (i, ci) in rest:
            for e, c in qd.items():
                e2 = list(e)
                e2[i] += 1
                e2 = tuple(e2)
                sub = c * ci
                prev = tgt.get(e2)
                val = (-sub) if prev is None else prev - sub
                if val.is_zero():
                    tgt.pop(e2, None)
                else:
                    tgt[e2] = val
    rem = cur.get(0, {})
    if any(not c.is_zero() for c in rem.values()):
        return None
    return {e: c for e, c in quot.items() if not c.is_zero()}


def _monomials(r, d):
    out = []
    for combo in combinations_with_replacement(range(r), d):
        e = [0] * r
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    # descending lex gives a stable pivot order
    out.sort(reverse=True)
    return out


# ---------------------------------------------------------------------------
# The ring.

class SectorRing:
    """Chow ring presentation of one twisted sector component."""

    def __init__(self, pres, support):
        from .gitdata import unstable_supports

        self.pres = pres
        self.support = tuple(sorted(support))
        self.nv = 1 + pres.equivariant_rank
        r = pres.rank
        self.r = r
        self.dim_bound = len(self.support) - r
        self.relations = unstable_supports(pres.t_weights, self.support,
                                           list(pres.theta))
        self.is_zero = (self.dim_bound < 0
                        or any(len(s) == 0 for s in self.relations))
        self.basis = []
        self._rewrite = {}
        if self.is_zero:
            return
        gens = []
        for s in self.relations:
            g = {(0,) * r: Frac(1)}
            for i in s:
                form = {}
                for j, c in enumerate(pres.t_weights[i]):
                    if c:
                        e = [0] * r
                        e[j] = 1
                        form[tuple(e)] = Frac(c)
                g = _fpoly_mul(g, form)
            gens.append((len(s), g))
        for d in range(self.dim_bound + 1):
            monos = _monomials(r, d)
            index = {m: i for i, m in enumerate(monos)}
            rows = []
            for deg_g, g in gens:
                if deg_g > d:
                    continue
                for m in _monomials(r, d - deg_g):
                    row = [Frac(0)] * len(monos)
                    for e, c in g.items():
                        e2 = tuple(x + y for x, y in zip(e, m))
                        row[index[e2]] += c
                    rows.append(row)
            red, pivots = linalg.rref(rows)
            pivset = set(pivots)
            for m_i, m in enumerate(monos):
                if m_i not in pivset:
                    self.basis.append(m)
            for row, p in zip(red, pivots):
                combo = {}
                for j, c in enumerate(row):
                    if j != p and c != 0:
                        combo[monos[j]] = -c
                self._rewrite[monos[p]] = combo
        self.basis.sort(key=lambda e: (sum(e), tuple(-x for x in e)))

    def monomial_normal_form(self, mono):
        """Rewrite of one monomial into the basis, as {basis mono: Fraction}."""
        if self.is_zero or sum(mono) > self.dim_bound:
            return {}
        combo = self._rewrite.get(mono)
        if combo is None:
            return {mono: Frac(1)}
        return dict(combo)

    def reduce(self, tpoly):
        out = {}
        for e, c in tpoly.items():
            for m, f in self.monomial_normal_form(e).items():
                prev = out.get(m)
                val = c * f if prev is None else prev + c * f
                if val.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = val
        return RingElement(self, out)

    def zero(self):
        return RingElement(self, {})

    def one(self):
        if self.is_zero:
            return self.zero()
        return RingElement(self, {(0,) * self.r: Coeff.one(self.nv)})

    def const(self, coeff):
        if self.is_zero:
            return self.zero()
        if isinstance(coeff, (int, Fraction)):
            coeff = Coeff.const(self.nv, coeff)
        if coeff.is_zero():
            return self.zero()
        return RingElement(self, {(0,) * self.r: coeff})

    def __eq__(self, other):
        return (isinstance(other, SectorRing)
                and self.pres == other.pres and self.support == other.support)

    def __hash__(self):
        return hash((self.pres, self.support))


def _fpoly_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            c = out.get(e, Frac(0)) + c1 * c2
            if c == 0:
                out.pop(e, None)
            else:
                out[e] = c
    return out


@lru_cache(maxsize=None)
def build_ring(pres, support):
    return SectorRing(pres, tuple(sorted(support)))


class RingElement:
    """An element of a SectorRing in normal form."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = {e: c for e, c in coeffs.items() if not c.is_zero()}

    def lift(self):
        return dict(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        self._check(other)
        return RingElement(self.ring, tp_add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return RingElement(self.ring,
                           tp_add(self.coeffs, tp_neg(other.coeffs)))

    def __neg__(self):
        return RingElement(self.ring, tp_neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, RingElement):
            self._check(other)
            return self.ring.reduce(tp_mul(self.coeffs, other.coeffs))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, coeff):
        if isinstance(coeff, (int, Fraction)):
            coeff = Coeff.const(self.ring.nv, coeff)
        return RingElement(self.ring, tp_scale(self.coeffs, coeff))

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("elements of different sector rings")

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.support,
                     tuple(sorted(self.coeffs.items(),
                                  key=lambda kv: kv[0]))))

    def __repr__(self):
        return "RingElement(%r)" % (self.coeffs,)

    def specialize_szero(self):
        return RingElement(self.ring,
                           {e: c.specialize_szero()
                            for e, c in self.coeffs.items()})


def chern(ring, character):
    """First Chern class of the line bundle of a character, including its
    equivariant part."""
    if ring.is_zero:
        return ring.zero()
    r = ring.r
    out = {}
    for i in range(r):
        if character[i]:
            e = [0] * r
            e[i] = 1
            out[tuple(e)] = Coeff.const(ring.nv, character[i])
    spart = character[r:]
    if any(spart):
        c = Coeff.from_poly(ring.nv,
                            {tuple([0] + [1 if j == i else 0
                                          for i in range(ring.nv - 1)]):
                             Frac(x) for j, x in enumerate(spart) if x != 0})
        out[(0,) * r] = c
    return ring.reduce(out)


def invert_unit_plus_nilpotent(ring, unit, alpha):
    """Inverse of unit + alpha where unit is an invertible coefficient and
    alpha is a nilpotent ring element, by the finite geometric series."""
    if ring.is_zero:
        return ring.zero()
    if unit.is_zero():
        from .errors import NonUnitInversionError
        raise NonUnitInversionError(
            "attempted to invert a purely nilpotent element")
    # finite series: sum_{i>=0} (-1)^i unit^-(i+1) alpha^i
    uinv = unit.inverse()
    out = ring.const(uinv)
    term = ring.const(uinv)
    for _ in range(ring.dim_bound):
        term = (term * alpha).scale(-uinv)
        if term.is_zero():
            break
        out = out + term
    return out


def antisymmetrize(pres, tpoly, group):
    """(1/|group|) sum of sign(w) * (w . tpoly) over the given Weyl
    elements."""
    from .gitdata import weyl_sign

    nv = 1 + pres.equivariant_rank
    acc = {}
    for w in group:
        img = tp_apply_matrix(tpoly, [list(row) for row in w], nv)
        if weyl_sign(w) < 0:
            img = tp_neg(img)
        acc = tp_add(acc, img)
    return tp_scale(acc, Frac(1, len(group)))


def divide_by_delta(tpoly, forms, nv):
    """Successive exact division by the given t-linear forms; raises when a
    remainder appears."""
    cur = tpoly
    for form in forms:
        nxt = tp_divide_linform(cur, form, nv)
        if nxt is None:
            raise PipelineIntegrityError(
                "anti-invariant numerator is not divisible by the root form "
                "%s" % (tuple(form),))
        cur = nxt
    return cur
