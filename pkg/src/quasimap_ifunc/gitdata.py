"""GIT presentations, curve classes, twisted sectors and their combinatorics.

A target is presented by a vector space with a torus T = (C*)^rank acting
through integer weight characters, a stability character theta, and (for a
nonabelian group G with maximal torus T) root data plus Weyl generators.
Equivariant columns, when present, extend every weight by the characters of
an auxiliary torus that acts on the coefficient side only.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from . import linalg
from .errors import ValidationError, UnboundedFiberError

Frac = Fraction

WEYL_CLOSURE_CAP = 20000


@dataclass(frozen=True)
class GitPresentation:
    rank: int
    weights: tuple            # n characters, each of length rank + equivariant_rank
    theta: tuple              # stability character, length rank
    roots: tuple = ()         # all roots, length rank each
    positive_roots: tuple = ()
    weyl_generators: tuple = ()   # integer matrices acting on the character lattice
    e_weights: tuple = ()     # bundle characters cutting the complete intersection
    chi_g_basis: tuple = ()   # basis of the Weyl-invariant characters
    equivariant_rank: int = 0
    names: tuple = ()         # display names for the divisor variables

    def __post_init__(self):
        object.__setattr__(self, "weights",
                           tuple(tuple(int(x) for x in w) for w in self.weights))
        object.__setattr__(self, "theta", tuple(int(x) for x in self.theta))
        object.__setattr__(self, "roots",
                           tuple(tuple(int(x) for x in w) for w in self.roots))
        object.__setattr__(self, "positive_roots",
                           tuple(tuple(int(x) for x in w) for w in self.positive_roots))
        object.__setattr__(self, "weyl_generators",
                           tuple(tuple(tuple(int(x) for x in row) for row in m)
                                 for m in self.weyl_generators))
        object.__setattr__(self, "e_weights",
                           tuple(tuple(int(x) for x in w) for w in self.e_weights))
        object.__setattr__(self, "chi_g_basis",
                           tuple(tuple(int(x) for x in w) for w in self.chi_g_basis))
        object.__setattr__(self, "names", tuple(self.names))

    @property
    def n(self):
        return len(self.weights)

    def t_part(self, w):
        return tuple(w[: self.rank])

    def s_part(self, w):
        return tuple(w[self.rank:])

    @property
    def t_weights(self):
        return tuple(self.t_part(w) for w in self.weights)

    @property
    def is_abelian(self):
        return not self.roots


@dataclass(frozen=True)
class CurveClass:
    """A fractional curve class recorded by its values on the standard
    character basis of T."""
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values",
                           tuple(Frac(v) for v in self.values))

    def pairing(self, character):
        # equivariant columns never pair with curve classes
        return sum((v * Frac(c) for v, c in zip(self.values, character)),
                   Frac(0))

    def theta_degree(self, pres):
        return self.pairing(pres.theta)

    def order(self):
        out = 1
        for v in self.values:
            out = out * v.denominator // math.gcd(out, v.denominator)
        return out

    def is_zero(self):
        return all(v == 0 for v in self.values)

    def sort_key(self, pres):
        return (self.theta_degree(pres), self.values)


@dataclass(frozen=True)
class Sector:
    """A twisted sector: the fractional parts of a class on the weights,
    the fixed coordinate support, and the order of the group element."""
    fracs: tuple
    fixed_support: tuple
    order: int

    def __post_init__(self):
        object.__setattr__(self, "fracs", tuple(Frac(v) for v in self.fracs))
        object.__setattr__(self, "fixed_support",
                           tuple(int(i) for i in self.fixed_support))

    def is_untwisted(self):
        return all(f == 0 for f in self.fracs)


def _frac_part(x):
    return x - Frac(math.floor(x))


def sector_of(pres, beta):
    fracs = tuple(_frac_part(beta.pairing(w)) for w in pres.t_weights)
    fixed = tuple(i for i, f in enumerate(fracs) if f == 0)
    return Sector(fracs, fixed, beta.order())


def involute(pres, sector):
    fracs = tuple(Frac(0) if f == 0 else 1 - f for f in sector.fracs)
    return Sector(fracs, sector.fixed_support, sector.order)


def class_residue(beta):
    """Values of the class modulo 1; this pins down the sector group
    element itself (finer than the fracs on the weights)."""
    return tuple(_frac_part(v) for v in beta.values)


# ---------------------------------------------------------------------------
# Weyl group.

@lru_cache(maxsize=None)
def weyl_group(pres):
    """All elements of the Weyl group as integer matrices, generated by the
    given generators.  Raises if the closure does not stay small."""
    r = pres.rank
    ident = tuple(tuple(1 if j == i else 0 for j in range(r))
                  for i in range(r))
    elems = {ident}
    frontier = [ident]
    gens = list(pres.weyl_generators)
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = tuple(tuple(sum(g[i][k] * m[k][j] for k in range(r))
                                for j in range(r)) for i in range(r))
                if p not in elems:
                    elems.add(p)
                    nxt.append(p)
                    if len(elems) > WEYL_CLOSURE_CAP:
                        raise ValidationError(
                            "Weyl generator closure exceeded %d elements"
                            % WEYL_CLOSURE_CAP)
        frontier = nxt
    return tuple(sorted(elems))


@lru_cache(maxsize=None)
def _class_action_matrix(pres, w):
    """Matrix acting on class values: (w . beta) pairs with xi as beta pairs
    with w^-1 xi, i.e. the values transform by the inverse transpose."""
    inv = linalg.inverse([list(row) for row in w])
    return tuple(tuple(row) for row in linalg.transpose(inv))


def act_on_class(pres, w, beta):
    m = _class_action_matrix(pres, w)
    return CurveClass(tuple(linalg.mat_vec([list(r) for r in m],
                                           list(beta.values))))


def act_on_character(w, xi):
    r = len(w)
    head = tuple(sum(w[i][j] * xi[j] for j in range(r)) for i in range(r))
    return head + tuple(xi[r:])


def weyl_sign(w):
    d = linalg.det([list(row) for row in w])
    if d not in (1, -1):
        raise ValidationError("Weyl generator with determinant %s" % d)
    return int(d)


def weyl_orbits(pres, classes):
    """Split a Weyl-closed list of classes into orbits.

    Returns a list of (representative, orbit, stabilizer) with deterministic
    representatives (minimal sort key).  Raises when the input is not closed
    under the Weyl action.
    """
    group = weyl_group(pres)
    classes = list(classes)
    pool = set(classes)
    if len(pool) != len(classes):
        raise ValueError("duplicate classes in weyl_orbits input")
    out = []
    seen = set()
    for beta in sorted(pool, key=lambda b: b.values):
        if beta in seen:
            continue
        orbit = {}
        stab = []
        for w in group:
            img = act_on_class(pres, w, beta)
            if img not in pool:
                raise ValueError(
                    "input is not Weyl-closed: image %s missing"
                    % (img.values,))
            orbit[img] = True
            if img == beta:
                stab.append(w)
        members = sorted(orbit, key=lambda b: b.values)
        rep = members[0]
        if rep != beta:
            # restabilize for the canonical representative
            stab = [w for w in group if act_on_class(pres, w, rep) == rep]
        out.append((rep, tuple(members), tuple(stab)))
        seen.update(members)
    return out


def sector_stabilizer(pres, beta):
    """Subgroup of the Weyl group fixing the sector element of beta, i.e.
    preserving the class values modulo 1."""
    res = class_residue(beta)
    out = []
    for w in weyl_group(pres):
        img = act_on_class(pres, w, CurveClass(res))
        if tuple(_frac_part(v) for v in img.values) == res:
            out.append(w)
    return tuple(out)


# ---------------------------------------------------------------------------
# Stability combinatorics.

def unstable_supports(weights, subset, theta):
    """Inclusion-minimal index sets S inside `subset` whose removal makes
    theta leave the cone of the remaining weights."""
    subset = tuple(subset)
    found = []
    for size in range(0, len(subset) + 1):
        for s in combinations(subset, size):
            sset = set(s)
            if any(set(f) <= sset for f in found):
                continue
            remaining = [weights[i] for i in subset if i not in sset]
            if not linalg.cone_contains(remaining, theta):
                found.append(s)
    return [tuple(sorted(s)) for s in found]


def _divisors(n):
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return out


@lru_cache(maxsize=None)
def sector_orders(pres):
    """Orders of torus elements fixing some stable point.

    A support S can carry a stable point exactly when theta lies in its cone
    and its weights have full rank (finite stabilizers).  The elements acting
    trivially on such a point form the kernel of the weight map on S; their
    orders come out of the Smith normal form of that integer matrix.
    """
    tw = pres.t_weights
    theta = pres.theta
    idx = range(pres.n)
    minimal = []
    orders = {1}
    for size in range(pres.rank, pres.n + 1):
        for s in combinations(idx, size):
            if any(set(m) <= set(s) for m in minimal):
                continue
            mat = [list(tw[i]) for i in s]
            if linalg.rank(mat) < pres.rank:
                continue
            if not linalg.cone_contains([tw[i] for i in s], theta):
                continue
            minimal.append(s)
            _, d, _ = linalg.smith_normal_form(mat)
            l = 1
            for i in range(min(len(s), pres.rank)):
                di = abs(d[i][i])
                if di:
                    l = l * di // math.gcd(l, di)
            orders |= _divisors(l)
    if not minimal:
        raise ValidationError("no stable support: the quotient is empty")
    return tuple(sorted(orders))


# ---------------------------------------------------------------------------
# Validation.

def validate(pres):
    """Consistency checks.  Raises ValidationError; returns warnings."""
    warnings = []
    r = pres.rank
    q = pres.equivariant_rank
    if r < 1:
        raise ValidationError("torus rank must be at least 1")
    if not pres.weights:
        raise ValidationError("at least one weight is required")
    for i, w in enumerate(pres.weights):
        if len(w) != r + q:
            raise ValidationError(
                "weight %d has length %d, expected %d" % (i, len(w), r + q))
        if all(x == 0 for x in pres.t_part(w)):
            raise ValidationError("weight %d acts trivially on the torus" % i)
    if len(pres.theta) != r:
        raise ValidationError("theta must have length %d" % r)
    for i, w in enumerate(pres.e_weights):
        if len(w) != r + q:
            raise ValidationError(
                "bundle weight %d has length %d, expected %d"
                % (i, len(w), r + q))
    for i, w in enumerate(pres.roots):
        if len(w) != r:
            raise ValidationError("root %d has length %d, expected %d"
                                  % (i, len(w), r))
    for i, w in enumerate(pres.chi_g_basis):
        if len(w) != r:
            raise ValidationError(
                "invariant character %d has length %d, expected %d"
                % (i, len(w), r))
    if linalg.rank([list(w) for w in pres.t_weights]) < r:
        raise ValidationError("weights do not span the character space")

    roots = set(pres.roots)
    for rt in roots:
        if tuple(-x for x in rt) not in roots:
            raise ValidationError("roots are not closed under negation")
        if all(x == 0 for x in rt):
            raise ValidationError("zero root")
    pos = set(pres.positive_roots)
    if pres.roots:
        if len(pos) * 2 != len(roots):
            raise ValidationError(
                "positive_roots must pick exactly one root per opposite pair")
        for rt in pos:
            if rt not in roots:
                raise ValidationError("positive root %s is not a root"
                                      % (rt,))
            if tuple(-x for x in rt) in pos:
                raise ValidationError(
                    "positive_roots contains an opposite pair")

    group = weyl_group(pres)
    tweight_multiset = sorted(pres.t_weights)
    eweight_multiset = sorted(pres.e_weights)
    for w in group:
        weyl_sign(w)
        if sorted(act_on_character(w, xi)
                  for xi in pres.t_weights) != tweight_multiset:
            raise ValidationError(
                "a Weyl element does not permute the weights")
        if pres.e_weights:
            imgs = sorted(act_on_character(w, xi)[:r] + tuple(xi[r:])
                          for xi in pres.e_weights)
            base = sorted(tuple(xi[:r]) + tuple(xi[r:])
                          for xi in pres.e_weights)
            if imgs != base:
                raise ValidationError(
                    "a Weyl element does not permute the bundle weights")
        if roots and {act_on_character(w, rt) for rt in roots} != roots:
            raise ValidationError("a Weyl element does not permute the roots")
        if act_on_character(w, pres.theta) != tuple(pres.theta):
            raise ValidationError("theta is not Weyl-invariant")
        for chi in pres.chi_g_basis:
            if act_on_character(w, chi) != tuple(chi):
                raise ValidationError(
                    "an invariant character is moved by the Weyl group")

    if pres.chi_g_basis:
        if linalg.solve(linalg.transpose([list(c) for c in pres.chi_g_basis]),
                        list(pres.theta)) is None:
            raise ValidationError(
                "theta is not in the span of the invariant characters")

    _check_stability(pres)

    warnings.append(
        "smoothness of the cut locus and connectedness of centralizers "
        "are assumed, not checked")
    return warnings


def _check_stability(pres):
    tw = [list(w) for w in pres.t_weights]
    theta = list(pres.theta)
    if all(x == 0 for x in theta):
        raise ValidationError("theta must be nonzero")
    if not linalg.cone_contains(tw, theta):
        raise ValidationError(
            "theta lies outside the weight cone: the quotient is empty")
    if not linalg.cone_is_pointed(tw):
        raise ValidationError(
            "the weight cone contains a line: stable and semistable loci "
            "need not agree for this presentation")
    # wall check: theta may not lie in a cone spanned by < rank weights
    for size in range(1, pres.rank):
        for s in combinations(range(pres.n), size):
            if linalg.cone_contains([tw[i] for i in s], theta):
                raise ValidationError(
                    "theta lies on a GIT wall (cone of weights %s)"
                    % (list(s),))
    sector_orders(pres)  # raises when no stable support exists


# ---------------------------------------------------------------------------
# Curve class enumeration.

def _distinct_weight_patterns(pres):
    """Subsets of the distinct torus weights, as sign patterns.  Assigning
    different signs to equal weights is vacuous, so patterns quotient by
    weight value."""
    distinct = sorted(set(pres.t_weights))
    for mask in product((False, True), repeat=len(distinct)):
        pos = [wv for wv, keep in zip(distinct, mask) if keep]
        yield set(pos)


def _enumerate_scaled(pres, chi_rows, chi_rhs, degree_bound, denom_bound):
    """Integer vectors u with u/denom_bound a candidate effective class.

    chi_rows @ u = chi_rhs cuts the fiber; the degree and effectivity
    constraints bound the search.  Raises UnboundedFiberError when some
    admissible sign pattern leaves the region non-compact.
    """
    r = pres.rank
    m_bound = Frac(degree_bound) * denom_bound
    if chi_rows:
        sol = linalg.integer_solve(chi_rows, chi_rhs)
        if sol is None:
            return []
        u0, lattice = sol
        u0 = [Frac(x) for x in u0]
    else:
        u0 = [Frac(0)] * r
        lattice = [[1 if j == i else 0 for j in range(r)] for i in range(r)]
    k = len(lattice)
    theta = list(pres.theta)

    def to_s_row(row_u, const):
        # row_u . u <= const  rewritten over the lattice parameters
        base = sum((Frac(a) * b for a, b in zip(row_u, u0)), Frac(0))
        coeffs = tuple(
            sum((Frac(row_u[i]) * Frac(lattice[j][i]) for i in range(r)),
                Frac(0)) for j in range(k))
        return coeffs, Frac(const) - base

    found = {}
    for pos_weights in _distinct_weight_patterns(pres):
        if not linalg.cone_contains(sorted(pos_weights), theta):
            continue
        ineqs = []
        for wv in sorted(set(pres.t_weights)):
            if wv in pos_weights:
                ineqs.append(to_s_row([-x for x in wv], 0))
            else:
                ineqs.append(to_s_row(list(wv), -1))
        ineqs.append(to_s_row(theta, m_bound))
        ineqs.append(to_s_row([-x for x in theta], 0))
        if k == 0:
            if all(b >= 0 for _, b in ineqs):
                if all(x.denominator == 1 for x in u0):
                    found[tuple(int(x) for x in u0)] = True
            continue
        boxes = []
        feasible = True
        for j in range(k):
            b = linalg.variable_bounds(ineqs, k, j)
            if b is None:
                feasible = False
                break
            lo, hi = b
            if lo is None or hi is None:
                raise UnboundedFiberError(
                    "curve class search region is unbounded along a "
                    "zero-degree direction of the enumeration lattice")
            lo_i = math.ceil(lo)
            hi_i = math.floor(hi)
            if lo_i > hi_i:
                feasible = False
                break
            boxes.append(range(lo_i, hi_i + 1))
        if not feasible:
            continue
        for svec in product(*boxes):
            u = [u0[i] + sum(Frac(lattice[j][i]) * svec[j]
                             for j in range(k)) for i in range(r)]
            if any(x.denominator != 1 for x in u):
                continue
            ok = True
            for co, b in ineqs:
                if sum((c * s for c, s in zip(co, svec)), Frac(0)) > b:
                    ok = False
                    break
            if ok:
                found[tuple(int(x) for x in u)] = True
    return sorted(found)


def _effectivity_keep(pres, beta):
    """Exact effectivity precheck: theta must lie in the cone of the weights
    pairing to a nonnegative integer.  This matches the downstream vanishing
    of the sector fundamental class capped with the negative-line factors."""
    keep = []
    for i, w in enumerate(pres.t_weights):
        p = beta.pairing(w)
        if p >= 0 and p.denominator == 1:
            keep.append(list(w))
    return linalg.cone_contains(keep, list(pres.theta))


def enumerate_candidates(pres, degree_bound, denom_bound):
    """All candidate effective classes of theta-degree in (0, degree_bound]
    with denominators dividing denom_bound."""
    us = _enumerate_scaled(pres, [], [], degree_bound, denom_bound)
    out = []
    for u in us:
        beta = CurveClass(tuple(Frac(x, denom_bound) for x in u))
        if beta.is_zero():
            continue
        if beta.theta_degree(pres) == 0:
            continue
        if _effectivity_keep(pres, beta):
            out.append(beta)
    out.sort(key=lambda b: b.sort_key(pres))
    return out


def enumerate_fiber(pres, beta_on_g, degree_bound, denom_bound=None):
    """Classes on the abelian side restricting to the given values on the
    invariant character basis, within the degree bound."""
    if len(beta_on_g) != len(pres.chi_g_basis):
        raise ValueError("beta_on_g must give one value per invariant "
                         "character")
    if denom_bound is None:
        denom_bound = math.lcm(*sector_orders(pres))
    chi_rows = [list(c) for c in pres.chi_g_basis]
    rhs = [Frac(v) * denom_bound for v in beta_on_g]
    us = _enumerate_scaled(pres, chi_rows, rhs, degree_bound, denom_bound)
    out = []
    for u in us:
        beta = CurveClass(tuple(Frac(x, denom_bound) for x in u))
        if beta.is_zero():
            if all(Frac(v) == 0 for v in beta_on_g):
                out.append(beta)
            continue
        if beta.theta_degree(pres) == 0:
            continue
        if _effectivity_keep(pres, beta):
            out.append(beta)
    out.sort(key=lambda b: b.sort_key(pres))
    return out
