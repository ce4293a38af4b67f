"""Exact coefficient arithmetic.

Coefficients of curve classes live in the field of rational functions in the
formal variable z and the equivariant parameters s_1..s_q.  Denominators that
actually occur are products of linear forms k*z + a_1 s_1 + ... (k a nonzero
rational except in genuinely equivariant factors), so they are kept in
factored form.  That makes gcd reduction exact and cheap: a linear form is
irreducible, so saturating the numerator against every stored factor yields
the reduced fraction.

A polynomial is a dict {exponent tuple: Fraction}; exponent tuples have
length 1 + q with the z exponent first.
"""

from fractions import Fraction

Frac = Fraction


def poly_zero():
    return {}


def poly_const(nv, c):
    c = Frac(c)
    if c == 0:
        return {}
    return {(0,) * nv: c}


def poly_var(nv, i, c=1):
    c = Frac(c)
    if c == 0:
        return {}
    e = [0] * nv
    e[i] = 1
    return {tuple(e): c}


def poly_add(p, q):
    out = dict(p)
    for e, c in q.items():
        c2 = out.get(e, Frac(0)) + c
        if c2 == 0:
            out.pop(e, None)
        else:
            out[e] = c2
    return out


def poly_neg(p):
    return {e: -c for e, c in p.items()}


def poly_scale(p, c):
    c = Frac(c)
    if c == 0:
        return {}
    return {e: c * v for e, v in p.items()}


def poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            c = out.get(e, Frac(0)) + c1 * c2
            if c == 0:
                out.pop(e, None)
            else:
                out[e] = c
    return out


def poly_pow(p, n):
    out = None
    acc = p
    k = n
    while k:
        if k & 1:
            out = acc if out is None else poly_mul(out, acc)
        k >>= 1
        if k:
            acc = poly_mul(acc, acc)
    if out is None:
        return poly_const(_poly_nv(p), 1)
    return out


def _poly_nv(p):
    for e in p:
        return len(e)
    raise ValueError("cannot infer variable count from the zero polynomial")


def poly_is_zero(p):
    return not p


def poly_degree(p):
    return max((sum(e) for e in p), default=-1)


def linform_poly(nv, form):
    """Polynomial of the linear form given as a coefficient tuple."""
    out = {}
    for i, c in enumerate(form):
        c = Frac(c)
        if c != 0:
            e = [0] * nv
            e[i] = 1
            out[tuple(e)] = c
    return out


def poly_divide_linform(p, form):
    """Exact quotient of p by a linear form, or None when not divisible.

    Works by synthetic division in the leading variable of the form.
    """
    nv = len(form)
    lead = None
    for i, c in enumerate(form):
        if c != 0:
            lead = i
            break
    if lead is None:
        raise ZeroDivisionError("division by the zero form")
    c_lead = Frac(form[lead])
    rest = list(form)
    rest[lead] = 0
    rest_poly = linform_poly(nv, rest) if any(x != 0 for x in rest) else {}
    # view p as a polynomial in x_lead
    by_deg = {}
    for e, c in p.items():
        d = e[lead]
        by_deg.setdefault(d, {})[e[:lead] + (0,) + e[lead + 1:]] = c
    if not by_deg:
        return {}
    top = max(by_deg)
    quot_by_deg = {}
    cur = {d: dict(m) for d, m in by_deg.items()}
    for d in range(top, 0, -1):
        pd = cur.get(d, {})
        if not pd:
            continue
        qd = {e: c / c_lead for e, c in pd.items()}
        quot_by_deg[d - 1] = qd
        cur.pop(d, None)
        if rest_poly:
            # subtract qd * rest * x_lead^(d-1)
            sub = poly_mul(qd, rest_poly)
            tgt = cur.setdefault(d - 1, {})
            for e, c in sub.items():
                c2 = tgt.get(e, Frac(0)) - c
                if c2 == 0:
                    tgt.pop(e, None)
                else:
                    tgt[e] = c2
    rem = cur.get(0, {})
    if any(c != 0 for c in rem.values()):
        return None
    out = {}
    for d, qd in quot_by_deg.items():
        for e, c in qd.items():
            e2 = list(e)
            e2[lead] = d
            out[tuple(e2)] = c
    return out


def poly_subs_szero(p):
    """Set every equivariant parameter to zero."""
    out = {}
    for e, c in p.items():
        if any(x != 0 for x in e[1:]):
            continue
        out[e] = c
    return out


def poly_sort_key(e):
    return (sum(e), tuple(-x for x in e))


def poly_items_sorted(p):
    return sorted(p.items(), key=lambda kv: poly_sort_key(kv[0]))


def _normalize_form(form):
    """Monic linear form (leading coefficient 1) plus the scalar removed."""
    form = tuple(Frac(c) for c in form)
    lead = None
    for c in form:
        if c != 0:
            lead = c
            break
    if lead is None:
        raise ZeroDivisionError("zero linear form in a denominator")
    return tuple(c / lead for c in form), lead


class Coeff:
    """A rational function num / prod(form^mult) with factored denominator.

    Instances are immutable; the representation is canonical (forms monic and
    sorted, numerator saturated against every denominator factor), so
    equality is structural.
    """

    __slots__ = ("nv", "num", "den", "_hash")

    def __init__(self, nv, num, den=()):
        # den: iterable of (form tuple, multiplicity); normalized here.
        scale = Frac(1)
        clean = {}
        for form, mult in den:
            if mult == 0:
                continue
            mform, lead = _normalize_form(form)
            scale *= lead ** mult
            clean[mform] = clean.get(mform, 0) + mult
        num = {e: c / scale for e, c in num.items() if c != 0}
        # saturate: cancel any denominator form that divides the numerator
        if num:
            for form in list(clean):
                while clean.get(form, 0) > 0:
                    q = poly_divide_linform(num, form)
                    if q is None:
                        break
                    num = q
                    clean[form] -= 1
                    if clean[form] == 0:
                        del clean[form]
                    if not num:
                        break
        if not num:
            clean = {}
        self.nv = nv
        self.num = {e: c for e, c in num.items() if c != 0}
        self.den = tuple(sorted(clean.items()))
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, nv, c):
        return cls(nv, poly_const(nv, c))

    @classmethod
    def zero(cls, nv):
        return cls(nv, {})

    @classmethod
    def one(cls, nv):
        return cls(nv, poly_const(nv, 1))

    @classmethod
    def from_poly(cls, nv, p):
        return cls(nv, p)

    @classmethod
    def z_power(cls, nv, k, c=1):
        c = Frac(c)
        if c == 0:
            return cls(nv, {})
        if k >= 0:
            e = (k,) + (0,) * (nv - 1)
            return cls(nv, {e: c})
        zform = (Frac(1),) + (Frac(0),) * (nv - 1)
        return cls(nv, {(0,) * nv: c}, ((zform, -k),))

    @classmethod
    def linform(cls, form):
        nv = len(form)
        return cls(nv, linform_poly(nv, form))

    # -- predicates ---------------------------------------------------
    def is_zero(self):
        return not self.num

    def is_one(self):
        return not self.den and self.num == poly_const(self.nv, 1)

    def is_polynomial(self):
        return not self.den

    def den_is_z_power(self):
        zform = (Frac(1),) + (Frac(0),) * (self.nv - 1)
        return all(form == zform for form, _ in self.den)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        d1 = dict(self.den)
        d2 = dict(other.den)
        union = {}
        for f in set(d1) | set(d2):
            union[f] = max(d1.get(f, 0), d2.get(f, 0))
        n1 = self.num
        n2 = other.num
        for f, m in union.items():
            extra1 = m - d1.get(f, 0)
            extra2 = m - d2.get(f, 0)
            if extra1:
                n1 = poly_mul(n1, poly_pow(linform_poly(self.nv, f), extra1))
            if extra2:
                n2 = poly_mul(n2, poly_pow(linform_poly(self.nv, f), extra2))
        return Coeff(self.nv, poly_add(n1, n2), tuple(union.items()))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Coeff(self.nv, poly_neg(self.num), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        den = {}
        for f, m in self.den:
            den[f] = den.get(f, 0) + m
        for f, m in other.den:
            den[f] = den.get(f, 0) + m
        return Coeff(self.nv, poly_mul(self.num, other.num),
                     tuple(den.items()))

    def __rmul__(self, other):
        return self.__mul__(other)

    def _coerce(self, other):
        if isinstance(other, Coeff):
            if other.nv != self.nv:
                raise ValueError("mixed variable counts")
            return other
        return Coeff.const(self.nv, other)

    def inverse(self):
        """Reciprocal.  The numerator must factor into linear forms, which
        is the case for every unit this package ever inverts."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        scalar, forms = factor_into_linforms(self.nv, self.num)
        num = poly_const(self.nv, Frac(1) / scalar)
        num = poly_mul(num, _den_poly(self.nv, self.den))
        return Coeff(self.nv, num, tuple(forms.items()))

    def __eq__(self, other):
        if not isinstance(other, Coeff):
            if isinstance(other, (int, Fraction)):
                other = Coeff.const(self.nv, other)
            else:
                return NotImplemented
        return (self.nv == other.nv and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nv,
                               tuple(sorted(self.num.items())), self.den))
        return self._hash

    def __repr__(self):
        return "Coeff(%r / %r)" % (self.num, self.den)

    # -- specialization ----------------------------------------------
    def specialize_szero(self):
        """Set the equivariant parameters to zero; the denominator must stay
        nonzero, else ValueError."""
        num = poly_subs_szero(self.num)
        den = {}
        for form, mult in self.den:
            f0 = (form[0],) + (Frac(0),) * (self.nv - 1)
            if form[0] == 0:
                raise ValueError(
                    "denominator form vanishes at s = 0; the equivariant "
                    "limit does not exist for this coefficient")
            den[f0] = den.get(f0, 0) + mult
        out = Coeff(self.nv, num, tuple(den.items()))
        return out

    def den_poly(self):
        return _den_poly(self.nv, self.den)


def _den_poly(nv, den):
    out = poly_const(nv, 1)
    for form, mult in den:
        out = poly_mul(out, poly_pow(linform_poly(nv, form), mult))
    return out


def factor_into_linforms(nv, p):
    """Factor p as scalar * product of monic linear forms.

    Handles monomial content times a power of a single non-monomial linear
    form, which covers every unit the pipeline constructs.  Raises
    ValueError otherwise.
    """
    if not p:
        raise ValueError("zero polynomial")
    forms = {}
    # strip per-variable monomial content
    mins = [min(e[i] for e in p) for i in range(nv)]
    if any(mins):
        p = {tuple(a - b for a, b in zip(e, mins)): c for e, c in p.items()}
        for i, m in enumerate(mins):
            if m:
                f = tuple(Frac(1) if j == i else Frac(0) for j in range(nv))
                forms[f] = forms.get(f, 0) + m
    if len(p) == 1:
        ((e, c),) = p.items()
        if any(e):
            raise ValueError("unfactorable monomial remainder")
        return c, forms
    degs = {sum(e) for e in p}
    if len(degs) != 1:
        raise ValueError("unit numerator is not homogeneous")
    deg = degs.pop()
    # candidate linear form from the gradient at a generic point; a point on
    # the moment curve (1, k, k^2, ...) misses the zero hyperplane of any
    # nonzero linear form for all but nv - 1 values of k, so nv + 1 tries
    # always find one when p is a power of a single form
    grad = None
    for k in range(1, nv + 2):
        pt = [Frac(k) ** i for i in range(nv)]
        cand = []
        for i in range(nv):
            g = Frac(0)
            for e, c in p.items():
                if e[i] == 0:
                    continue
                term = c * e[i]
                for j in range(nv):
                    ej = e[j] - (1 if j == i else 0)
                    term *= pt[j] ** ej
                g += term
            cand.append(g)
        if any(g != 0 for g in cand):
            grad = cand
            break
    if grad is None:
        raise ValueError("cannot locate a linear factor")
    form, _ = _normalize_form(tuple(grad))
    cur = p
    count = 0
    while True:
        q = poly_divide_linform(cur, form)
        if q is None:
            break
        cur = q
        count += 1
        if len(cur) == 1 and not any(next(iter(cur))):
            break
    if count == 0:
        raise ValueError("gradient candidate does not divide")
    if not (len(cur) == 1 and not any(next(iter(cur)))):
        raise ValueError("leftover factor is not constant")
    forms[form] = forms.get(form, 0) + count
    ((_, c),) = cur.items()
    return c, forms
