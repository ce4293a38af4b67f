"""Rendering of series in plain text, LaTeX and JSON."""

import json
from fractions import Fraction

from .coeffs import poly_items_sorted
from .errors import ConfigError
from .ifunction import BigISeries, IFunctionSeries

SCHEMA_VERSION = 1

Frac = Fraction


def _frac_str(x):
    x = Frac(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def _coeff_var_names(nv, latex=False):
    out = ["z"]
    for i in range(nv - 1):
        out.append("s_%d" % (i + 1) if latex else "s%d" % (i + 1))
    return out


def _fmt_poly(nv, poly, latex=False):
    if not poly:
        return "0"
    names = _coeff_var_names(nv, latex)
    parts = []
    for e, c in poly_items_sorted(poly):
        factors = []
        for name, exp in zip(names, e):
            if exp == 1:
                factors.append(name)
            elif exp > 1:
                factors.append("%s^{%d}" % (name, exp) if latex
                               else "%s^%d" % (name, exp))
        body = "*".join(factors) if not latex else " ".join(factors)
        cs = _frac_str(c)
        if body:
            if cs == "1":
                term = body
            elif cs == "-1":
                term = "-" + body
            else:
                term = ("%s %s" % (cs, body)) if latex else (
                    "%s*%s" % (cs, body))
        else:
            term = cs
        parts.append(term)
    out = parts[0]
    for p in parts[1:]:
        out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return out


def _fmt_coeff(c, latex=False):
    num = _fmt_poly(c.nv, c.num, latex)
    if not c.den:
        return num
    den_terms = []
    names = _coeff_var_names(c.nv, latex)
    for form, mult in c.den:
        body = []
        for name, x in zip(names, form):
            if x == 0:
                continue
            if x == 1:
                body.append(name)
            else:
                body.append("%s%s" % (_frac_str(x), name))
        s = " + ".join(body) if len(body) > 1 else body[0]
        if len(body) > 1 or mult > 1:
            s = "(%s)" % s
        if mult > 1:
            s += "^{%d}" % mult if latex else "^%d" % mult
        den_terms.append(s)
    if latex:
        return "\\frac{%s}{%s}" % (num, " ".join(den_terms))
    if len(c.num) > 1:
        num = "(%s)" % num
    return "%s / (%s)" % (num, "*".join(den_terms))


def _fmt_tmono(e, names, latex=False):
    factors = []
    for i, exp in enumerate(e):
        name = names[i] if i < len(names) else "t%d" % (i + 1)
        if exp == 1:
            factors.append(name)
        elif exp > 1:
            factors.append("%s^{%d}" % (name, exp) if latex
                           else "%s^%d" % (name, exp))
    if not factors:
        return "1"
    return (" ".join(factors)) if latex else "*".join(factors)


def _fmt_element(elem, names, latex=False):
    if elem.is_zero():
        return "0"
    parts = []
    for e in sorted(elem.coeffs, key=lambda m: (sum(m), m)):
        c = elem.coeffs[e]
        mono = _fmt_tmono(e, names, latex)
        cs = _fmt_coeff(c, latex)
        if mono == "1":
            parts.append(cs)
        elif cs == "1":
            parts.append(mono)
        else:
            sep = " " if latex else " * "
            parts.append("(%s)%s%s" % (cs, sep, mono))
    return "  +  ".join(parts) if not latex else " + ".join(parts)


def _novikov(beta, latex=False):
    vals = ",".join(_frac_str(v) for v in beta.values)
    return ("q^{(%s)}" % vals) if latex else "q^(%s)" % vals


def render_plain(series):
    if isinstance(series, BigISeries):
        return _render_big_plain(series)
    pres = series.pres
    names = pres.names or tuple("t%d" % (i + 1) for i in range(pres.rank))
    lines = []
    lines.append("I-function series, mode %s, degree bound %s, "
                 "denominator bound %d"
                 % (series.mode, _frac_str(series.degree_bound),
                    series.denom_bound))
    for t in series.terms:
        sec = ("untwisted" if t.sector.is_untwisted()
               else "sector (%s)" % ",".join(_frac_str(f)
                                             for f in t.sector.fracs))
        lines.append("%s [%s, %s] : %s"
                     % (_novikov(t.beta), sec, t.tag,
                        _fmt_element(t.coefficient, names)))
    for d in series.diagnostics:
        lines.append("note: %s" % d)
    return "\n".join(lines) + "\n"


def render_latex(series):
    if isinstance(series, BigISeries):
        raise ConfigError("latex output is not available for the big "
                          "I-function; use plain or json")
    pres = series.pres
    names = [n if len(n) == 1 else n for n in
             (pres.names or tuple("t_%d" % (i + 1)
                                  for i in range(pres.rank)))]
    rows = []
    for t in series.terms:
        sec = ("\\mathrm{untw}" if t.sector.is_untwisted()
               else "(%s)" % ",".join(_frac_str(f) for f in t.sector.fracs))
        rows.append("%s \\cdot \\left[ %s \\right]_{%s}"
                    % (_novikov(t.beta, latex=True),
                       _fmt_element(t.coefficient, names, latex=True), sec))
    return ("I = " + " + ".join(rows) + "\n") if rows else "I = 0\n"


def _render_big_plain(big):
    base = big.base
    pres = base.pres
    names = pres.names or tuple("t%d" % (i + 1) for i in range(pres.rank))
    lines = ["big I-function, insertion order %d" % big.t_order]
    for t in big.terms:
        for m in sorted(t.coeffs):
            tmono = "*".join("tt%d^%d" % (i + 1, e)
                             for i, e in enumerate(m) if e) or "1"
            lines.append("%s [%s] %s : %s"
                         % (_novikov(t.beta), t.tag, tmono,
                            _fmt_element(t.coeffs[m], names)))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON.

def _coeff_to_json(c):
    num = [[list(e), _frac_str(v)] for e, v in poly_items_sorted(c.num)]
    den = [[[_frac_str(x) for x in form], mult] for form, mult in c.den]
    return {"num": num, "den": den}


def _element_to_json(elem):
    out = []
    for e in sorted(elem.coeffs, key=lambda m: (sum(m), m)):
        out.append({"monomial": list(e),
                    "coeff": _coeff_to_json(elem.coeffs[e])})
    return out


def _term_to_json(pres, t):
    return {
        "class": [_frac_str(v) for v in t.beta.values],
        "on_g": (None if t.on_g is None
                 else [_frac_str(v) for v in t.on_g]),
        "theta_degree": _frac_str(t.beta.theta_degree(pres)),
        "sector": {
            "fracs": [_frac_str(f) for f in t.sector.fracs],
            "fixed_support": list(t.sector.fixed_support),
            "order": t.sector.order,
        },
        "tag": t.tag,
        "coefficient": _element_to_json(t.coefficient),
    }


def series_to_json_obj(series):
    if isinstance(series, BigISeries):
        base = series.base
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "big",
            "mode": base.mode,
            "degree_bound": _frac_str(base.degree_bound),
            "denominator_bound": base.denom_bound,
            "t_order": series.t_order,
            "terms": [
                dict(_term_to_json(base.pres,
                                   _BigAsTerm(t)),
                     insertions={
                         ",".join(map(str, m)): _element_to_json(c)
                         for m, c in sorted(t.coeffs.items())})
                for t in series.terms
            ],
            "diagnostics": list(base.diagnostics),
        }
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "small",
        "mode": series.mode,
        "degree_bound": _frac_str(series.degree_bound),
        "denominator_bound": series.denom_bound,
        "terms": [_term_to_json(series.pres, t) for t in series.terms],
        "diagnostics": list(series.diagnostics),
    }


class _BigAsTerm:
    """Adapter so a big term reuses the small-term JSON layout."""

    def __init__(self, t):
        self.beta = t.beta
        self.sector = t.sector
        self.tag = t.tag
        self.on_g = None
        self.coefficient = _EmptyElem()


class _EmptyElem:
    coeffs = {}

    def is_zero(self):
        return True


def render_json(series):
    return json.dumps(series_to_json_obj(series), indent=2, sort_keys=True) \
        + "\n"


def parse_json(text):
    """Parse a rendered series document; validates the schema version.
    Re-serializing the result reproduces the input byte for byte."""
    obj = json.loads(text)
    if not isinstance(obj, dict) or "schema_version" not in obj:
        raise ConfigError("not a series document: missing schema_version")
    if obj["schema_version"] != SCHEMA_VERSION:
        raise ConfigError("unsupported schema_version %r"
                          % (obj["schema_version"],))
    return obj


def reserialize(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
