"""Job configuration parsing.

Configs are JSON documents with three optional blocks: "presentation",
"run" and "output".  Unknown keys are rejected by name so that typos fail
loudly rather than silently changing a run.
"""

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import presets as presets_mod
from .errors import ConfigError
from .gitdata import GitPresentation, sector_orders, validate

Frac = Fraction

_PRESET_RE = re.compile(r"^([a-z_]+)\(([-0-9,\s]*)\)$")


@dataclass
class JobConfig:
    pres: GitPresentation
    mode: str
    degree_bound: Fraction
    denom_bound: int
    convexity: str = "convex-only"
    equivariant: bool = False
    big_i: dict = None
    out_format: str = "plain"
    destination: str = "-"
    warnings: list = field(default_factory=list)


def _frac(value, where):
    if isinstance(value, bool):
        raise ConfigError("%s: expected a rational, got a boolean" % where)
    if isinstance(value, int):
        return Frac(value)
    if isinstance(value, str):
        try:
            return Frac(value)
        except (ValueError, ZeroDivisionError):
            raise ConfigError("%s: cannot parse rational %r" % (where, value))
    raise ConfigError("%s: expected an integer or 'p/q' string, got %r"
                      % (where, value))


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError("%s: expected an integer, got %r" % (where, value))
    return value


def _check_keys(block, allowed, where):
    for key in block:
        if key not in allowed:
            raise ConfigError("%s: unknown key %r (allowed: %s)"
                              % (where, key, ", ".join(sorted(allowed))))


def _matrix(value, where, width=None):
    if not isinstance(value, list):
        raise ConfigError("%s: expected a list of rows" % where)
    out = []
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise ConfigError("%s: row %d is not a list" % (where, i))
        if width is not None and len(row) != width:
            raise ConfigError("%s: row %d has length %d, expected %d"
                              % (where, i, len(row), width))
        out.append(tuple(_int(x, "%s[%d]" % (where, i)) for x in row))
    return tuple(out)


def _build_presentation(block):
    _check_keys(block, {
        "preset", "rank", "weights", "theta", "roots", "positive_roots",
        "weyl_generators", "e_weights", "chi_g_basis", "equivariant_rank",
        "names", "equivariant_columns", "e_equivariant_columns"},
        "presentation")
    if "preset" in block:
        spec = block["preset"]
        if not isinstance(spec, str):
            raise ConfigError("presentation.preset must be a string")
        m = _PRESET_RE.match(spec.strip())
        if not m:
            raise ConfigError("cannot parse preset %r; expected "
                              "name(arg, ...)" % spec)
        name, argstr = m.groups()
        if name not in presets_mod.PRESETS:
            raise ConfigError("unknown preset %r (known: %s)"
                              % (name, ", ".join(sorted(presets_mod.PRESETS))))
        args = [int(a) for a in argstr.split(",") if a.strip()]
        pres = presets_mod.PRESETS[name](*args)
        for key in ("rank", "weights", "theta", "roots", "positive_roots",
                    "weyl_generators", "chi_g_basis", "equivariant_rank"):
            if key in block:
                raise ConfigError(
                    "presentation.%s cannot be combined with a preset" % key)
        if "e_weights" in block:
            pres = presets_mod.with_bundle(
                pres, _matrix(block["e_weights"], "presentation.e_weights",
                              pres.rank))
        if "names" in block:
            pres = _rename(pres, block["names"])
    else:
        for key in ("rank", "weights", "theta"):
            if key not in block:
                raise ConfigError("presentation.%s is required without a "
                                  "preset" % key)
        rank = _int(block["rank"], "presentation.rank")
        q = _int(block.get("equivariant_rank", 0),
                 "presentation.equivariant_rank")
        weights = _matrix(block["weights"], "presentation.weights", rank + q)
        theta = _matrix([block["theta"]], "presentation.theta", rank)[0]
        roots = _matrix(block.get("roots", []), "presentation.roots", rank)
        pos = _matrix(block.get("positive_roots", []),
                      "presentation.positive_roots", rank)
        gens = tuple(_matrix(g, "presentation.weyl_generators[%d]" % i, rank)
                     for i, g in enumerate(block.get("weyl_generators", [])))
        e_weights = _matrix(block.get("e_weights", []),
                            "presentation.e_weights", rank + q)
        chi = _matrix(block.get("chi_g_basis",
                                [] if roots else
                                [[1 if j == i else 0 for j in range(rank)]
                                 for i in range(rank)]),
                      "presentation.chi_g_basis", rank)
        pres = GitPresentation(rank=rank, weights=weights, theta=theta,
                               roots=roots, positive_roots=pos,
                               weyl_generators=gens, e_weights=e_weights,
                               chi_g_basis=chi, equivariant_rank=q,
                               names=tuple(block.get("names", ())))
    if "equivariant_columns" in block:
        pres = presets_mod.with_equivariant_columns(
            pres,
            _matrix(block["equivariant_columns"],
                    "presentation.equivariant_columns"),
            _matrix(block.get("e_equivariant_columns", []),
                    "presentation.e_equivariant_columns"))
    return pres


def _rename(pres, names):
    import dataclasses
    if not isinstance(names, list) or not all(isinstance(n, str)
                                              for n in names):
        raise ConfigError("presentation.names must be a list of strings")
    return dataclasses.replace(pres, names=tuple(names))


def _build_big_i(block):
    _check_keys(block, {"t_order", "characters", "insertions"}, "run.big_i")
    t_order = _int(block.get("t_order", 1), "run.big_i.t_order")
    if t_order < 0:
        raise ConfigError("run.big_i.t_order must be nonnegative")
    chars = block.get("characters", {})
    if not isinstance(chars, dict):
        raise ConfigError("run.big_i.characters must be an object")
    char_map = {}
    for name, vec in chars.items():
        if not isinstance(vec, list):
            raise ConfigError("run.big_i.characters.%s must be a list"
                              % name)
        char_map[name] = tuple(_int(x, "run.big_i.characters.%s" % name)
                               for x in vec)
    insertions = []
    raw = block.get("insertions", [])
    if not isinstance(raw, list):
        raise ConfigError("run.big_i.insertions must be a list")
    for i, ins in enumerate(raw):
        if not isinstance(ins, list):
            raise ConfigError("run.big_i.insertions[%d] must be a list of "
                              "monomial terms" % i)
        terms = []
        for j, term in enumerate(ins):
            where = "run.big_i.insertions[%d][%d]" % (i, j)
            if (not isinstance(term, list)) or len(term) != 2:
                raise ConfigError("%s must be [coefficient, [characters]]"
                                  % where)
            coeff = _frac(term[0], where)
            if not isinstance(term[1], list):
                raise ConfigError("%s: second entry must be a list of "
                                  "character names" % where)
            chars_used = []
            for nm in term[1]:
                if nm not in char_map:
                    raise ConfigError("%s: unknown character %r" % (where, nm))
                chars_used.append(char_map[nm])
            terms.append((coeff, chars_used))
        insertions.append(terms)
    return {"t_order": t_order, "insertions": insertions}


def load_config(source):
    """Parse a config from a path, JSON text, or an already-decoded dict."""
    if isinstance(source, dict):
        doc = source
    else:
        text = source
        if "\n" not in source and not source.lstrip().startswith("{"):
            try:
                with open(source, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise ConfigError("cannot read config %s: %s"
                                  % (source, exc))
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError("config syntax error at line %d column %d: %s"
                              % (exc.lineno, exc.colno, exc.msg))
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    _check_keys(doc, {"presentation", "run", "output"}, "config")
    if "presentation" not in doc:
        raise ConfigError("config.presentation is required")
    pres = _build_presentation(doc["presentation"])

    run = doc.get("run", {})
    _check_keys(run, {"mode", "max_degree", "denominator_bound", "convexity",
                      "equivariant", "big_i"}, "run")
    warnings = []
    mode = run.get("mode")
    if mode is None:
        if pres.e_weights:
            mode = "lefschetz"
        elif pres.roots:
            mode = "nonabelian"
        else:
            mode = "toric"
    if mode not in ("toric", "nonabelian", "lefschetz"):
        raise ConfigError("run.mode must be toric, nonabelian or lefschetz")
    if mode == "lefschetz" and not pres.e_weights:
        warnings.append("lefschetz mode with no bundle weights reduces to "
                        "the plain mode")
        mode = "nonabelian" if pres.roots else "toric"
    degree_bound = _frac(run.get("max_degree", 1), "run.max_degree")
    if degree_bound <= 0:
        raise ConfigError("run.max_degree must be positive")
    convexity = run.get("convexity", "convex-only")
    if convexity not in ("convex-only", "assume-transverse"):
        raise ConfigError("run.convexity must be convex-only or "
                          "assume-transverse")
    equivariant = bool(run.get("equivariant", False))
    if equivariant and pres.equivariant_rank == 0:
        raise ConfigError("equivariant run requested but the presentation "
                          "has no equivariant columns")
    if not equivariant and pres.equivariant_rank > 0:
        pres = presets_mod.strip_equivariant_columns(pres)
    warnings.extend(validate(pres))
    denom = run.get("denominator_bound")
    if denom is None:
        denom = math.lcm(*sector_orders(pres))
    else:
        denom = _int(denom, "run.denominator_bound")
        if denom < 1:
            raise ConfigError("run.denominator_bound must be positive")
        for o in sector_orders(pres):
            if denom % o:
                raise ConfigError(
                    "run.denominator_bound %d misses sector order %d"
                    % (denom, o))
    big_i = None
    if "big_i" in run:
        if not isinstance(run["big_i"], dict):
            raise ConfigError("run.big_i must be an object")
        big_i = _build_big_i(run["big_i"])
        for ins in big_i["insertions"]:
            for _, chars in ins:
                for vec in chars:
                    if len(vec) != pres.rank + pres.equivariant_rank:
                        raise ConfigError(
                            "big_i character length %d does not match the "
                            "presentation" % len(vec))

    output = doc.get("output", {})
    _check_keys(output, {"format", "destination"}, "output")
    fmt = output.get("format", "plain")
    if fmt not in ("plain", "latex", "json"):
        raise ConfigError("output.format must be plain, latex or json")
    dest = output.get("destination", "-")
    if not isinstance(dest, str):
        raise ConfigError("output.destination must be a string")

    return JobConfig(pres=pres, mode=mode, degree_bound=degree_bound,
                     denom_bound=denom, convexity=convexity,
                     equivariant=equivariant, big_i=big_i, out_format=fmt,
                     destination=dest, warnings=warnings)
