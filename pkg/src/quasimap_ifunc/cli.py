"""Command-line entry point.

Exit codes: 0 success, 2 configuration or validation problem, 3 internal
consistency failure, 4 unbounded class enumeration.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import corpus as corpus_mod
from .config import load_config
from .errors import (ConfigError, PipelineIntegrityError,
                     UnboundedFiberError)
from .ifunction import assemble, big_i_twist
from .render import render_plain, render_latex, render_json

Frac = Fraction


def _parser():
    p = argparse.ArgumentParser(
        prog="qifunc",
        description="Exact I-function series for GIT quotient targets.")
    p.add_argument("--config", metavar="PATH",
                   help="JSON job description (a path or inline JSON)")
    p.add_argument("--mode", choices=["toric", "nonabelian", "lefschetz"],
                   help="override the run mode")
    p.add_argument("--max-degree", metavar="Q",
                   help="override the degree bound (integer or p/q)")
    p.add_argument("--denominator-bound", type=int, metavar="N",
                   help="override the class denominator bound")
    p.add_argument("--convexity",
                   choices=["convex-only", "assume-transverse"],
                   help="override the bundle convexity policy")
    p.add_argument("--equivariant", action="store_true",
                   help="keep the auxiliary torus parameters")
    p.add_argument("--big-i", metavar="SPEC",
                   help="big-series block (inline JSON or a path)")
    p.add_argument("--output", choices=["plain", "latex", "json"],
                   help="override the output format")
    p.add_argument("--out", metavar="PATH",
                   help="override the output destination ('-' for stdout)")
    p.add_argument("--corpus", action="store_true",
                   help="run the built-in sanity corpus and exit")
    return p


def _load_big_i_arg(spec):
    text = spec
    if not spec.lstrip().startswith("{"):
        try:
            with open(spec, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError("cannot read big-i spec %s: %s" % (spec, exc))
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("big-i spec syntax error at line %d column %d: %s"
                          % (exc.lineno, exc.colno, exc.msg))


def _merged_config(args):
    if args.config is None:
        raise ConfigError("--config is required (except with --corpus)")
    text = args.config
    if "\n" not in text and not text.lstrip().startswith("{"):
        try:
            with open(text, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigError("cannot read config %s: %s"
                              % (args.config, exc))
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("config syntax error at line %d column %d: %s"
                          % (exc.lineno, exc.colno, exc.msg))
    if not isinstance(doc, dict):
        raise ConfigError("config must be a JSON object")
    run = dict(doc.get("run", {}))
    output = dict(doc.get("output", {}))
    if args.mode:
        run["mode"] = args.mode
    if args.max_degree is not None:
        run["max_degree"] = args.max_degree
    if args.denominator_bound is not None:
        run["denominator_bound"] = args.denominator_bound
    if args.convexity:
        run["convexity"] = args.convexity
    if args.equivariant:
        run["equivariant"] = True
    if args.big_i:
        run["big_i"] = _load_big_i_arg(args.big_i)
    if args.output:
        output["format"] = args.output
    if args.out:
        output["destination"] = args.out
    doc = dict(doc)
    if run:
        doc["run"] = run
    if output:
        doc["output"] = output
    return load_config(doc)


def run_job(cfg, stderr=sys.stderr):
    for w in cfg.warnings:
        stderr.write("warning: %s\n" % w)
    series = assemble(cfg.pres, cfg.mode, cfg.degree_bound,
                      denom_bound=cfg.denom_bound, convexity=cfg.convexity)
    if cfg.big_i is not None:
        series = big_i_twist(series, cfg.big_i["insertions"],
                             cfg.big_i["t_order"])
    render = {"plain": render_plain, "latex": render_latex,
              "json": render_json}[cfg.out_format]
    return render(series)


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        if args.corpus:
            failures = corpus_mod.run_corpus(sys.stdout.write)
            return 1 if failures else 0
        cfg = _merged_config(args)
        text = run_job(cfg)
    except ConfigError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except PipelineIntegrityError as exc:
        sys.stderr.write("internal consistency failure: %s\n" % exc)
        return 3
    except UnboundedFiberError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 4
    if cfg.destination == "-":
        sys.stdout.write(text)
    else:
        with open(cfg.destination, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
