#!/usr/bin/env python3
"""Series of the degree-5 hypersurface in P^4, both bundle conventions.

Usage: run_quintic.py [max_degree]
"""

import sys

from quasimap_ifunc import assemble, projective_space, render_plain, \
    with_bundle


def main():
    dmax = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    pres = with_bundle(projective_space(4), [(5,)])
    for convexity in ("convex-only", "assume-transverse"):
        series = assemble(pres, "lefschetz", dmax, convexity=convexity)
        print("== %s ==" % convexity)
        print(render_plain(series))


if __name__ == "__main__":
    main()
