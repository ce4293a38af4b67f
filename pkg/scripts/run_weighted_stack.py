#!/usr/bin/env python3
"""Twisted-sector series of a weighted projective stack.

Usage: run_weighted_stack.py [w1 w2 ...] -- defaults to P(1,1,2).
"""

import sys
from fractions import Fraction

from quasimap_ifunc import assemble, render_plain, weighted_projective


def main():
    ws = [int(a) for a in sys.argv[1:]] or [1, 1, 2]
    pres = weighted_projective(*ws)
    series = assemble(pres, "toric", Fraction(3))
    print(render_plain(series))


if __name__ == "__main__":
    main()
