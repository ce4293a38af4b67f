#!/usr/bin/env python3
"""Series of G(k, n) through the torus quotient with Weyl division.

Usage: run_grassmannian.py [k] [n] [max_degree]
"""

import sys

from quasimap_ifunc import assemble, grassmannian, render_plain


def main():
    k = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    n = int(sys.argv[2]) if len(sys.argv) > 2 else 4
    dmax = int(sys.argv[3]) if len(sys.argv) > 3 else 2
    series = assemble(grassmannian(k, n), "nonabelian", dmax)
    print(render_plain(series))


if __name__ == "__main__":
    main()
