"""Exact rational linear algebra and lattice utilities.

Everything here works over fractions.Fraction.  No floats anywhere: cone
membership, kernels and integer solving all have to be decided exactly
because downstream vanishing arguments depend on them.
"""

from fractions import Fraction
from itertools import combinations

Frac = Fraction


def _as_frac_rows(rows):
    return [[Frac(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    m = _as_frac_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[0])


def solve(rows, rhs):
    """One solution x of rows @ x = rhs, or None if inconsistent."""
    if not rows:
        return []
    ncols = len(rows[0])
    aug = [[Frac(v) for v in row] + [Frac(b)] for row, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    for row in red:
        if all(v == 0 for v in row[:ncols]) and row[ncols] != 0:
            return None
    x = [Frac(0)] * ncols
    for row, c in zip(red, pivots):
        if c == ncols:
            return None
        x[c] = row[ncols]
    return x


def kernel(rows, ncols=None):
    """Basis of the right kernel of the matrix."""
    if not rows:
        return [[Frac(1) if j == i else Frac(0) for j in range(ncols)]
                for i in range(ncols)]
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Frac(0)] * ncols
        v[f] = Frac(1)
        for row, c in zip(red, pivots):
            v[c] = -row[f]
        basis.append(v)
    return basis


def det(mat):
    m = _as_frac_rows(mat)
    n = len(m)
    d = Frac(1)
    for c in range(n):
        pr = None
        for i in range(c, n):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            return Frac(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return d


def inverse(mat):
    n = len(mat)
    aug = [[Frac(v) for v in row]
           + [Frac(1) if j == i else Frac(0) for j in range(n)]
           for i, row in enumerate(mat)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is not invertible")
    return [row[n:] for row in red[:n]]


def mat_mul(a, b):
    return [[sum((Frac(x) * Frac(y) for x, y in zip(row, col)), Frac(0))
             for col in zip(*b)] for row in a]


def mat_vec(a, v):
    return [sum((Frac(x) * Frac(y) for x, y in zip(row, v)), Frac(0))
            for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


# ---------------------------------------------------------------------------
# Smith normal form and integer linear systems.

def smith_normal_form(mat):
    """U @ mat @ V = D with U, V unimodular and D in Smith form.

    Returns (U, D, V) as lists of lists of ints.
    """
    a = [[int(x) for x in row] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[1 if j == i else 0 for j in range(m)] for i in range(m)]
    v = [[1 if j == i else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    while t < m and t < n:
        # move a nonzero entry of minimal absolute value into position (t, t)
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (pivot is None
                                     or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        done = False
        if a[t][t] < 0:
            add_row(t, t, -2)
        t += 1
    # Diagonal form is all we need downstream (solving and torsion orders);
    # the divisibility chain is not enforced.
    return u, a, v


def mat_int_mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)]
            for row in a]


def integer_solve(mat, rhs):
    """All integer solutions of mat @ x = rhs (integer matrix, rational rhs).

    Returns (x0, lattice) where solutions are x0 + integer combinations of
    the lattice basis vectors, or None when no integer solution exists.
    """
    if not mat:
        raise ValueError("integer_solve needs at least one equation")
    m = len(mat)
    n = len(mat[0])
    u, d, v = smith_normal_form(mat)
    ub = mat_vec(u, [Frac(x) for x in rhs])
    y = [Frac(0)] * n
    free = []
    for i in range(n):
        di = d[i][i] if i < m and i < n else 0
        bi = ub[i] if i < m else Frac(0)
        if di == 0:
            if i < m and bi != 0:
                return None
            free.append(i)
        else:
            q = bi / di
            if q.denominator != 1:
                return None
            y[i] = q
    for i in range(n, m):
        if ub[i] != 0:
            return None
    x0 = mat_vec(v, y)
    lattice = [[row[j] for row in v] for j in free]
    return x0, lattice


# ---------------------------------------------------------------------------
# Cones.

def cone_contains(generators, target):
    """Exact membership of target in the convex cone of the generators.

    By Caratheodory it is enough to look for a nonnegative combination
    supported on a linearly independent subset.
    """
    target = [Frac(x) for x in target]
    if all(x == 0 for x in target):
        return True
    gens = [[Frac(x) for x in g] for g in generators]
    gens = [g for g in gens if any(x != 0 for x in g)]
    if not gens:
        return False
    dim = len(target)
    maxsize = min(len(gens), dim)
    for size in range(1, maxsize + 1):
        for sub in combinations(range(len(gens)), size):
            cols = [gens[i] for i in sub]
            if rank(cols) < size:
                continue
            lam = solve(transpose(cols), target)
            if lam is not None and all(x >= 0 for x in lam):
                return True
    return False


def cone_is_pointed(generators):
    """True when the cone of the generators contains no line."""
    gens = [[Frac(x) for x in g] for g in generators]
    for i, g in enumerate(gens):
        if all(x == 0 for x in g):
            return False
        if cone_contains(gens, [-x for x in g]):
            return False
    return True


# ---------------------------------------------------------------------------
# Fourier-Motzkin projection for small systems.

def _normalize_ineq(coeffs, const):
    # divide through by a positive rational to get a small canonical form
    lead = None
    for c in coeffs:
        if c != 0:
            lead = abs(c)
            break
    if lead is None:
        return tuple(coeffs), const
    coeffs = tuple(c / lead for c in coeffs)
    return coeffs, const / lead


def fm_eliminate(ineqs, var):
    """Eliminate one variable from a system of (coeffs, const) rows meaning
    coeffs . x <= const."""
    zero, pos, neg = [], [], []
    for co, b in ineqs:
        c = co[var]
        if c == 0:
            zero.append((co, b))
        elif c > 0:
            pos.append((co, b))
        else:
            neg.append((co, b))
    out = set()
    for co, b in zero:
        out.add(_normalize_ineq(co, b))
    for cp, bp in pos:
        for cn, bn in neg:
            s = cp[var]
            t = -cn[var]
            co = tuple(t * a + s * b for a, b in zip(cp, cn))
            b = t * bp + s * bn
            out.add(_normalize_ineq(co, b))
    return list(out)


def variable_bounds(ineqs, nvars, var):
    """Exact [lo, hi] bounds of one variable over the polyhedron, where either
    end can be None (unbounded).  Returns None when the system is infeasible
    in an eliminated direction (detected as 0 <= negative)."""
    sys_ = [(_normalize_ineq(tuple(Frac(c) for c in co), Frac(b)))
            for co, b in ineqs]
    for other in range(nvars):
        if other == var:
            continue
        sys_ = fm_eliminate(sys_, other)
    lo, hi = None, None
    for co, b in sys_:
        c = co[var]
        if c == 0:
            if b < 0:
                return None
            continue
        if c > 0:
            bound = b / c
            hi = bound if hi is None else min(hi, bound)
        else:
            bound = b / c
            lo = bound if lo is None else max(lo, bound)
    if lo is not None and hi is not None and lo > hi:
        return None
    return lo, hi
