"""Built-in GIT presentations."""

import dataclasses

from .errors import ConfigError
from .gitdata import GitPresentation


def projective_space(n):
    """P^n as the quotient of C^(n+1) by one torus factor."""
    if n < 1:
        raise ConfigError("projective_space needs n >= 1")
    return GitPresentation(
        rank=1,
        weights=tuple((1,) for _ in range(n + 1)),
        theta=(1,),
        chi_g_basis=((1,),),
        names=("H",),
    )


def weighted_projective(*ws):
    """The weighted projective stack P(w_1..w_k)."""
    if len(ws) < 2:
        raise ConfigError("weighted_projective needs at least two weights")
    if any(int(w) <= 0 for w in ws):
        raise ConfigError("weighted_projective weights must be positive")
    return GitPresentation(
        rank=1,
        weights=tuple((int(w),) for w in ws),
        theta=(1,),
        chi_g_basis=((1,),),
        names=("H",),
    )


def grassmannian(k, n):
    """G(k, n) as Hom(C^k, C^n) // GL_k, presented by the maximal torus of
    GL_k with its roots and Weyl (symmetric group) generators."""
    k, n = int(k), int(n)
    if not 1 <= k < n:
        raise ConfigError("grassmannian needs 1 <= k < n")
    unit = lambda i: tuple(1 if j == i else 0 for j in range(k))
    weights = tuple(unit(i) for i in range(k) for _ in range(n))
    roots = tuple(tuple(a - b for a, b in zip(unit(i), unit(j)))
                  for i in range(k) for j in range(k) if i != j)
    pos = tuple(tuple(a - b for a, b in zip(unit(i), unit(j)))
                for i in range(k) for j in range(k) if i < j)
    gens = []
    for i in range(k - 1):
        m = [[1 if c == r else 0 for c in range(k)] for r in range(k)]
        m[i][i] = m[i + 1][i + 1] = 0
        m[i][i + 1] = m[i + 1][i] = 1
        gens.append(tuple(tuple(row) for row in m))
    return GitPresentation(
        rank=k,
        weights=weights,
        theta=(1,) * k,
        roots=roots,
        positive_roots=pos,
        weyl_generators=tuple(gens),
        chi_g_basis=((1,) * k,),
        names=tuple("t%d" % (i + 1) for i in range(k)),
    )


def with_bundle(pres, e_weights):
    """Attach the characters of the bundle cutting the complete
    intersection."""
    return dataclasses.replace(
        pres, e_weights=tuple(tuple(int(x) for x in w) for w in e_weights))


def with_equivariant_columns(pres, weight_columns, e_weight_columns=()):
    """Extend each weight (and bundle weight) by extra equivariant columns
    for an auxiliary torus acting on the coefficients."""
    if len(weight_columns) != len(pres.weights):
        raise ConfigError("one equivariant column row per weight required")
    q = len(weight_columns[0]) if weight_columns else 0
    if any(len(row) != q for row in weight_columns):
        raise ConfigError("ragged equivariant columns")
    if pres.e_weights:
        if len(e_weight_columns) != len(pres.e_weights):
            raise ConfigError(
                "one equivariant column row per bundle weight required")
        if any(len(row) != q for row in e_weight_columns):
            raise ConfigError("ragged bundle equivariant columns")
    new_w = tuple(tuple(w) + tuple(int(x) for x in row)
                  for w, row in zip(pres.weights, weight_columns))
    new_e = tuple(tuple(w) + tuple(int(x) for x in row)
                  for w, row in zip(pres.e_weights, e_weight_columns))
    return dataclasses.replace(pres, weights=new_w, e_weights=new_e,
                               equivariant_rank=pres.equivariant_rank + q)


def strip_equivariant_columns(pres):
    q = pres.equivariant_rank
    if q == 0:
        return pres
    return dataclasses.replace(
        pres,
        weights=tuple(w[:pres.rank] for w in pres.weights),
        e_weights=tuple(w[:pres.rank] for w in pres.e_weights),
        equivariant_rank=0)


PRESETS = {
    "projective_space": projective_space,
    "weighted_projective": weighted_projective,
    "grassmannian": grassmannian,
}
