"""Minimum interpolating element by solving the homogeneous linear system.

This is the brute-force counterpart of ``interp.interpolate``: columns are
monomials x^[i] o b_j in increasing order, rows are the functionals, and
the entry is p_j^(q^i). The minimum is the nullspace vector whose last
nonzero column comes first. Only field arithmetic is shared with the
iterative algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ffield import Field
from .interp import EvalFunctional, ModulePoly, MonomialOrder
from .linpoly import LinPoly


def functional_matrix(
    field: Field, functionals: Sequence[EvalFunctional], monomials: Sequence[tuple[int, int]]
) -> list[list[int]]:
    return [[field.frobenius(D.point[j], i) for i, j in monomials] for D in functionals]


def rref(field: Field, rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            f = mat[i][c]
            if i != r and f:
                mat[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(field: Field, rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    red, pivots = rref(field, rows) if rows else ([], [])
    basis = []
    for fc in (c for c in range(ncols) if c not in pivots):
        v = [0] * ncols
        v[fc] = 1
        for row, p in zip(red, pivots):
            v[p] = field.neg(row[fc])
        basis.append(v)
    return basis


def vector_to_module(
    field: Field, vec: Sequence[int], monomials: Sequence[tuple[int, int]], L: int
) -> ModulePoly:
    comps: list[dict[int, int]] = [{} for _ in range(L + 1)]
    for a, (i, j) in zip(vec, monomials):
        if a:
            comps[j][i] = a
    return ModulePoly(
        field,
        [LinPoly(field, [c.get(i, 0) for i in range(max(c, default=-1) + 1)]) for c in comps],
    )


@dataclass
class EliminationSolution:
    minimum: ModulePoly | None
    key: tuple[int, int] | None
    # dimension of the solution space restricted to monomials up to ``key``
    nullity_at_key: int
    rank: int


def minimal_solution(
    field: Field,
    functionals: Sequence[EvalFunctional],
    order: MonomialOrder,
    monomials: Sequence[tuple[int, int]] | None = None,
) -> EliminationSolution:
    """Minimum-order nonzero kernel element supported on ``monomials``.

    By default the first C + 1 monomials are used; C constraints on C + 1
    unknowns always leave a nonzero solution, so that set is guaranteed to
    hold the minimum. Returns ``minimum=None`` when the given monomials
    admit only the zero solution.
    """
    if monomials is None:
        monomials = order.monomials(len(functionals) + 1)
    monomials = sorted(monomials, key=lambda ij: order.key(*ij))
    n = len(monomials)
    mat = functional_matrix(field, functionals, monomials)
    red, pivots = rref(field, mat) if mat else ([], [])
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return EliminationSolution(None, None, 0, len(pivots))
    c = free[0]
    vec = [0] * n
    vec[c] = 1
    for row, p in zip(red, pivots):
        if p < c:
            vec[p] = field.neg(row[c])
    Q = vector_to_module(field, vec, monomials, order.L)
    prefix = [row[: c + 1] for row in mat]
    nullity = len(nullspace(field, prefix, c + 1))
    return EliminationSolution(Q, order.key(*monomials[c]), nullity, len(pivots))
