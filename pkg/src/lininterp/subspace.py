"""Linear algebra over GF(q), q prime, and canonical subspaces.

Vectors are tuples of ints in 0..q-1. Subspaces are stored as the nonzero
rows of their reduced row-echelon form, so two spans are equal exactly when
their row tuples are.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

Vector = tuple[int, ...]


def rref(rows: Iterable[Sequence[int]], q: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    mat = [[x % q for x in r] for r in rows]
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
        inv = pow(mat[r][c], q - 2, q)
        if inv != 1:
            mat[r] = [x * inv % q for x in mat[r]]
        pivot_row = mat[r]
        for i in range(len(mat)):
            f = mat[i][c]
            if i != r and f:
                row = mat[i]
                mat[i] = [(x - f * y) % q for x, y in zip(row, pivot_row)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Iterable[Sequence[int]], q: int) -> int:
    return len(rref(rows, q)[0])


def nullspace(rows: Sequence[Sequence[int]], ncols: int, q: int) -> list[list[int]]:
    """Basis of {v : rows . v = 0}."""
    red, pivots = rref(rows, q)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(red, pivots):
            v[p] = (-row[f]) % q
        basis.append(v)
    return basis


def random_full_rank(rows: int, cols: int, q: int, rng: random.Random) -> list[list[int]]:
    """Uniform random rows x cols matrix of rank min(rows, cols)."""
    target = min(rows, cols)
    while True:
        mat = [[rng.randrange(q) for _ in range(cols)] for _ in range(rows)]
        if rank(mat, q) == target:
            return mat


def mat_vec_rows(coeffs: Sequence[Sequence[int]], basis: Sequence[Sequence[int]], q: int) -> list[list[int]]:
    """coeffs @ basis over GF(q)."""
    n = len(basis[0]) if basis else 0
    return [
        [sum(c * b[j] for c, b in zip(row, basis)) % q for j in range(n)] for row in coeffs
    ]


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of GF(q)^ambient in canonical RREF."""

    q: int
    ambient: int
    rows: tuple[Vector, ...] = ()

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], q: int, ambient: int) -> "SubspaceBasis":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        red, _ = rref(vectors, q)
        return cls(q, ambient, tuple(tuple(r) for r in red))

    @classmethod
    def zero(cls, q: int, ambient: int) -> "SubspaceBasis":
        return cls(q, ambient, ())

    @classmethod
    def whole(cls, q: int, ambient: int) -> "SubspaceBasis":
        eye = [[int(i == j) for j in range(ambient)] for i in range(ambient)]
        return cls.span(eye, q, ambient)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _check(self, other: "SubspaceBasis") -> None:
        if (self.q, self.ambient) != (other.q, other.ambient):
            raise ValueError("subspaces live in different ambient spaces")

    def __add__(self, other: "SubspaceBasis") -> "SubspaceBasis":
        self._check(other)
        return SubspaceBasis.span(self.rows + other.rows, self.q, self.ambient)

    def intersect(self, other: "SubspaceBasis") -> "SubspaceBasis":
        # Zassenhaus: rows [u | u] and [v | 0]; rows of the echelon form whose
        # left half vanishes carry a basis of the intersection on the right.
        self._check(other)
        n = self.ambient
        if not self.rows or not other.rows:
            return SubspaceBasis.zero(self.q, n)
        stacked = [list(u) + list(u) for u in self.rows] + [list(v) + [0] * n for v in other.rows]
        red, _ = rref(stacked, self.q)
        inter = [r[n:] for r in red if not any(r[:n])]
        return SubspaceBasis.span(inter, self.q, n)

    __and__ = intersect

    def contains(self, v: Sequence[int]) -> bool:
        v = tuple(x % self.q for x in v)
        if len(v) != self.ambient:
            raise ValueError("vector length does not match ambient dimension")
        return rank(self.rows + (v,), self.q) == self.dim

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        self._check(other)
        return (self + other).dim == self.dim

    def distance(self, other: "SubspaceBasis") -> int:
        """dim(U + V) - dim(U cap V)."""
        return (self + other).dim - self.intersect(other).dim

    def vectors(self) -> Iterable[Vector]:
        """Every vector of the span (q^dim of them)."""
        q = self.q
        for cs in itertools.product(range(q), repeat=self.dim):
            yield tuple(
                sum(c * r[j] for c, r in zip(cs, self.rows)) % q for j in range(self.ambient)
            )

    def random_vector(self, rng: random.Random) -> Vector:
        cs = [rng.randrange(self.q) for _ in range(self.dim)]
        return tuple(
            sum(c * r[j] for c, r in zip(cs, self.rows)) % self.q for j in range(self.ambient)
        )

    # file format: header "ambient rank", then one digit string per row
    def dumps(self) -> str:
        if self.q > 10:
            body = [",".join(map(str, r)) for r in self.rows]
        else:
            body = ["".join(map(str, r)) for r in self.rows]
        return "\n".join([f"{self.ambient} {self.dim}", *body]) + "\n"

    @classmethod
    def loads(cls, text: str, q: int) -> "SubspaceBasis":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        ambient, dim = map(int, lines[0].split())
        rows = []
        for ln in lines[1:]:
            digits = [int(c) for c in (ln.split(",") if "," in ln else ln)]
            if len(digits) != ambient or not all(0 <= c < q for c in digits):
                raise ValueError(f"bad subspace row {ln!r}")
            rows.append(digits)
        if len(rows) != dim:
            raise ValueError(f"header says rank {dim}, found {len(rows)} rows")
        sub = cls.span(rows, q, ambient)
        if sub.dim != dim:
            raise ValueError("rows are linearly dependent")
        return sub


class ChannelInfeasible(ValueError):
    pass


def operator_channel(
    v: SubspaceBasis, erasures: int, errors: int, rng: random.Random, max_attempts: int = 10_000
) -> SubspaceBasis:
    """Erase ``erasures`` dimensions of ``v`` and inject ``errors`` new ones.

    The result U has dim(U) = dim(V) - erasures + errors,
    dim(U cap V) = dim(V) - erasures, and d_s(U, V) = erasures + errors;
    all three are checked before returning.
    """
    l, n, q = v.dim, v.ambient, v.q
    if not 0 <= erasures <= l or not 0 <= errors <= n - l:
        raise ChannelInfeasible(
            f"cannot erase {erasures} and inject {errors} with dim {l} in ambient {n}"
        )
    keep = l - erasures
    for _ in range(max_attempts):
        coeffs = random_full_rank(keep, l, q, rng) if keep else []
        kept = SubspaceBasis.span(mat_vec_rows(coeffs, v.rows, q), q, n) if keep else SubspaceBasis.zero(q, n)
        noise = [tuple(rng.randrange(q) for _ in range(n)) for _ in range(errors)]
        if (v + SubspaceBasis.span(noise, q, n)).dim != l + errors:
            continue
        u = SubspaceBasis.span(kept.rows + tuple(noise), q, n)
        if u.dim == keep + errors and u.intersect(v).dim == keep and u.distance(v) == erasures + errors:
            return u
    raise ChannelInfeasible(f"no admissible channel output after {max_attempts} attempts")
