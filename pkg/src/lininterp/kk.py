"""Koetter-Kschischang subspace codes and their list-1 decoder.

A pair (alpha, beta) of W = <A> + GF(q^m) is laid out as l + m digits over
GF(q): the coordinates of alpha with respect to alpha_0..alpha_{l-1},
followed by the polynomial-basis coordinates of beta.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .ffield import Field, make_field, rank_of_vector
from .gabidulin import factor_message
from .interp import EvalFunctional, InterpolationResult, MonomialOrder, interpolate
from .linpoly import LinPoly
from .subspace import SubspaceBasis, operator_channel


@dataclass(frozen=True)
class KKCode:
    field: Field
    l: int
    k: int
    alphas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))
        if len(self.alphas) != self.l:
            raise ValueError("need exactly l elements alpha_i")
        if not 1 <= self.k <= self.l <= self.field.m:
            raise ValueError(f"need 1 <= k <= l <= m, got k={self.k} l={self.l} m={self.field.m}")
        if rank_of_vector(self.alphas, self.field) != self.l:
            raise ValueError("alpha_i are not linearly independent over GF(q)")

    @classmethod
    def standard(cls, field: Field, l: int, k: int) -> "KKCode":
        return cls(field, l, k, tuple(field.q**i for i in range(l)))

    @property
    def ambient(self) -> int:
        return self.l + self.field.m

    @property
    def order(self) -> MonomialOrder:
        return MonomialOrder((0, self.k - 1))

    def pair(self, x_coords: Sequence[int], beta: int) -> tuple[int, ...]:
        return tuple(x_coords) + self.field.coords(beta)

    def point(self, row: Sequence[int]) -> tuple[int, int]:
        """(x, y) in GF(q^m)^2 for a vector of W."""
        f = self.field
        x = f.sum(f.mul(c, a) for c, a in zip(row[: self.l], self.alphas))
        return x, f.from_coords(row[self.l :])

    def encode(self, u: Sequence[int]) -> SubspaceBasis:
        if len(u) != self.k:
            raise ValueError(f"message must have {self.k} symbols, got {len(u)}")
        poly = LinPoly(self.field, u)
        rows = [
            self.pair([int(i == j) for j in range(self.l)], poly(a)) for i, a in enumerate(self.alphas)
        ]
        return SubspaceBasis.span(rows, self.field.q, self.ambient)

    def interpolation(self, U: SubspaceBasis) -> InterpolationResult:
        if (U.q, U.ambient) != (self.field.q, self.ambient):
            raise ValueError("received subspace is not in the code's ambient space")
        functionals = [EvalFunctional(self.point(r)) for r in U.rows]
        return interpolate(self.field, functionals, self.order)

    def decode(self, U: SubspaceBasis) -> tuple[int, ...]:
        """Recover u when erasures + errors < l - k + 1; DecodingFailure otherwise."""
        result = self.interpolation(U)
        f = factor_message(result.minimum, self.k, result)
        return tuple(f.coeff(i) for i in range(self.k))

    def channel(self, V: SubspaceBasis, rho: int, t: int, rng: random.Random | int | None = None) -> SubspaceBasis:
        if not isinstance(rng, random.Random):
            rng = random.Random(rng)
        return operator_channel(V, rho, t, rng)

    def describe(self) -> str:
        """Descriptor line ``q m modulus l k alpha0 ... alpha(l-1)``."""
        f = self.field
        return f"{f.describe()} {self.l} {self.k} " + " ".join(f.render(a) for a in self.alphas)

    @classmethod
    def from_description(cls, line: str) -> "KKCode":
        tok = line.split()
        field = make_field(int(tok[0]), int(tok[1]), [int(c) for c in tok[2].split(",")])
        return cls(field, int(tok[3]), int(tok[4]), tuple(field.parse(t) for t in tok[5:]))


def list1_radius_ok(l: int, k: int, rho: int, t: int) -> bool:
    return rho + t < l - k + 1


def interpolation_tau(r: int, k: int) -> int:
    """ceil((r + k) / 2)."""
    return -(-(r + k) // 2)
