"""Gabidulin codes and their decoder by bivariate linearized interpolation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ffield import Field, make_field, rank_of_vector
from .interp import EvalFunctional, InterpolationResult, ModulePoly, MonomialOrder, interpolate
from .linpoly import LinPoly


class DecodingFailure(Exception):
    """Raised when the interpolation output does not factor to a message."""

    reason = "undecodable"

    def __init__(self, msg: str = "", result: InterpolationResult | None = None):
        super().__init__(msg or self.reason)
        self.result = result


class NonzeroRemainder(DecodingFailure):
    reason = "remainder"


class DegreeViolation(DecodingFailure):
    reason = "degree"


class ZeroYComponent(DecodingFailure):
    reason = "q1-zero"


def factor_message(Q: ModulePoly, k: int, result: InterpolationResult | None = None) -> LinPoly:
    """Solve Q_0(x) + Q_1(f(x)) = 0 for f by right division."""
    q0, q1 = Q[0], Q[1]
    if q1.is_zero():
        raise ZeroYComponent("y-component of the interpolation output is zero", result)
    f, rem = (-q0).right_divide(q1)
    if not rem.is_zero():
        raise NonzeroRemainder(f"right division leaves remainder {rem}", result)
    if f.q_degree > k - 1:
        raise DegreeViolation(f"recovered polynomial has q-degree {f.q_degree} > {k - 1}", result)
    return f


@dataclass(frozen=True)
class GabidulinCode:
    field: Field
    n: int
    k: int
    points: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if len(self.points) != self.n:
            raise ValueError("need exactly n evaluation points")
        if not 1 <= self.k <= self.n <= self.field.m:
            raise ValueError(f"need 1 <= k <= n <= m, got k={self.k} n={self.n} m={self.field.m}")
        if rank_of_vector(self.points, self.field) != self.n:
            raise ValueError("evaluation points are not linearly independent over GF(q)")

    @classmethod
    def standard(cls, field: Field, n: int, k: int) -> "GabidulinCode":
        """Points 1, x, ..., x^(n-1) of the polynomial basis."""
        return cls(field, n, k, tuple(field.q**i for i in range(n)))

    @property
    def tau(self) -> int:
        return (self.n - self.k) // 2

    @property
    def order(self) -> MonomialOrder:
        return MonomialOrder((0, self.k - 1))

    def message_poly(self, u: Sequence[int]) -> LinPoly:
        if len(u) != self.k:
            raise ValueError(f"message must have {self.k} symbols, got {len(u)}")
        return LinPoly(self.field, u)

    def encode(self, u: Sequence[int]) -> tuple[int, ...]:
        f = self.message_poly(u)
        return tuple(f(g) for g in self.points)

    def interpolation(self, y: Sequence[int], rescaled: bool = False) -> InterpolationResult:
        if len(y) != self.n:
            raise ValueError(f"received word must have {self.n} symbols, got {len(y)}")
        functionals = [EvalFunctional((g, v)) for g, v in zip(self.points, y)]
        return interpolate(self.field, functionals, self.order, rescaled=rescaled)

    def decode(self, y: Sequence[int]) -> tuple[int, ...]:
        """Message u with rank(y - encode(u)) <= tau; DecodingFailure otherwise."""
        result = self.interpolation(y)
        f = factor_message(result.minimum, self.k, result)
        return tuple(f.coeff(i) for i in range(self.k))

    def describe(self) -> str:
        """Descriptor line ``q m modulus n k g0 ... g(n-1)``."""
        f = self.field
        pts = " ".join(f.render(g) for g in self.points)
        return f"{f.describe()} {self.n} {self.k} {pts}"

    @classmethod
    def from_description(cls, line: str) -> "GabidulinCode":
        tok = line.split()
        field = make_field(int(tok[0]), int(tok[1]), [int(c) for c in tok[2].split(",")])
        n, k = int(tok[3]), int(tok[4])
        pts = [field.parse(t) for t in tok[5:]]
        return cls(field, n, k, tuple(pts))


EXAMPLE1_MODULUS = (1, 1, 0, 0, 0, 0, 1)  # x^6 + x + 1
EXAMPLE1_POINT_LOGS = (31, 48, 32, 16, 0, 47)
EXAMPLE1_RECEIVED_LOGS = (31, None, 19, 16, 0, 47)
EXAMPLE1_ERROR_LOGS = (None, 48, 54, None, None, None)


def _from_logs(field: Field, logs) -> tuple[int, ...]:
    return tuple(0 if e is None else field.alpha(e) for e in logs)


def example1() -> tuple[GabidulinCode, tuple[int, ...], tuple[int, ...]]:
    """The (6, 2) code over GF(2^6), received word and error of the worked example."""
    field = make_field(2, 6, EXAMPLE1_MODULUS)
    code = GabidulinCode(field, 6, 2, _from_logs(field, EXAMPLE1_POINT_LOGS))
    return code, _from_logs(field, EXAMPLE1_RECEIVED_LOGS), _from_logs(field, EXAMPLE1_ERROR_LOGS)
