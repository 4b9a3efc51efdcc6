"""Mahdavifar-Vardy subspace codes: construction, encoding, receiver-side
point extraction and the interpolation step of list decoding.

Everything lives in the big field GF(q^(ml)). GF(q^m) is its fixed field
under the m-fold Frobenius. A vector of the ambient space
W = <alpha_1..alpha_l> + GF(q^m)^L is laid out as l digits (coordinates
with respect to alpha_1..alpha_l) followed by L blocks of m digits
(coordinates of y_s in a fixed GF(q)-basis of GF(q^m)).
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .ffield import Field, make_field, rank_of_vector
from .interp import EvalFunctional, InterpolationResult, ModulePoly, MonomialOrder, interpolate
from .linpoly import LinPoly
from .subspace import SubspaceBasis, operator_channel

log = logging.getLogger(__name__)

NORMAL_SEARCH_CAP = 1000


def roots_of_unity(q: int, l: int) -> tuple[int, ...]:
    """The l roots of x^l - 1 in GF(q), 1 first."""
    roots = tuple(c for c in range(1, q) if pow(c, l, q) == 1)
    if len(roots) != l:
        raise ValueError(f"x^{l} - 1 does not split into distinct roots over GF({q})")
    return roots


def is_normal(field: Field, gamma: int) -> bool:
    conj = [field.frobenius(gamma, i) for i in range(field.m)]
    return rank_of_vector(conj, field) == field.m


@dataclass(frozen=True)
class MVCode:
    q: int
    m: int
    l: int
    k: int
    L: int
    big: Field
    gamma: int
    roots: tuple[int, ...]
    alphas: tuple[int, ...]
    sub_basis: tuple[int, ...]
    _sub_index: dict = dc_field(default_factory=dict, compare=False, repr=False)

    @property
    def ambient(self) -> int:
        return self.l + self.L * self.m

    @property
    def order(self) -> MonomialOrder:
        return MonomialOrder.for_message_degree(self.L, self.k)

    def degree_bound(self, s: int) -> int:
        """Largest admissible q-degree of Q_s."""
        return self.m * self.l - s * (self.k - 1) - 1

    def max_errors(self) -> int:
        """Largest t with t < lL - L(L+1)(k-1)/(2m)."""
        # 2m t < 2m l L - L(L+1)(k-1)
        bound = 2 * self.m * self.l * self.L - self.L * (self.L + 1) * (self.k - 1)
        return (bound - 1) // (2 * self.m)

    # --- GF(q^m) coordinates inside the big field ---------------------------

    def in_subfield(self, a: int) -> bool:
        return self.big.frobenius(a, self.m) == a

    def sub_element(self, digits: Sequence[int]) -> int:
        f = self.big
        return f.sum(f.mul(c, b) for c, b in zip(digits, self.sub_basis))

    def sub_coords(self, a: int) -> tuple[int, ...]:
        try:
            return self._sub_index[a]
        except KeyError:
            raise ValueError(f"{self.big.render(a)} is not in GF({self.q}^{self.m})") from None

    # --- encoding -------------------------------------------------------------

    def message_poly(self, u: Sequence[int]) -> LinPoly:
        if len(u) != self.k:
            raise ValueError(f"message must have {self.k} symbols, got {len(u)}")
        if not all(0 <= c < self.q for c in u):
            raise ValueError(f"message coefficients must lie in GF({self.q})")
        return LinPoly(self.big, u)

    def compositions(self, u: Sequence[int]) -> list[LinPoly]:
        """u^(x0) = x, u, u o u, ..., L-fold."""
        poly = self.message_poly(u)
        out = [LinPoly.identity(self.big)]
        for _ in range(self.L):
            out.append(poly * out[-1])
        return out

    def codeword_vectors(self, u: Sequence[int]) -> list[tuple[int, ...]]:
        f = self.big
        powers = self.compositions(u)[1:]
        rows = []
        for i, a in enumerate(self.alphas):
            ys = [p(a) for p in powers]
            if i > 0:
                ys = [f.div(y, a) for y in ys]
            row = [int(i == j) for j in range(self.l)]
            for y in ys:
                row.extend(self.sub_coords(y))
            rows.append(tuple(row))
        return rows

    def encode(self, u: Sequence[int]) -> SubspaceBasis:
        V = SubspaceBasis.span(self.codeword_vectors(u), self.q, self.ambient)
        if V.dim != self.l:
            raise ValueError(f"codeword has dimension {V.dim}, expected {self.l}")
        return V

    def channel(self, V: SubspaceBasis, t: int, rng: random.Random | int | None = None) -> SubspaceBasis:
        if not isinstance(rng, random.Random):
            rng = random.Random(rng)
        return operator_channel(V, 0, t, rng)

    # --- decoding side ------------------------------------------------------

    def slab(self, i: int) -> SubspaceBasis:
        """{(x, y): x in <alpha_i>} for 0-based i."""
        n = self.ambient
        units = [j for j in range(n) if j == i or j >= self.l]
        return SubspaceBasis.span([[int(c == j) for c in range(n)] for j in units], self.q, n)

    def components(self, U: SubspaceBasis) -> list[SubspaceBasis]:
        """U_i = U cap slab_i for i = 1..l."""
        if self.l == 1:
            return [U]
        return [U.intersect(self.slab(i)) for i in range(self.l)]

    def point(self, i: int, row: Sequence[int]) -> tuple[int, ...]:
        """Point (x, y_1..y_L) of a basis vector of U_i, y scaled by alpha_i for i > 0."""
        f = self.big
        a = self.alphas[i]
        x = f.mul(row[i], a)
        ys = []
        for s in range(self.L):
            start = self.l + s * self.m
            y = self.sub_element(row[start : start + self.m])
            ys.append(f.mul(a, y) if i > 0 else y)
        return (x, *ys)

    def extract_points(self, U: SubspaceBasis) -> list[EvalFunctional]:
        """One functional per (component i, basis vector j, conjugate h)."""
        if (U.q, U.ambient) != (self.q, self.ambient):
            raise ValueError("received subspace is not in the code's ambient space")
        f = self.big
        out = []
        comps = self.components(U)
        for i, Ui in enumerate(comps):
            for row in Ui.rows:
                p = self.point(i, row)
                for h in range(self.m):
                    out.append(EvalFunctional(tuple(f.frobenius(c, h) for c in p)))
        realized = sum(c.dim for c in comps)
        if realized != U.dim:
            log.info("component dimensions sum to %d for a %d-dimensional U", realized, U.dim)
        return out

    def interpolate(self, functionals: Sequence[EvalFunctional]) -> "MVInterpolation":
        result = interpolate(self.big, functionals, self.order)
        Q = result.minimum
        violations = [
            (s, Q[s].q_degree, self.degree_bound(s))
            for s in range(self.L + 1)
            if Q[s].q_degree > self.degree_bound(s)
        ]
        return MVInterpolation(result, len(functionals), violations)

    def locus_residual(self, Q: ModulePoly, u: Sequence[int]) -> LinPoly:
        """Q(x, u(x), u o u(x), ...) as a linearized polynomial."""
        res = LinPoly(self.big)
        for comp, power in zip(Q.components, self.compositions(u)):
            res = res + comp * power
        return res

    def describe(self) -> str:
        """Two lines: ``q m l k L gamma`` and the big-field line."""
        return f"{self.q} {self.m} {self.l} {self.k} {self.L} {self.big.render(self.gamma)}\n{self.big.describe()}"

    @classmethod
    def from_description(cls, text: str) -> "MVCode":
        head, fieldline = [ln for ln in text.strip().splitlines() if ln.strip()][:2]
        q, m, l, k, L, gamma = head.split()
        fq, fml, mod = fieldline.split()
        big = make_field(int(fq), int(fml), [int(c) for c in mod.split(",")])
        return build(int(q), int(m), int(l), int(k), int(L), big, big.parse(gamma))


@dataclass
class MVInterpolation:
    result: InterpolationResult
    num_functionals: int
    violations: list[tuple[int, int, int]]

    @property
    def Q(self) -> ModulePoly:
        return self.result.minimum

    @property
    def within_bounds(self) -> bool:
        return not self.violations


def _check_params(q: int, m: int, l: int, k: int, L: int) -> None:
    if l < 1 or (q - 1) % l:
        raise ValueError(f"l={l} must divide q-1={q - 1}")
    if k < 1 or L < 1 or m < 1:
        raise ValueError("need k, L, m >= 1")
    if m * l - L * (k - 1) - 1 < 0:
        raise ValueError("ml - L(k-1) - 1 must be nonnegative")


def build(q: int, m: int, l: int, k: int, L: int, big: Field, gamma: int) -> MVCode:
    """Assemble and validate a code from a given field and normal element."""
    _check_params(q, m, l, k, L)
    if (big.q, big.m) != (q, m * l):
        raise ValueError(f"big field must be GF({q}^{m * l})")
    if not is_normal(big, gamma):
        raise ValueError("gamma does not generate a normal basis")
    roots = roots_of_unity(q, l)
    alphas = tuple(
        big.sum(big.mul(pow(e, s, q), big.frobenius(gamma, m * s)) for s in range(l)) for e in roots
    )
    conj = [big.frobenius(a, j) for a in alphas for j in range(m)]
    if rank_of_vector(conj, big) != m * l:
        raise ValueError("conjugates of alpha_i do not form a basis")
    zeta = big.pow(big.generator, (big.order - 1) // (q**m - 1))
    sub_basis = tuple(big.pow(zeta, i) for i in range(m))
    if rank_of_vector(sub_basis, big) != m:
        raise ValueError("subfield basis is degenerate")
    index = {}
    for d in itertools.product(range(q), repeat=m):
        index[big.sum(big.mul(c, b) for c, b in zip(d, sub_basis))] = d
    return MVCode(q, m, l, k, L, big, gamma, roots, alphas, sub_basis, index)


def make_code(
    q: int, m: int, l: int, k: int, L: int, seed: int | None = 0, modulus: Sequence[int] | None = None
) -> MVCode:
    """Construct an MV code; gamma is a primitive normal element found by seeded search."""
    _check_params(q, m, l, k, L)
    big = make_field(q, m * l, modulus)
    rng = random.Random(seed)
    for _ in range(NORMAL_SEARCH_CAP):
        gamma = big.random_element(rng, nonzero=True)
        if big.is_primitive(gamma) and is_normal(big, gamma):
            return build(q, m, l, k, L, big, gamma)
    raise ValueError(f"no primitive normal element found in {NORMAL_SEARCH_CAP} attempts")
