"""General interpolation over a free L[x]-module with basis b_0..b_L.

An element Q = sum_j l_j(x) o b_j is a tuple of linearized polynomials.
With b_0 = x and b_j = y_j, Q(x, y_1, ..., y_L) = l_0(x) + l_1(y_1) + ...,
and the functionals are evaluations at points (p_0, ..., p_L).

The monomials x^[i] o b_j are totally ordered by the key (i + w_j, j):
weighted degree first, basis index second.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .ffield import Field
from .linpoly import LinPoly, parse_terms


def variable_names(L: int) -> tuple[str, ...]:
    if L == 1:
        return ("x", "y")
    return ("x",) + tuple(f"y{j}" for j in range(1, L + 1))


class ModulePoly:
    __slots__ = ("field", "components")

    def __init__(self, field: Field, components: Sequence[LinPoly]):
        self.field = field
        self.components = tuple(components)

    @classmethod
    def zero(cls, field: Field, L: int) -> "ModulePoly":
        return cls(field, [LinPoly(field)] * (L + 1))

    @classmethod
    def basis(cls, field: Field, L: int, j: int) -> "ModulePoly":
        """The module generator b_j (x for j = 0, y_j otherwise)."""
        return cls(field, [LinPoly.identity(field) if i == j else LinPoly(field) for i in range(L + 1)])

    @property
    def L(self) -> int:
        return len(self.components) - 1

    def __getitem__(self, j: int) -> LinPoly:
        return self.components[j]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: "ModulePoly") -> "ModulePoly":
        return ModulePoly(self.field, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other: "ModulePoly") -> "ModulePoly":
        return ModulePoly(self.field, [a - b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> "ModulePoly":
        return ModulePoly(self.field, [-a for a in self.components])

    def scale(self, c: int) -> "ModulePoly":
        return ModulePoly(self.field, [a.scale(c) for a in self.components])

    def frobenius_shift(self) -> "ModulePoly":
        """x^[1] o Q."""
        return ModulePoly(self.field, [a.frobenius_shift() for a in self.components])

    def compose_left(self, l: LinPoly) -> "ModulePoly":
        """l o Q: compose l onto every component."""
        return ModulePoly(self.field, [l * a for a in self.components])

    def terms(self):
        """Yield (i, j, coefficient) for every nonzero coefficient."""
        for j, comp in enumerate(self.components):
            for i, a in enumerate(comp.coeffs):
                if a:
                    yield i, j, a

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ModulePoly)
            and self.field == other.field
            and self.components == other.components
        )

    def __hash__(self) -> int:
        return hash(self.components)

    def to_text(self) -> str:
        names = variable_names(self.L)
        parts = [c.to_text(v) for c, v in zip(self.components, names) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"

    __str__ = to_text

    def __repr__(self) -> str:
        return f"ModulePoly({self.to_text()!r})"

    @classmethod
    def parse(cls, text: str, field: Field, L: int) -> "ModulePoly":
        return cls(field, parse_terms(text, field, variable_names(L)))


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted order on x^[i] o b_j; w_0 must be 0."""

    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.weights or self.weights[0] != 0 or min(self.weights) < 0:
            raise ValueError("weights must be nonnegative with w_0 = 0")

    @classmethod
    def for_message_degree(cls, L: int, k: int) -> "MonomialOrder":
        """w_j = j(k-1): y_j stands in for a q-degree k-1 composition power."""
        return cls(tuple(j * (k - 1) for j in range(L + 1)))

    @property
    def L(self) -> int:
        return len(self.weights) - 1

    def key(self, i: int, j: int) -> tuple[int, int]:
        return (i + self.weights[j], j)

    def leading(self, Q: ModulePoly) -> tuple[tuple[int, int], tuple[int, int], int]:
        """(order key, (i, j) of the leading monomial, its coefficient)."""
        best = None
        for j, comp in enumerate(Q.components):
            if comp.coeffs:
                i = comp.q_degree
                k = self.key(i, j)
                if best is None or k > best[0]:
                    best = (k, (i, j), comp.lead)
        if best is None:
            raise ValueError("the zero element has no order")
        return best

    def order_key(self, Q: ModulePoly) -> tuple[int, int]:
        return self.leading(Q)[0]

    def ind_y(self, Q: ModulePoly) -> int:
        return self.leading(Q)[1][1]

    def normalize(self, Q: ModulePoly) -> ModulePoly:
        """Scale Q so its leading coefficient is 1."""
        if Q.is_zero():
            return Q
        return Q.scale(Q.field.inv(self.leading(Q)[2]))

    def monomials(self, count: int) -> list[tuple[int, int]]:
        """The first ``count`` monomials (i, j) in increasing order."""
        out = []
        s = 0
        while len(out) < count:
            for j, w in enumerate(self.weights):
                if s >= w:
                    out.append((s - w, j))
                    if len(out) == count:
                        break
            s += 1
        return out

    def monomials_up_to(self, key: tuple[int, int]) -> list[tuple[int, int]]:
        """All monomials whose key is <= ``key``, in increasing order."""
        out = []
        for s in range(key[0] + 1):
            for j, w in enumerate(self.weights):
                if s >= w and (s, j) <= key:
                    out.append((s - w, j))
        return out


@dataclass(frozen=True)
class EvalFunctional:
    """D(Q) = sum_j l_j(p_j) for the point (p_0, ..., p_L)."""

    point: tuple[int, ...]

    def __call__(self, Q: ModulePoly) -> int:
        if len(self.point) != len(Q.components):
            raise ValueError(f"functional of arity {len(self.point)} applied to L={Q.L}")
        f = Q.field
        s = 0
        for comp, p in zip(Q.components, self.point):
            s = f.add(s, comp(p))
        return s


@dataclass
class IterationRecord:
    """One pass of the main loop: discrepancies against the old candidates,
    the chosen index (None when every discrepancy vanished) and the
    updated candidates."""

    index: int
    functional: EvalFunctional
    discrepancies: tuple[int, ...]
    j_star: int | None
    candidates: tuple[ModulePoly, ...]


@dataclass
class InterpolationResult:
    minimum: ModulePoly
    candidates: tuple[ModulePoly, ...]
    order: MonomialOrder
    initial: tuple[ModulePoly, ...]
    trace: list[IterationRecord] = dc_field(default_factory=list)

    @property
    def min_index(self) -> int:
        return self.order.ind_y(self.minimum)


def interpolate(
    field: Field,
    functionals: Sequence[EvalFunctional],
    order: MonomialOrder,
    rescaled: bool = False,
) -> InterpolationResult:
    """Minimum nonzero module element in the common kernel of ``functionals``.

    Candidates g_j start at b_j. For each functional D the discrepancies
    D(g_j) are computed first; among the candidates with nonzero
    discrepancy the one of least order, g*, takes the order-increase update
    D(g*) (x^[1] o g*) - D(x^[1] o g*) g*, and every other such candidate
    takes the cross-term update D(g*) g_j - D(g_j) g*. Candidates with zero
    discrepancy are kept. Coefficients are never normalized.

    With ``rescaled`` the order-increase update is replaced by the scalar
    multiple (x^[1] o g*) - D(g*)^(q-1) g*.
    """
    L = order.L
    g = [ModulePoly.basis(field, L, j) for j in range(L + 1)]
    initial = tuple(g)
    trace = []
    for idx, D in enumerate(functionals, start=1):
        if len(D.point) != L + 1:
            raise ValueError(f"functional {idx} has arity {len(D.point)}, expected {L + 1}")
        delta = tuple(D(gj) for gj in g)
        active = [j for j in range(L + 1) if delta[j]]
        j_star = None
        if active:
            j_star = min(active, key=lambda j: order.order_key(g[j]))
            gs, ds = g[j_star], delta[j_star]
            new = list(g)
            for j in active:
                if j != j_star:
                    new[j] = g[j].scale(ds) - gs.scale(delta[j])
            shifted = gs.frobenius_shift()
            if rescaled:
                new[j_star] = shifted - gs.scale(field.pow(ds, field.q - 1))
            else:
                new[j_star] = shifted.scale(ds) - gs.scale(D(shifted))
            g = new
        trace.append(IterationRecord(idx, D, delta, j_star, tuple(g)))
    minimum = min(g, key=order.order_key)
    return InterpolationResult(minimum, tuple(g), order, initial, trace)


def format_trace(field: Field, result: InterpolationResult, normalize: bool = False) -> str:
    """Text block per iteration: point, discrepancies, chosen index, candidates.

    With ``normalize`` every candidate is printed monic and each discrepancy
    is divided by the leading coefficient of the candidate it was computed
    from; the unnormalized values follow on ``.raw`` lines.
    """
    order = result.order
    r = field.render
    L = order.L
    lines = [f"# functionals {len(result.trace)} weights {' '.join(map(str, order.weights))}"]

    def emit_candidates(cands):
        for j, c in enumerate(cands):
            if normalize:
                lines.append(f"  g{j} = {order.normalize(c)}")
                lines.append(f"  g{j}.raw = {c}")
            else:
                lines.append(f"  g{j} = {c}")

    lines.append("iteration 0")
    emit_candidates(result.initial)
    prev = result.initial
    for rec in result.trace:
        lines.append(f"iteration {rec.index}")
        lines.append("  point = (" + ", ".join(r(p) for p in rec.functional.point) + ")")
        for j in range(L + 1):
            d = rec.discrepancies[j]
            if normalize:
                lead = order.leading(prev[j])[2]
                lines.append(f"  delta{j} = {r(field.div(d, lead))}")
                lines.append(f"  delta{j}.raw = {r(d)}")
            else:
                lines.append(f"  delta{j} = {r(d)}")
        lines.append(f"  jstar = {'-' if rec.j_star is None else rec.j_star}")
        emit_candidates(rec.candidates)
        prev = rec.candidates
    m = order.normalize(result.minimum) if normalize else result.minimum
    lines.append(f"minimum = {m}")
    return "\n".join(lines) + "\n"
