"""Linearized polynomials l(x) = sum a_i x^[i] over GF(q^m), with x^[i] = x^(q^i).

Multiplication in the ring is composition, written ``l1 * l2`` for
l1(l2(x)). It is not commutative.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .ffield import Field


class LinPoly:
    """Dense, trimmed coefficient tuple: ``coeffs[i]`` multiplies x^[i]."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, field: Field) -> "LinPoly":
        return cls(field)

    @classmethod
    def identity(cls, field: Field) -> "LinPoly":
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: Field, i: int, c: int = 1) -> "LinPoly":
        return cls(field, [0] * i + [c])

    @property
    def q_degree(self) -> int:
        """Largest i with a_i != 0; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _same(self, other: "LinPoly") -> None:
        if self.field is not other.field and self.field != other.field:
            raise ValueError("linearized polynomials over different fields")

    def __add__(self, other: "LinPoly") -> "LinPoly":
        self._same(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = f.add(out[i], x)
        return LinPoly(f, out)

    def __neg__(self) -> "LinPoly":
        return LinPoly(self.field, [self.field.neg(a) for a in self.coeffs])

    def __sub__(self, other: "LinPoly") -> "LinPoly":
        return self + (-other)

    def scale(self, c: int) -> "LinPoly":
        """Left scalar multiple c * l(x)."""
        f = self.field
        return LinPoly(f, [f.mul(c, a) for a in self.coeffs])

    def __mul__(self, other: "LinPoly") -> "LinPoly":
        """Composition self(other(x)): coefficient [i+j] gets a_i * b_j^(q^i)."""
        self._same(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LinPoly(f)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = f.add(out[i + j], f.mul(ai, f.frobenius(bj, i)))
        return LinPoly(f, out)

    compose = __mul__

    def __call__(self, beta: int) -> int:
        f = self.field
        s = 0
        for i, a in enumerate(self.coeffs):
            if a:
                s = f.add(s, f.mul(a, f.frobenius(beta, i)))
        return s

    def frobenius_shift(self) -> "LinPoly":
        """x^[1] * l: coefficients raised to the q-th power, degrees shifted up."""
        f = self.field
        return LinPoly(f, [0] + [f.frobenius(a) for a in self.coeffs])

    def right_divide(self, v: "LinPoly") -> tuple["LinPoly", "LinPoly"]:
        """Return (f, r) with self = v * f + r and deg r < deg v."""
        self._same(v)
        if v.is_zero():
            raise ZeroDivisionError("division by the zero linearized polynomial")
        fld = self.field
        dv = v.q_degree
        inv_lead = fld.inv(v.lead)
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - dv, 0)
        for d in range(len(rem) - 1 - dv, -1, -1):
            top = rem[d + dv]
            if top == 0:
                continue
            # v_dv * c^(q^dv) must cancel the leading term
            c = fld.frobenius(fld.mul(top, inv_lead), -dv)
            quot[d] = c
            for i, vi in enumerate(v.coeffs):
                if vi:
                    rem[i + d] = fld.sub(rem[i + d], fld.mul(vi, fld.frobenius(c, i)))
        return LinPoly(fld, quot), LinPoly(fld, rem[:dv])

    def monic(self) -> "LinPoly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinPoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"LinPoly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, var: str = "x") -> str:
        """``a^4*x^[2] + x^[1] + a^29*x^[0]``, highest degree first."""
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            mono = f"{var}^[{i}]"
            terms.append(mono if a == 1 else f"{self.field.render(a)}*{mono}")
        return " + ".join(terms) if terms else "0"

    @classmethod
    def parse(cls, text: str, field: Field, var: str = "x") -> "LinPoly":
        return parse_terms(text, field, (var,))[0]


_TERM = re.compile(r"^(?:(?P<c>[^*]+)\*)?(?P<v>[A-Za-z]\w*)\^\[(?P<i>\d+)\]$")


def parse_terms(text: str, field: Field, variables: Sequence[str]) -> list[LinPoly]:
    """Parse a sum of ``coef*var^[i]`` terms into one LinPoly per variable."""
    coeffs: list[dict[int, int]] = [{} for _ in variables]
    text = text.strip()
    if text != "0":
        for term in text.split("+"):
            m = _TERM.match(term.strip())
            if not m or m.group("v") not in variables:
                raise ValueError(f"cannot parse term {term.strip()!r}")
            slot = coeffs[variables.index(m.group("v"))]
            c = field.parse(m.group("c")) if m.group("c") else 1
            i = int(m.group("i"))
            slot[i] = field.add(slot.get(i, 0), c)
    out = []
    for slot in coeffs:
        deg = max(slot, default=-1)
        out.append(LinPoly(field, [slot.get(i, 0) for i in range(deg + 1)]))
    return out


def annihilator(field: Field, points: Sequence[int]) -> LinPoly:
    """Monic linearized polynomial whose roots are exactly span_GF(q)(points)."""
    p = LinPoly.identity(field)
    q = field.q
    for beta in points:
        v = p(beta)
        if v == 0:
            continue
        # p <- p^q - v^(q-1) p
        p = p.frobenius_shift() - p.scale(field.pow(v, q - 1))
    return p
