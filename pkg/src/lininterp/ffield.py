"""Arithmetic in GF(q) and GF(q^m) for prime q.

Elements are plain ints: the base-q digits of an int are the coefficients
of the element in the polynomial basis 1, x, ..., x^(m-1) modulo the
field's defining polynomial. GF(q) sits inside every extension as the
ints 0..q-1.

Small fields (q^m <= 2^20) use exp/log tables and Zech logarithms; larger
ones fall back to schoolbook multiply-and-reduce.
"""

from __future__ import annotations

import functools
import random
from typing import Iterable, Sequence

TABLE_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over GF(q) as coefficient lists, lowest degree first ------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], b: Sequence[int], q: int) -> list[int]:
    a = _trim([x % q for x in a])
    db = len(b) - 1
    inv_lead = pow(b[-1], q - 2, q)
    while len(a) - 1 >= db:
        c = a[-1] * inv_lead % q
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % q
        _trim(a)
    return a


def _monic_polys(q: int, degree: int) -> Iterable[list[int]]:
    for n in range(q**degree):
        c = []
        for _ in range(degree):
            n, r = divmod(n, q)
            c.append(r)
        yield c + [1]


def is_irreducible(modulus: Sequence[int], q: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    m = len(modulus) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for f in _monic_polys(q, d):
            if not _poly_mod(modulus, f, q):
                return False
    return True


def find_primitive_modulus(q: int, m: int) -> tuple[int, ...]:
    """Smallest monic primitive polynomial of degree m (counting c0 first)."""
    for c in _monic_polys(q, m):
        if c[0] == 0 or not is_irreducible(c, q):
            continue
        f = Field(q, m, tuple(c), _check=False)
        if f.is_primitive(f.root):
            return tuple(c)
    raise ValueError(f"no primitive polynomial of degree {m} over GF({q})")


class Field:
    """GF(q^m) defined by a monic irreducible ``modulus`` over GF(q).

    ``generator`` is the designated primitive element used for the ``a^k``
    text form; by default it is the class of x when the modulus is
    primitive, otherwise the smallest primitive element.
    """

    def __init__(
        self,
        q: int,
        m: int,
        modulus: Sequence[int],
        generator: int | None = None,
        _check: bool = True,
    ):
        modulus = tuple(int(c) % q for c in modulus)
        if _check:
            if not is_prime(q):
                raise ValueError(f"q={q} is not prime")
            if m < 1 or len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not is_irreducible(modulus, q):
                raise ValueError(f"modulus {modulus} is reducible over GF({q})")
        self.q = q
        self.m = m
        self.modulus = modulus
        self.order = q**m
        self.n1 = self.order - 1
        self.root = self._from_digits(_poly_mod([0, 1], modulus, q))
        self._qpow = [pow(q, i, self.n1) if self.n1 > 1 else 1 for i in range(m)]
        self.exp: list[int] | None = None
        self.log: list[int] | None = None
        self._zech: list[int] | None = None
        if _check:
            if generator is None:
                generator = self.root if self.is_primitive(self.root) else next(
                    a for a in range(1, self.order) if self.is_primitive(a)
                )
            elif not self.is_primitive(generator):
                raise ValueError("generator is not primitive")
            self.generator = generator
            if self.order <= TABLE_LIMIT:
                self._build_tables()
        else:
            self.generator = self.root

    # --- construction helpers ---------------------------------------------

    def _digits(self, a: int) -> list[int]:
        q = self.q
        if q == 2:
            return [(a >> i) & 1 for i in range(self.m)]
        out = []
        for _ in range(self.m):
            a, r = divmod(a, q)
            out.append(r)
        return out

    def _from_digits(self, d: Sequence[int]) -> int:
        a = 0
        for c in reversed(list(d)):
            a = a * self.q + (c % self.q)
        return a

    def _add_slow(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        return self._from_digits([x + y for x, y in zip(self._digits(a), self._digits(b))])

    def _mul_slow(self, a: int, b: int) -> int:
        q = self.q
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self._from_digits(_poly_mod(prod, self.modulus, q))

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    def is_primitive(self, a: int) -> bool:
        if a == 0:
            return False
        if self._pow_slow(a, self.n1) != 1:
            return False
        return all(self._pow_slow(a, self.n1 // p) != 1 for p in prime_factors(self.n1))

    def _build_tables(self) -> None:
        n1 = self.n1
        exp = [0] * (2 * n1)
        log = [-1] * self.order
        x = 1
        for k in range(n1):
            exp[k] = x
            log[x] = k
            x = self._mul_slow(x, self.generator)
        for k in range(n1, 2 * n1):
            exp[k] = exp[k - n1]
        self.exp, self.log = exp, log
        if self.q != 2:
            self._zech = [log[self._add_slow(1, exp[d])] for d in range(n1)]

    # --- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        if self._zech is None:
            return self._add_slow(a, b)
        la = self.log[a]
        z = self._zech[(self.log[b] - la) % self.n1]
        return 0 if z < 0 else self.exp[la + z]

    def neg(self, a: int) -> int:
        if self.q == 2 or a == 0:
            return a
        return self._from_digits([-c for c in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.log is None:
            return self._mul_slow(a, b)
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.log is None:
            return self._pow_slow(a, self.n1 - 1)
        return self.exp[(self.n1 - self.log[a]) % self.n1]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        if self.log is None:
            return self._pow_slow(a, e % self.n1)
        return self.exp[(self.log[a] * e) % self.n1]

    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(q^i); negative i gives the inverse automorphism."""
        if a == 0:
            return 0
        e = self._qpow[i % self.m]
        if self.log is None:
            return self._pow_slow(a, e)
        return self.exp[(self.log[a] * e) % self.n1]

    def alpha(self, k: int) -> int:
        """The k-th power of the generator."""
        if self.exp is None:
            return self._pow_slow(self.generator, k % self.n1)
        return self.exp[k % self.n1]

    def log_of(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        if self.log is None:
            raise ValueError("field too large for log tables")
        return self.log[a]

    def sum(self, values: Iterable[int]) -> int:
        s = 0
        for v in values:
            s = self.add(s, v)
        return s

    def coords(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of ``a`` over GF(q), length m."""
        return tuple(self._digits(a))

    def from_coords(self, digits: Sequence[int]) -> int:
        if len(digits) != self.m:
            raise ValueError("wrong number of coordinates")
        return self._from_digits(digits)

    def elements(self) -> range:
        return range(self.order)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> int:
        return rng.randrange(1 if nonzero else 0, self.order)

    # --- text ------------------------------------------------------------

    def render(self, a: int) -> str:
        if a == 0:
            return "0"
        if a == 1:
            return "1"
        if self.log is None:
            return "poly:" + ",".join(map(str, self._digits(a)))
        return f"a^{self.log[a]}"

    def parse(self, token: str) -> int:
        token = token.strip()
        if token.startswith("poly:"):
            digits = [int(c) for c in token[5:].split(",")]
            if len(digits) != self.m or not all(0 <= c < self.q for c in digits):
                raise ValueError(f"bad coefficient element {token!r}")
            return self._from_digits(digits)
        if token == "0":
            return 0
        if token == "1":
            return 1
        if token == "a":
            return self.generator
        if token.startswith("a^"):
            return self.alpha(int(token[2:]))
        raise ValueError(f"cannot parse field element {token!r}")

    def describe(self) -> str:
        """One-line field descriptor: ``q m modulus-coeffs``."""
        return f"{self.q} {self.m} " + ",".join(map(str, self.modulus))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and (
            self.q, self.m, self.modulus, self.generator
        ) == (other.q, other.m, other.modulus, other.generator)

    def __hash__(self) -> int:
        return hash((self.q, self.m, self.modulus, self.generator))

    def __repr__(self) -> str:
        return f"Field(q={self.q}, m={self.m}, modulus={self.modulus})"


@functools.lru_cache(maxsize=None)
def _cached_field(q: int, m: int, modulus: tuple[int, ...] | None, generator: int | None) -> Field:
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    if modulus is None:
        modulus = find_primitive_modulus(q, m)
    return Field(q, m, modulus, generator)


def make_field(
    q: int, m: int, modulus: Sequence[int] | None = None, generator: int | None = None
) -> Field:
    """Build (and cache) GF(q^m).

    ``modulus`` lists coefficients lowest degree first; when omitted the
    smallest primitive polynomial is used.
    """
    return _cached_field(q, m, tuple(modulus) if modulus is not None else None, generator)


def parse_field_spec(line: str) -> Field:
    q, m, mod = line.split()
    return make_field(int(q), int(m), [int(c) for c in mod.split(",")])


# --- rank metric ------------------------------------------------------------

def rank_of_vector(v: Sequence[int], field: Field) -> int:
    """GF(q)-rank of the m x n expansion of ``v``."""
    from .subspace import rank

    return rank([field.coords(x) for x in v], field.q)


def _as_rng(rng: random.Random | int | None) -> random.Random:
    if isinstance(rng, random.Random):
        return rng
    return random.Random(rng)


def random_rank_error(
    field: Field, n: int, t: int, rng: random.Random | int | None = None
) -> tuple[int, ...]:
    """A length-n vector over GF(q^m) of GF(q)-rank exactly t.

    Built as b * A with b a rank-t row over GF(q^m) and A a full-rank
    t x n matrix over GF(q). ``rng`` is a seed or a ``random.Random``
    (Mersenne Twister), so results reproduce across platforms.
    """
    from .subspace import random_full_rank

    if not 0 <= t <= min(n, field.m):
        raise ValueError(f"rank {t} out of range for n={n}, m={field.m}")
    rng = _as_rng(rng)
    if t == 0:
        return (0,) * n
    while True:
        b = [field.random_element(rng) for _ in range(t)]
        if rank_of_vector(b, field) == t:
            break
    a = random_full_rank(t, n, field.q, rng)
    return tuple(
        field.sum(field.mul(b[r], a[r][c]) for r in range(t)) for c in range(n)
    )
