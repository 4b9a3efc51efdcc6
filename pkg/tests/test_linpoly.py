import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from lininterp.ffield import make_field
from lininterp.linpoly import LinPoly, annihilator

GF64 = make_field(2, 6, (1, 1, 0, 0, 0, 0, 1))
GF16 = make_field(2, 4)
GF27 = make_field(3, 3)
a = GF64.alpha


def rand_poly(field, rng, max_deg, nonzero=False):
    while True:
        p = LinPoly(field, [field.random_element(rng) for _ in range(rng.randrange(max_deg + 2))])
        if p.coeffs or not nonzero:
            return p


def test_trimming_and_degree():
    p = LinPoly(GF64, [1, 0, 0])
    assert p.coeffs == (1,) and p.q_degree == 0
    assert LinPoly(GF64).q_degree == -1 and LinPoly(GF64).is_zero()


def test_add_scale_examples():
    l = LinPoly.parse("x^[1] + a^1*x^[0]", GF64)
    assert l + LinPoly.zero(GF64) == l
    assert (l + l).is_zero()
    assert l.scale(a(3)) == LinPoly.parse("a^3*x^[1] + a^4*x^[0]", GF64)


def test_compose_examples():
    x1 = LinPoly.monomial(GF64, 1)
    assert x1 * x1 == LinPoly.monomial(GF64, 2)
    l = LinPoly.parse("a^5*x^[3] + a^9*x^[0]", GF64)
    ident = LinPoly.identity(GF64)
    assert l * ident == ident * l == l
    gf4 = make_field(2, 2, (1, 1, 1))
    w = gf4.generator
    assert LinPoly.monomial(gf4, 1, w) * LinPoly(gf4, [w]) == LinPoly.monomial(gf4, 1)


def test_eval_examples():
    g0 = LinPoly.parse("x^[2] + a^5*x^[1] + a^31*x^[0]", GF64)
    assert g0(a(32)) == a(7)
    assert g0(0) == 0
    b = a(11)
    assert LinPoly.monomial(GF64, 1)(b) == GF64.mul(b, b)


def test_shift_examples():
    assert LinPoly.identity(GF64).frobenius_shift() == LinPoly.monomial(GF64, 1)
    assert LinPoly(GF64, [a(31)]).frobenius_shift() == LinPoly.monomial(GF64, 1, a(62))
    l = LinPoly.parse("a^3*x^[1] + a^40*x^[0]", GF64)
    assert l.frobenius_shift().frobenius_shift() == LinPoly.monomial(GF64, 2) * l


def test_noncommutative():
    rng = random.Random(0)
    gf4 = make_field(2, 2)
    found = False
    for _ in range(100):
        l1, l2 = rand_poly(gf4, rng, 2), rand_poly(gf4, rng, 2)
        if l1 * l2 != l2 * l1:
            found = True
            break
    assert found


@pytest.mark.parametrize("field", [GF16, GF27], ids=str)
def test_ring_properties(field):
    rng = random.Random(field.order)
    for _ in range(200):
        l1 = rand_poly(field, rng, 3, nonzero=True)
        l2 = rand_poly(field, rng, 3, nonzero=True)
        l3 = rand_poly(field, rng, 3)
        c = l1 * l2
        assert not c.is_zero()
        assert c.q_degree == l1.q_degree + l2.q_degree
        assert (l1 * l2) * l3 == l1 * (l2 * l3)
        assert l1 * (l2 + l3) == l1 * l2 + l1 * l3
        b = field.random_element(rng)
        assert c(b) == l1(l2(b))


@settings(max_examples=100)
@given(
    st.lists(st.integers(0, 26), max_size=4),
    st.integers(0, 26),
    st.integers(0, 26),
    st.integers(0, 2),
    st.integers(0, 2),
)
def test_q_linearity(coeffs, b1, b2, lam1, lam2):
    f = GF27
    l = LinPoly(f, coeffs)
    lhs = l(f.add(f.mul(lam1, b1), f.mul(lam2, b2)))
    rhs = f.add(f.mul(lam1, l(b1)), f.mul(lam2, l(b2)))
    assert lhs == rhs


def test_right_divide_example():
    n = LinPoly.parse("a^4*x^[2] + x^[1] + a^29*x^[0]", GF64)
    f, r = n.right_divide(n)
    assert f == LinPoly.identity(GF64) and r.is_zero()
    assert n.right_divide(LinPoly.identity(GF64)) == (n, LinPoly.zero(GF64))
    with pytest.raises(ZeroDivisionError):
        n.right_divide(LinPoly.zero(GF64))


@pytest.mark.parametrize("field", [GF16, GF27], ids=str)
def test_right_divide_roundtrip(field):
    rng = random.Random(3)
    for _ in range(200):
        v = rand_poly(field, rng, 3, nonzero=True)
        f = rand_poly(field, rng, 3)
        rem = rand_poly(field, rng, max(v.q_degree - 1, -1)) if v.q_degree > 0 else LinPoly(field)
        n = v * f + rem
        got_f, got_r = n.right_divide(v)
        assert got_f == f and got_r == rem
        assert got_r.q_degree < v.q_degree


def test_annihilator_examples():
    assert annihilator(GF64, []) == LinPoly.identity(GF64)
    b = a(13)
    p = annihilator(GF64, [b])
    assert p == LinPoly(GF64, [GF64.neg(GF64.pow(b, 1)), 1])
    assert p(b) == 0
    gf8 = make_field(2, 3)
    p = annihilator(gf8, [1, 2])
    assert p.q_degree == 2 and p.lead == 1
    span = {0, 1, 2, 3}
    assert all(p(x) == 0 for x in span)
    assert all(p(x) != 0 for x in range(8) if x not in span)


def test_annihilator_skips_dependent_points_odd_q():
    f = GF27
    p = annihilator(f, [1, 2, 3, 5])  # 2 = 2*1, 5 = 3 + 2*1
    assert p.q_degree == 2
    roots = [x for x in range(27) if p(x) == 0]
    assert len(roots) == 9


def test_text_roundtrip():
    rng = random.Random(8)
    for _ in range(50):
        p = rand_poly(GF64, rng, 4)
        assert LinPoly.parse(p.to_text(), GF64) == p
    assert LinPoly.parse("0", GF64).is_zero()
    with pytest.raises(ValueError):
        LinPoly.parse("a^3*z^[1]", GF64)
