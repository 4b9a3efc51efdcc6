"""One test per acceptance criterion; the summary lists PASS/FAIL per line."""

import itertools
import random
import time

import pytest

from lininterp import bench
from lininterp.elimination import minimal_solution
from lininterp.ffield import make_field, random_rank_error
from lininterp.gabidulin import GabidulinCode, example1
from lininterp.interp import EvalFunctional, ModulePoly, MonomialOrder, interpolate
from lininterp.kk import KKCode, list1_radius_ok
from lininterp.linpoly import LinPoly
from lininterp.mv import make_code

# Published (6, 2) worked example: candidates after iteration i and the
# discrepancies that produced them, written with x^(2^i) as x^[i].
# row -> (delta0, delta1) or None, g0 or None, g1
WORKED = {
    2: (
        None,
        "x^[2] + a^5*x^[1] + a^31*x^[0]",
        "a^16*x^[1] + a^1*x^[0] + a^31*y^[0]",
    ),
    3: (
        ("a^7", "0"),
        "x^[3] + a^39*x^[2] + a^34*x^[1] + a^38*x^[0]",
        "a^16*x^[1] + a^1*x^[0] + a^31*y^[0]",
    ),
    4: (
        ("a^50", "a^8"),
        "a^8*x^[3] + a^47*x^[2] + a^46*x^[1] + a^45*x^[0] + a^18*y^[0]",
        "a^32*x^[2] + a^52*x^[1] + a^9*x^[0] + a^62*y^[1] + a^39*y^[0]",
    ),
    5: (
        ("a^18", "a^16"),
        "a^24*x^[3] + a^22*x^[2] + a^47*x^[1] + a^58*x^[0] + a^17*y^[1] + a^49*y^[0]",
        "a^1*x^[3] + a^4*x^[2] + a^40*x^[1] + a^25*x^[0] + a^61*y^[2] + a^55*y^[0]",
    ),
    6: (
        ("a^6", "a^46"),
        None,
        "a^4*x^[2] + x^[1] + a^29*x^[0] + a^4*y^[2] + y^[1] + a^29*y^[0]",
    ),
}
FINAL = "a^4*x^[2] + x^[1] + a^29*x^[0] + a^4*y^[2] + y^[1] + a^29*y^[0]"


def test_worked_example_trace(criterion):
    criterion("Worked-example trace reproduction")
    start = time.perf_counter()
    code, y, _ = example1()
    f = code.field
    order = code.order
    result = code.interpolation(y)
    rows = {rec.index: rec for rec in result.trace}
    table = {
        i: (
            d and tuple(f.parse(v) for v in d),
            [p and ModulePoly.parse(p, f, 1) for p in (g0, g1)],
        )
        for i, (d, g0, g1) in WORKED.items()
    }
    for i, (deltas, polys) in table.items():
        ours = rows[i].candidates
        for j, p in enumerate(polys):
            if p is not None:
                assert order.normalize(ours[j]) == order.normalize(p), (i, j)
        if deltas is None:
            continue
        prev_ours = rows[i - 1].candidates
        prev_table = table[i - 1][1]
        for j, d in enumerate(deltas):
            # the same scalar that relates our g_{i-1,j} to the table's
            scale = f.div(order.leading(prev_ours[j])[2], order.leading(prev_table[j])[2])
            assert rows[i].discrepancies[j] == f.mul(scale, d), (i, j)
    final = ModulePoly.parse(FINAL, f, 1)
    assert order.normalize(result.minimum) == order.normalize(final)
    assert code.decode(y) == (1, 0)
    assert time.perf_counter() - start < 1.0


GAB_CASES = [((2, 4), 4, 2), ((2, 6), 6, 2), ((2, 8), 8, 4)]


def test_gabidulin_radius_sweep(criterion):
    criterion("Gabidulin radius sweep")
    start = time.perf_counter()
    failures = []
    for (q, m), n, k in GAB_CASES:
        field = make_field(q, m)
        code = GabidulinCode.standard(field, n, k)
        for t in range(code.tau + 1):
            rng = random.Random(1000 * n + t)
            for _ in range(500):
                u = tuple(field.random_element(rng) for _ in range(k))
                e = random_rank_error(field, n, t, rng)
                y = tuple(field.add(a, b) for a, b in zip(code.encode(u), e))
                try:
                    ok = code.decode(y) == u
                except Exception:
                    ok = False
                if not ok:
                    failures.append((n, k, t))
    assert not failures
    assert time.perf_counter() - start < 30.0


def oracle_instances():
    rng = random.Random(2024)
    fields = [make_field(2, 3), make_field(2, 4)]
    for idx in range(80):
        field = fields[idx % 2]
        L = 1 + (idx // 2) % 2
        count = rng.randint(1, 5)
        order = MonomialOrder((0,) + tuple(rng.randint(0, 2) for _ in range(L)))
        fs = [EvalFunctional(tuple(field.random_element(rng) for _ in range(L + 1))) for _ in range(count)]
        yield field, order, fs


def oracle_check(field, order, fs):
    res = interpolate(field, fs, order)
    key = order.order_key(res.minimum)
    sol = minimal_solution(field, fs, order, order.monomials_up_to(key))
    return res, key, sol


def test_minimality_oracle(criterion):
    criterion("Minimality oracle")
    n = 0
    for field, order, fs in oracle_instances():
        res, key, sol = oracle_check(field, order, fs)
        assert sol.minimum is not None and sol.key == key
        assert order.normalize(res.minimum) == order.normalize(sol.minimum)
        n += 1
    assert n >= 50


def test_uniqueness_up_to_scalar(criterion):
    criterion("Uniqueness up to scalar")
    for field, order, fs in oracle_instances():
        _, _, sol = oracle_check(field, order, fs)
        assert sol.nullity_at_key == 1


def test_kernel_submodule(criterion):
    criterion("Kernel submodule")
    rng = random.Random(99)
    fields = [make_field(2, 4), make_field(3, 3), make_field(2, 6)]
    for trial in range(1000):
        field = fields[trial % 3]
        L = rng.randint(1, 3)
        comps = [LinPoly(field, [field.random_element(rng) for _ in range(rng.randint(0, 4))]) for _ in range(L + 1)]
        point = [field.random_element(rng) for _ in range(L + 1)]
        point[0] = field.random_element(rng, nonzero=True)
        D = EvalFunctional(tuple(point))
        Q = ModulePoly(field, comps)
        # cancel D(Q) through the x^[0] coefficient of the first component
        fix = LinPoly(field, [field.div(D(Q), point[0])])
        Q = Q - ModulePoly(field, [fix] + [LinPoly(field)] * L)
        assert D(Q) == 0
        l = LinPoly(field, [field.random_element(rng) for _ in range(rng.randint(1, 4))])
        assert D(Q.compose_left(l)) == 0


def test_kk_decodability_region(criterion):
    criterion("KK decodability region")
    field = make_field(2, 5)
    failures = []
    for l, k in [(4, 1), (5, 2)]:
        code = KKCode.standard(field, l, k)
        for rho, t in itertools.product(range(l + 1), range(l + 1)):
            if not list1_radius_ok(l, k, rho, t):
                continue
            rng = random.Random(100 * l + 10 * rho + t)
            for _ in range(200):
                u = tuple(field.random_element(rng) for _ in range(k))
                V = code.encode(u)
                U = code.channel(V, rho, t, rng)
                assert U.dim == l - rho + t
                assert U.intersect(V).dim == l - rho
                assert U.distance(V) == rho + t
                try:
                    ok = code.decode(U) == u
                except Exception:
                    ok = False
                if not ok:
                    failures.append((l, k, rho, t))
    assert not failures


MV_TRIALS = 200


@pytest.mark.parametrize("t", range(4))
def test_mv_interpolation_guarantee(criterion, t):
    criterion(f"MV interpolation guarantee t={t}")
    code = make_code(3, 2, 2, 1, 2, seed=0)
    assert t <= code.max_errors()
    rng = random.Random(7000 + t)
    bad = 0
    for _ in range(MV_TRIALS):
        u = [rng.randrange(code.q)]
        fs = code.extract_points(code.channel(code.encode(u), t, rng))
        res = code.interpolate(fs)
        ok = (
            not res.Q.is_zero()
            and all(D(res.Q) == 0 for D in fs)
            and res.within_bounds
            and code.locus_residual(res.Q, u).is_zero()
        )
        bad += not ok
    assert bad == 0, f"{bad}/{MV_TRIALS} trials violate the guarantee"


def test_complexity_trend(criterion):
    criterion("Complexity trend")
    code = make_code(3, 2, 2, 1, 2, seed=0)
    rows = bench.run(code, range(code.max_errors() + 1), reps=9, seed=0)
    assert [r.t for r in rows] == [0, 1, 2, 3]
    speedups = [r.speedup for r in rows]
    assert all(b > a for a, b in zip(speedups, speedups[1:])), speedups
