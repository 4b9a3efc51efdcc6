"""Timing of the iterative interpolation against Gaussian elimination on
MV interpolation instances."""

from __future__ import annotations

import csv
import io
import random
import statistics
import time
from dataclasses import dataclass
from typing import Sequence

from .elimination import minimal_solution
from .mv import MVCode


class EquivalenceError(RuntimeError):
    pass


@dataclass
class BenchRow:
    t: int
    functionals: int
    interp_time: int
    gaussian_time: int

    @property
    def speedup(self) -> float:
        return self.gaussian_time / self.interp_time


def _median_ns(fn, reps: int) -> int:
    samples = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    return int(statistics.median(samples))


def bench_instance(code: MVCode, t: int, seed: int):
    rng = random.Random(seed * 1009 + t)
    u = [rng.randrange(code.q) for _ in range(code.k)]
    U = code.channel(code.encode(u), t, rng)
    return u, code.extract_points(U)


def run(code: MVCode, t_values: Sequence[int], reps: int = 9, seed: int = 0) -> list[BenchRow]:
    """One row per t; both solvers must agree up to a scalar before timing."""
    order = code.order
    rows = []
    for t in t_values:
        _, functionals = bench_instance(code, t, seed)
        fast = code.interpolate(functionals).Q
        slow = minimal_solution(code.big, functionals, order).minimum
        if slow is None or order.normalize(fast) != order.normalize(slow):
            raise EquivalenceError(f"solvers disagree at t={t}")
        rows.append(
            BenchRow(
                t,
                len(functionals),
                _median_ns(lambda: code.interpolate(functionals), reps),
                _median_ns(lambda: minimal_solution(code.big, functionals, order), reps),
            )
        )
    return rows


def to_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "interp_time", "gaussian_time", "speedup"])
    for r in rows:
        w.writerow([r.t, r.interp_time, r.gaussian_time, f"{r.speedup:.4f}"])
    return buf.getvalue()
