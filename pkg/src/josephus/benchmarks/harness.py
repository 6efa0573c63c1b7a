"""
Benchmark Harness Module

Runs solvers over a geometric series of problem sizes and tabulates the
elementary-operation counters. Counters are deterministic, so their growth
between successive sizes is a testable stand-in for asymptotic cost; wall
clock time is recorded only on request.
"""

import time
from typing import Iterable, List, Optional

import pandas as pd

from ..config import BENCH_COUNT, BENCH_FACTOR, BENCH_START, DEFAULT_M
from ..errors import InvalidInputError
from ..log import setup_logger
from ..solvers.problem import OperationCounter, Problem
from ..solvers.registry import SOLVERS, get_solver

logger = setup_logger(__name__)


def geometric_sizes(start: int = BENCH_START, factor: int = BENCH_FACTOR, count: int = BENCH_COUNT) -> List[int]:
    """start, start*factor, ..., count terms."""
    if start < 1 or factor < 2 or count < 1:
        raise InvalidInputError("Need start >= 1, factor >= 2 and count >= 1.")
    return [start * factor ** i for i in range(count)]


class Benchmark:
    def __init__(self, m: int = DEFAULT_M, solvers: Optional[Iterable[str]] = None, wall: bool = False):
        self.m = m
        self.wall = wall
        names = list(solvers) if solvers else list(SOLVERS)
        self.solvers = [get_solver(name) for name in names]

    def applicable(self):
        """Solvers able to run with this m (the closed form needs m = 2)."""
        probe = Problem(1, self.m)
        return [solver for solver in self.solvers if solver.supports(probe)]

    def measure(self, n: int):
        """One row per applicable solver for problem size n."""
        problem = Problem(n, self.m)
        rows = []
        for solver in self.applicable():
            counter = OperationCounter()
            started = time.perf_counter()
            survivor = solver.survivor(problem, counter)
            elapsed = time.perf_counter() - started
            row = {"n": n, "solver": solver.name, "operations": counter.operations, "survivor": survivor}
            if self.wall:
                row["seconds"] = elapsed
            rows.append(row)
        return rows

    def run(self, sizes: Iterable[int]) -> pd.DataFrame:
        """
        Measure every solver at every size.

        Args:
            sizes: Problem sizes, usually from geometric_sizes()

        Returns:
            DataFrame with columns n, solver, operations, survivor, ratio (and
            seconds when wall clock timing is on), sorted by solver then n
        """
        rows = []
        for n in sizes:
            logger.info("benchmarking n=%d m=%d", n, self.m)
            rows.extend(self.measure(n))
        columns = ["n", "solver", "operations", "survivor"] + (["seconds"] if self.wall else [])
        frame = pd.DataFrame(rows, columns=columns)
        return counter_ratios(frame)


def counter_ratios(frame: pd.DataFrame) -> pd.DataFrame:
    """Adds ``ratio``: operations divided by the previous size's operations, per solver."""
    if frame.empty:
        frame = frame.copy()
        frame["ratio"] = pd.Series(dtype=float)
        return frame
    order = {solver.name: rank for rank, solver in enumerate(SOLVERS.values())}
    frame = frame.sort_values(["solver", "n"], key=lambda col: col.map(order) if col.name == "solver" else col)
    frame = frame.reset_index(drop=True)
    frame["ratio"] = frame.groupby("solver")["operations"].pct_change() + 1
    return frame
