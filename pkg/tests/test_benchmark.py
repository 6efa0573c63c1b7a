import pandas as pd
import pytest

from josephus.benchmarks import Benchmark, counter_ratios, geometric_sizes
from josephus.errors import InvalidInputError


def test_geometric_sizes():
    assert geometric_sizes(512, 2, 4) == [512, 1024, 2048, 4096]
    with pytest.raises(InvalidInputError):
        geometric_sizes(512, 1, 4)


def test_counter_growth():
    frame = Benchmark(m=10).run(geometric_sizes(512, 2, 4))
    assert set(frame["solver"]) == {"imperative", "zipper", "order-statistic", "recurrence"}
    ratios = {name: group["ratio"].dropna() for name, group in frame.groupby("solver")}
    assert (ratios["imperative"] >= 3).all()
    assert (ratios["recurrence"] <= 2.2).all()
    assert (ratios["order-statistic"] <= 2.6).all()
    assert frame.groupby("n")["survivor"].nunique().eq(1).all()


def test_counters_are_deterministic():
    first = Benchmark(m=10, solvers=["imperative", "recurrence"]).run([64, 128])
    second = Benchmark(m=10, solvers=["imperative", "recurrence"]).run([64, 128])
    pd.testing.assert_frame_equal(first, second)
    assert list(first.columns) == ["n", "solver", "operations", "survivor", "ratio"]


def test_one_prisoner_costs_nothing():
    frame = Benchmark(m=2).run([1])
    assert "closed-form" in set(frame["solver"])
    assert (frame["operations"] == 0).all()


def test_wall_clock_column():
    frame = Benchmark(m=3, solvers=["zipper"], wall=True).run([8])
    assert "seconds" in frame.columns


def test_ratios_of_a_given_table():
    frame = pd.DataFrame(
        {"n": [1, 2, 4], "solver": ["recurrence"] * 3, "operations": [1, 3, 6], "survivor": [1, 1, 1]}
    )
    assert counter_ratios(frame)["ratio"].tolist()[1:] == [3.0, 2.0]
