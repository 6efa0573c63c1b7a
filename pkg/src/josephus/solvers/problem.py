"""
Problem and Result Types

Shared input and output types of the solvers: the (n, m) problem, the kill
sequence every order-producing solver returns, and the per-invocation counter
of elementary operations used by the benchmark harness.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

import pandas as pd

from ..errors import InvalidInputError


@dataclass(frozen=True)
class Problem:
    """n prisoners labelled 1..n standing in a circle, every m-th one is killed."""

    n: int
    m: int

    def __post_init__(self):
        for name in ("n", "m"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidInputError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise InvalidInputError(f"{name} must be at least 1, got {value}")


@dataclass
class OperationCounter:
    """Counts elementary steps of one solver run."""

    operations: int = 0

    def tick(self, amount: int = 1) -> None:
        self.operations += amount


@dataclass(frozen=True)
class KillSequence:
    """Elimination order plus survivor.

    ``states`` optionally holds the solver state after each kill; it does not
    take part in equality, so traces from different solvers compare by order
    and survivor only.
    """

    problem: Problem
    order: Tuple[int, ...]
    survivor: int
    states: Tuple[Any, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.order, tuple):
            object.__setattr__(self, "order", tuple(self.order))
        expected = set(range(1, self.problem.n + 1))
        if len(self.order) != self.problem.n - 1 or set(self.order) | {self.survivor} != expected:
            raise InvalidInputError(
                f"order {list(self.order)} and survivor {self.survivor} are not a permutation of 1..{self.problem.n}"
            )

    @property
    def n(self) -> int:
        return self.problem.n

    @property
    def m(self) -> int:
        return self.problem.m

    def to_dict(self, include_states: bool = False) -> Dict[str, Any]:
        data = {"n": self.n, "m": self.m, "order": list(self.order), "survivor": self.survivor}
        if include_states:
            data["states"] = [state.to_dict() for state in self.states]
        return data

    def rows(self) -> List[Dict[str, int]]:
        """One record per kill: step number, killed label, prisoners left afterwards."""
        return [
            {"step": step, "killed": killed, "remaining_count": self.n - step}
            for step, killed in enumerate(self.order, start=1)
        ]

    def to_frame(self, include_states: bool = False) -> pd.DataFrame:
        frame = pd.DataFrame(self.rows(), columns=["step", "killed", "remaining_count"])
        if include_states and self.states:
            frame["state"] = [state.key() for state in self.states]
        return frame
