"""Lookup of solvers by the names the command line and the benchmark use."""

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Union

from ..errors import InvalidInputError
from .imperative import simulate_imperative
from .order_statistic import solve_order_statistic
from .problem import KillSequence, OperationCounter, Problem
from .recurrence import closed_form_m2, solve_recurrence
from .zipper import solve_zipper


@dataclass(frozen=True)
class SolverInfo:
    name: str
    function: Callable
    produces_order: bool
    records_states: bool = False
    only_m2: bool = False
    description: str = ""

    def run(self, problem: Problem, counter: Optional[OperationCounter] = None) -> Union[KillSequence, int]:
        """Run the solver; survivor-only solvers return a label."""
        if self.only_m2:
            if problem.m != 2:
                raise InvalidInputError(f"solver {self.name!r} only handles m = 2, got m = {problem.m}")
            return self.function(problem.n, counter)
        return self.function(problem, counter)

    def survivor(self, problem: Problem, counter: Optional[OperationCounter] = None) -> int:
        result = self.run(problem, counter)
        return result.survivor if isinstance(result, KillSequence) else result

    def supports(self, problem: Problem) -> bool:
        return not self.only_m2 or problem.m == 2


SOLVERS: Dict[str, SolverInfo] = {
    info.name: info
    for info in (
        SolverInfo("imperative", simulate_imperative, True, records_states=True,
                   description="list and cursor replay, O(n^2)"),
        SolverInfo("zipper", solve_zipper, True, records_states=True,
                   description="circular zipper, O(n m) rotations"),
        SolverInfo("order-statistic", solve_order_statistic, True,
                   description="Fenwick rank selection, O(n log n)"),
        SolverInfo("recurrence", solve_recurrence, False,
                   description="survivor recurrence, O(n)"),
        SolverInfo("closed-form", closed_form_m2, False, only_m2=True,
                   description="m = 2 closed form, O(log n)"),
    )
}


def get_solver(name: str) -> SolverInfo:
    try:
        return SOLVERS[name]
    except KeyError:
        raise InvalidInputError(f"Unknown solver {name!r}; choose from {', '.join(SOLVERS)}") from None
