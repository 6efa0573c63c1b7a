from .imperative import ImperativeState, gamma_line6, imperative_step, simulate_imperative
from .order_statistic import solve_order_statistic
from .problem import KillSequence, OperationCounter, Problem
from .recurrence import closed_form_m2, solve_recurrence
from .registry import SOLVERS, SolverInfo, get_solver
from .zipper import remove_nth, solve_zipper

__all__ = [
    'Problem', 'KillSequence', 'OperationCounter', 'ImperativeState',
    'simulate_imperative', 'imperative_step', 'gamma_line6',
    'solve_zipper', 'remove_nth', 'solve_recurrence', 'closed_form_m2',
    'solve_order_statistic', 'SOLVERS', 'SolverInfo', 'get_solver',
]
