"""
Order-Statistic Solver Module

Produces the full elimination order in O(n log n). The imperative cursor is a
rank among the live prisoners, so instead of shifting a list the solver keeps
a Fenwick tree of alive flags and selects the prisoner of that rank.
"""

from typing import Optional

from ..log import setup_logger
from ..structures.fenwick import FenwickTree
from .problem import KillSequence, OperationCounter, Problem

logger = setup_logger(__name__)


def solve_order_statistic(problem: Problem, counter: Optional[OperationCounter] = None) -> KillSequence:
    """
    Solve with rank selection over a binary indexed tree.

    Args:
        problem: The (n, m) instance
        counter: Receives one tick per tree-descent step and per tree-update
            step; building the tree is not counted

    Returns:
        KillSequence identical to the one the imperative solver produces
    """
    # the counter is attached after the build so construction stays uncounted
    alive = FenwickTree(problem.n, fill=1)
    alive.counter = counter
    remaining = problem.n
    index = 0
    order = []

    while remaining > 1:
        index = (problem.m - 1 + index) % remaining
        position = alive.find_kth(index + 1)
        alive.increment(position, -1)
        order.append(position)
        remaining -= 1

    alive.counter = None
    survivor = alive.find_kth(1) if problem.n > 1 else 1
    logger.debug("order-statistic solver: n=%d m=%d survivor=%d", problem.n, problem.m, survivor)
    return KillSequence(problem, tuple(order), survivor)
