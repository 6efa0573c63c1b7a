"""
Zipper Solver Module

Solves the problem with the circular zipper:

    removeNth 1 circle = remove circle
    removeNth n circle = removeNth (n-1) (next circle)

    romans numPrisoners n =
      let prisoners = mkCircleOf (1, [2..numPrisoners])
      in current (until isSingleton (removeNth n) prisoners)
"""

from typing import Hashable, Optional, Tuple

from ..errors import InvalidInputError
from ..log import setup_logger
from ..structures.circle import Circle, mk_circle
from .problem import KillSequence, OperationCounter, Problem

logger = setup_logger(__name__)


def remove_nth(m: int, circle: Circle, counter: Optional[OperationCounter] = None) -> Tuple[Hashable, Circle]:
    """
    Apply ``next`` m-1 times, then ``remove``.

    Args:
        m: Kill step, at least 1
        circle: Circle to count from; its focus counts as 1
        counter: Receives m ticks, one per next and one for the remove

    Returns:
        Tuple of the removed label and the remaining circle. On a singleton
        the single label is reported and the circle is unchanged.
    """
    if m < 1:
        raise InvalidInputError(f"m must be at least 1, got {m}")
    circle = circle.advance(m - 1)
    if counter is not None:
        counter.tick(m)
    return circle.current, circle.remove()


def solve_zipper(
    problem: Problem,
    counter: Optional[OperationCounter] = None,
    record_states: bool = False,
) -> KillSequence:
    """Solve by folding remove_nth over the circle until one prisoner is left."""
    circle = mk_circle(1, range(2, problem.n + 1))
    order = []
    states = []

    while not circle.is_singleton():
        killed, circle = remove_nth(problem.m, circle, counter)
        order.append(killed)
        if record_states:
            states.append(circle)

    logger.debug("zipper solver: n=%d m=%d survivor=%d", problem.n, problem.m, circle.current)
    return KillSequence(problem, tuple(order), circle.current, tuple(states))
