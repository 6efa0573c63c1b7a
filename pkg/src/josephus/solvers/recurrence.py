"""
Survivor-only solvers.

The survivor recurrence J(1) = 0, J(k) = (J(k-1) + m) mod k works on 0-based
positions; labels are 1-based, so the survivor is J(n) + 1.
"""

from typing import Optional

from ..errors import InvalidInputError
from .problem import OperationCounter, Problem


def solve_recurrence(problem: Problem, counter: Optional[OperationCounter] = None) -> int:
    """Survivor label in O(n) time and O(1) space."""
    position = 0
    for k in range(2, problem.n + 1):
        position = (position + problem.m) % k
    if counter is not None:
        counter.tick(problem.n - 1)
    return position + 1


def closed_form_m2(n: int, counter: Optional[OperationCounter] = None) -> int:
    """
    Survivor label for m = 2.

    Writing n = 2**a + l with 0 <= l < 2**a, the survivor is 2*l + 1; in
    particular it is 1 whenever n is a power of two.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"n must be a positive integer, got {n!r}")
    a = n.bit_length() - 1
    if counter is not None:
        counter.tick(a)
    l = n - (1 << a)
    return 2 * l + 1
