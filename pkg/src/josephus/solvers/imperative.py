"""
Imperative Solver Module

Replays the list-and-cursor program: a list of live prisoners and an index
pointing at the next prisoner to kill, recalculated modulo the list length:

    def removeTen(prisoners):
        pos = 10 - 1
        index = 0
        while len(prisoners) > 1:
            index = (pos + index) % len(prisoners)
            prisoners.pop(index)

with the fixed ``10 - 1`` generalised to ``m - 1``.
"""

import json
from dataclasses import dataclass
from typing import Any, Dict, Hashable, Optional, Tuple

from ..errors import InvalidInputError
from ..log import setup_logger
from .problem import KillSequence, OperationCounter, Problem

logger = setup_logger(__name__)


@dataclass(frozen=True)
class ImperativeState:
    """The (index, prisoners) pair of the imperative program."""

    index: int
    prisoners: Tuple[Hashable, ...]

    def __post_init__(self):
        if not isinstance(self.prisoners, tuple):
            object.__setattr__(self, "prisoners", tuple(self.prisoners))
        if not self.prisoners:
            raise InvalidInputError("prisoners cannot be empty")
        if len(set(self.prisoners)) != len(self.prisoners):
            raise InvalidInputError(f"prisoners must be distinct: {list(self.prisoners)}")
        if not 0 <= self.index < len(self.prisoners):
            raise InvalidInputError(f"index {self.index} out of range for {len(self.prisoners)} prisoners")

    def to_dict(self) -> Dict[str, Any]:
        return {"index": self.index, "prisoners": list(self.prisoners)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ImperativeState":
        return cls(data["index"], tuple(data["prisoners"]))

    def key(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def gamma_line6(state: ImperativeState, m: int) -> ImperativeState:
    """The index update alone: ``index = (pos + index) % len(prisoners)``."""
    size = len(state.prisoners)
    return ImperativeState((m - 1 + state.index) % size, state.prisoners)


def imperative_step(state: ImperativeState, m: int) -> ImperativeState:
    """
    One full pass of the loop body: index update, then the pop.

    A state with a single prisoner is a fixed point (the loop has exited).
    The cursor left behind by the pop may equal the new length; it is
    normalised modulo the length, which the next index update would do anyway.
    """
    size = len(state.prisoners)
    if size == 1:
        return state
    index = (m - 1 + state.index) % size
    prisoners = state.prisoners[:index] + state.prisoners[index + 1:]
    return ImperativeState(index % len(prisoners), prisoners)


def simulate_imperative(
    problem: Problem,
    counter: Optional[OperationCounter] = None,
    record_states: bool = False,
) -> KillSequence:
    """
    Solve by replaying the list-and-cursor program.

    Args:
        problem: The (n, m) instance
        counter: Receives 1 per index update plus 1 per element the pop shifts
        record_states: Keep the normalised ImperativeState after every kill

    Returns:
        KillSequence with the full elimination order
    """
    prisoners = list(range(1, problem.n + 1))
    pos = problem.m - 1
    index = 0
    order = []
    states = []

    while len(prisoners) > 1:
        index = (pos + index) % len(prisoners)
        if counter is not None:
            counter.tick(1 + len(prisoners) - 1 - index)
        order.append(prisoners.pop(index))
        if record_states:
            states.append(ImperativeState(index % len(prisoners), tuple(prisoners)))

    logger.debug("imperative solver: n=%d m=%d survivor=%d", problem.n, problem.m, prisoners[0])
    return KillSequence(problem, tuple(order), prisoners[0], tuple(states))
