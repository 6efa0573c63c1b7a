"""
Discrete Dynamical Systems Module

A finite set of states paired with a total endomap, maps between such systems,
and the checks that a map commutes with the dynamics (a morphism) and has a
commuting inverse (an isomorphism).

States are ordered by their serialized form (``state_key``); every check walks
states in that order, so reported counterexamples are deterministic.
"""

import json
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from dataclasses import dataclass
from typing import Any, Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional

from ..errors import ClosureError, InvalidInputError
from ..log import setup_logger

logger = setup_logger(__name__)

State = Hashable


def state_key(state: State) -> str:
    """Serialized canonical form of a state."""
    if hasattr(state, "key"):
        return state.key()
    return json.dumps(state, sort_keys=True, separators=(",", ":"), default=repr)


def state_to_data(state: State) -> Any:
    return state.to_dict() if hasattr(state, "to_dict") else state


class DynSystem:
    """A finite state set with a total endomap. Build with ``build_system``."""

    def __init__(self, states: FrozenSet[State], table: Dict[State, State], name: str = ""):
        self.states = states
        self._table = table
        self.name = name
        self._ordered = sorted(states, key=state_key)

    def step(self, state: State) -> State:
        try:
            return self._table[state]
        except KeyError:
            raise InvalidInputError(f"{state!r} is not a state of {self.name or 'the system'}") from None

    __call__ = step

    def ordered_states(self) -> List[State]:
        return list(self._ordered)

    def __len__(self):
        return len(self.states)

    def __contains__(self, state):
        return state in self.states

    def __repr__(self):
        return f"DynSystem({self.name or 'unnamed'}, {len(self.states)} states)"


def build_system(states: Iterable[State], step: Callable[[State], State], name: str = "") -> DynSystem:
    """
    Pair a finite state set with its endomap, checking closure.

    Args:
        states: Finite, non-empty collection of hashable states
        step: One-step dynamics, called once per state
        name: Label used in diagrams and messages

    Returns:
        The validated DynSystem

    Raises:
        InvalidInputError: if there are no states
        ClosureError: naming the first state (in key order) whose image is not a state
    """
    state_set = frozenset(states)
    if not state_set:
        raise InvalidInputError("A dynamical system needs at least one state.")
    table = {}
    for state in sorted(state_set, key=state_key):
        image = step(state)
        if image not in state_set:
            raise ClosureError(state, image, f"step({state!r}) = {image!r} escapes the state set")
        table[state] = image
    logger.debug("built system %s with %d states", name or "unnamed", len(state_set))
    return DynSystem(state_set, table, name)


def restrict(system: DynSystem, states: Iterable[State], name: str = "") -> DynSystem:
    """The sub-system on ``states``; they must be closed under the step."""
    return build_system(states, system.step, name or system.name)


class SystemMap:
    """A total function from the states of one system to the states of another."""

    def __init__(self, source: DynSystem, target: DynSystem, mapping: Callable[[State], State], name: str = "f"):
        self.source = source
        self.target = target
        self.name = name
        table = {}
        for state in source.ordered_states():
            image = mapping(state)
            if image not in target.states:
                raise ClosureError(state, image, f"{name}({state!r}) = {image!r} is not a state of the target")
            table[state] = image
        self._table = table

    def __call__(self, state: State) -> State:
        return self._table[state]

    def items(self):
        return self._table.items()


@dataclass(frozen=True)
class Counterexample:
    """A state where the square fails: f(alpha(x)) differs from beta(f(x))."""

    state: State
    map_after_step: State
    step_after_map: State

    def to_dict(self) -> Dict[str, Any]:
        return {
            "state": state_to_data(self.state),
            "map_after_step": state_to_data(self.map_after_step),
            "step_after_map": state_to_data(self.step_after_map),
        }


@dataclass(frozen=True)
class MorphismVerdict:
    holds: bool
    counterexample: Optional[Counterexample]
    states_checked: int

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class IsomorphismVerdict:
    holds: bool
    reason: Optional[str]
    morphism: MorphismVerdict
    inverse: Optional[MorphismVerdict] = None

    def __bool__(self):
        return self.holds

    @property
    def counterexample(self) -> Optional[Counterexample]:
        if self.morphism.counterexample is not None:
            return self.morphism.counterexample
        return self.inverse.counterexample if self.inverse is not None else None


def _first_failure(f: SystemMap, states: List[State]) -> Optional[Counterexample]:
    alpha, beta = f.source.step, f.target.step
    for state in states:
        left = f(alpha(state))
        right = beta(f(state))
        if left != right:
            return Counterexample(state, left, right)
    return None


def is_morphism(f: SystemMap, jobs: int = 1) -> MorphismVerdict:
    """
    Check f(alpha(x)) == beta(f(x)) for every source state.

    With ``jobs > 1`` the ordered states are split into contiguous slices
    checked in worker processes; the earliest slice with a failure supplies
    the counterexample, so the result does not depend on scheduling. The map
    is sent to the workers, so its states must be picklable.
    """
    states = f.source.ordered_states()
    if jobs <= 1 or len(states) < 2:
        found = _first_failure(f, states)
    else:
        width = -(-len(states) // jobs)
        slices = [states[i:i + width] for i in range(0, len(states), width)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_first_failure, repeat(f), slices))
        found = next((result for result in results if result is not None), None)
    verdict = MorphismVerdict(found is None, found, len(states))
    logger.info("morphism check of %s over %d states: %s", f.name, len(states), "holds" if verdict.holds else "fails")
    return verdict


def inverse(f: SystemMap) -> SystemMap:
    """The inverse map; f must be a bijection onto the target states."""
    table = {image: state for state, image in f.items()}
    if len(table) != len(f.source.states) or len(table) != len(f.target.states):
        raise InvalidInputError(f"{f.name} is not a bijection")
    return SystemMap(f.target, f.source, table.__getitem__, name=f"{f.name}^-1")


def is_isomorphism(f: SystemMap, jobs: int = 1) -> IsomorphismVerdict:
    """
    A morphism that is a bijection onto the target and whose inverse is a morphism.

    ``reason`` names the first failing condition: "not-a-morphism",
    "not-injective", "not-surjective" or "inverse-not-a-morphism".
    """
    morphism = is_morphism(f, jobs)
    if not morphism.holds:
        return IsomorphismVerdict(False, "not-a-morphism", morphism)
    images = {image for _, image in f.items()}
    if len(images) != len(f.source.states):
        return IsomorphismVerdict(False, "not-injective", morphism)
    if images != f.target.states:
        return IsomorphismVerdict(False, "not-surjective", morphism)
    back = is_morphism(inverse(f), jobs)
    if not back.holds:
        return IsomorphismVerdict(False, "inverse-not-a-morphism", morphism, back)
    return IsomorphismVerdict(True, None, morphism, back)


def identity(system: DynSystem) -> SystemMap:
    return SystemMap(system, system, lambda state: state, name="id")


def compose(g: SystemMap, f: SystemMap) -> SystemMap:
    """g after f; f's target must be g's source."""
    if f.target.states != g.source.states:
        raise InvalidInputError(f"cannot compose {g.name} after {f.name}: codomain and domain differ")
    return SystemMap(f.source, g.target, lambda state: g(f(state)), name=f"{g.name}.{f.name}")


def orbit(system: DynSystem, state: State, steps: int) -> List[State]:
    """state, step(state), ..., step^steps(state)."""
    trajectory = [state]
    for _ in range(steps):
        state = system.step(state)
        trajectory.append(state)
    return trajectory


def reachable_states(system: DynSystem, start: State, *more: State) -> FrozenSet[State]:
    """All states visited by iterating the step from ``start`` (and any further starts)."""
    seen = set()
    for state in (start,) + more:
        while state not in seen:
            seen.add(state)
            state = system.step(state)
    return frozenset(seen)


def fixed_points(system: DynSystem) -> List[State]:
    return [state for state in system.ordered_states() if system.step(state) == state]
