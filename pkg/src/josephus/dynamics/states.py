"""
State Spaces Module

The two concrete systems compared by the verification:

- H: every circle with distinct labels drawn from a universe, stepped by one
  kill (``remove_nth``) or by a bare rotation (``next``);
- P: every (index, prisoners) pair over the same universe, stepped by the full
  loop body of the imperative program or by its index update alone;

together with the canonical map from circles to imperative states.
"""

from dataclasses import dataclass
from itertools import permutations
from typing import Any, Dict, Hashable, Iterable, List, Set

from ..config import DEMO_M, DEMO_UNIVERSE, MAX_UNIVERSE
from ..errors import InvalidInputError, ResourceGuardError
from ..log import setup_logger
from ..solvers.imperative import ImperativeState, gamma_line6, imperative_step
from ..solvers.zipper import remove_nth
from ..structures.circle import Circle, mk_circle
from .system import (
    DynSystem,
    SystemMap,
    build_system,
    is_isomorphism,
    is_morphism,
    reachable_states,
    restrict,
)

logger = setup_logger(__name__)

READINGS = ("kill-step", "line6")


def _checked_universe(universe: Iterable[Hashable], limit: int) -> List[Hashable]:
    labels = sorted(set(universe))
    if not labels:
        raise InvalidInputError("The universe of labels cannot be empty.")
    if len(labels) > limit:
        raise ResourceGuardError(
            f"Universe of {len(labels)} labels exceeds the enumeration limit of {limit}.",
            limit=limit,
            requested=len(labels),
        )
    return labels


def enumerate_circle_states(universe: Iterable[Hashable], limit: int = MAX_UNIVERSE) -> Set[Circle]:
    """Every circle whose labels are a non-empty subset of ``universe``, in every rotation."""
    labels = _checked_universe(universe, limit)
    states = set()
    for size in range(1, len(labels) + 1):
        for arrangement in permutations(labels, size):
            states.add(Circle(arrangement[0], arrangement[1:]))
    logger.debug("enumerated %d circle states over %d labels", len(states), len(labels))
    return states


def enumerate_imperative_states(universe: Iterable[Hashable], limit: int = MAX_UNIVERSE) -> Set[ImperativeState]:
    """Every (index, prisoners) pair with distinct prisoners from ``universe``."""
    labels = _checked_universe(universe, limit)
    states = set()
    for size in range(1, len(labels) + 1):
        for arrangement in permutations(labels, size):
            for index in range(size):
                states.add(ImperativeState(index, arrangement))
    logger.debug("enumerated %d imperative states over %d labels", len(states), len(labels))
    return states


def kill_step_h(circle: Circle, m: int) -> Circle:
    """One kill on the circle; a singleton is a fixed point."""
    if circle.is_singleton():
        return circle
    return remove_nth(m, circle)[1]


def kill_step_p(state: ImperativeState, m: int) -> ImperativeState:
    return imperative_step(state, m)


def _ascending_rotation(labels) -> bool:
    descents = sum(1 for i, label in enumerate(labels) if label > labels[(i + 1) % len(labels)])
    return descents <= 1


def canonical_map(circle: Circle, m: int) -> ImperativeState:
    """
    The imperative state representing the same elimination configuration.

    The prisoners list is the circle read from an anchor label and the index
    is the position of the focus. When the circle's cyclic order is an
    ascending rotation (every circle reachable from ``mk_circle(1, [2..n])``)
    the anchor is the smallest label, so the list is the surviving labels in
    their original order. Otherwise the anchor is taken from the circle one
    kill later, which keeps the kill square commuting on every circle.
    The anchor therefore depends on m: the map commutes with the kill step
    for that same m only.
    """
    later = circle
    while not _ascending_rotation(later.labels()):
        later = kill_step_h(later, m)
    anchor = min(later.labels())

    labels = circle.labels()
    start = labels.index(anchor)
    prisoners = labels[start:] + labels[:start]
    return ImperativeState(prisoners.index(circle.current), prisoners)


def circle_system(universe: Iterable[Hashable], m: int = DEMO_M, reading: str = "kill-step") -> DynSystem:
    """(H, kill step) or, for the ``line6`` reading, (H, next)."""
    states = enumerate_circle_states(universe)
    if reading == "kill-step":
        return build_system(states, lambda c: kill_step_h(c, m), name="H")
    if reading == "line6":
        return build_system(states, lambda c: c.next(), name="H")
    raise InvalidInputError(f"Unknown reading {reading!r}; choose from {', '.join(READINGS)}")


def imperative_system(universe: Iterable[Hashable], m: int = DEMO_M, reading: str = "kill-step") -> DynSystem:
    """(P, loop body) or, for the ``line6`` reading, (P, index update)."""
    states = enumerate_imperative_states(universe)
    if reading == "kill-step":
        return build_system(states, lambda s: kill_step_p(s, m), name="P")
    if reading == "line6":
        return build_system(states, lambda s: gamma_line6(s, m), name="P")
    raise InvalidInputError(f"Unknown reading {reading!r}; choose from {', '.join(READINGS)}")


@dataclass
class Demonstration:
    """The full systems, the canonical map, and their reachable parts."""

    universe_size: int
    m: int
    reading: str
    h: DynSystem
    p: DynSystem
    f: SystemMap
    start: Circle
    h_reachable: DynSystem
    p_reachable: DynSystem
    f_reachable: SystemMap


def demonstration_systems(universe_size: int = DEMO_UNIVERSE, m: int = DEMO_M, reading: str = "kill-step") -> Demonstration:
    """
    Build H and P over labels 1..universe_size with the canonical map between them.

    The reachable parts start from ``mk_circle(1, [2..universe_size])`` and its
    image, the imperative program's initial state ``(0, [1..universe_size])``.
    """
    if universe_size < 1:
        raise InvalidInputError(f"universe size must be at least 1, got {universe_size}")
    if m < 1:
        raise InvalidInputError(f"m must be at least 1, got {m}")
    if universe_size > MAX_UNIVERSE:
        raise ResourceGuardError(
            f"Universe of {universe_size} labels exceeds the enumeration limit of {MAX_UNIVERSE}.",
            limit=MAX_UNIVERSE,
            requested=universe_size,
        )
    universe = range(1, universe_size + 1)
    h = circle_system(universe, m, reading)
    p = imperative_system(universe, m, reading)
    f = SystemMap(h, p, lambda c: canonical_map(c, m), name="f")

    start = mk_circle(1, range(2, universe_size + 1))
    h_reachable = restrict(h, reachable_states(h, start), name="H reachable")
    # for a morphism this is exactly what is reachable from f(start)
    p_reachable = restrict(p, reachable_states(p, *(f(c) for c in h_reachable.states)), name="P reachable")
    f_reachable = SystemMap(h_reachable, p_reachable, f, name="f")
    return Demonstration(universe_size, m, reading, h, p, f, start, h_reachable, p_reachable, f_reachable)


def verify_equivalence(universe_size: int = DEMO_UNIVERSE, m: int = DEMO_M, reading: str = "kill-step", jobs: int = 1) -> Dict[str, Any]:
    """
    Run both checks for the canonical map and return the JSON verdict.

    The morphism check covers the full enumeration of H; the isomorphism check
    covers the states reachable from the canonical start.
    """
    demo = demonstration_systems(universe_size, m, reading)
    morphism = is_morphism(demo.f, jobs)
    isomorphism = is_isomorphism(demo.f_reachable, jobs)

    counterexample = morphism.counterexample or isomorphism.counterexample
    verdict = {
        "morphism": morphism.holds,
        "isomorphism": isomorphism.holds,
        "counterexample": counterexample.to_dict() if counterexample is not None else None,
        "states_checked": morphism.states_checked,
        "reachable_states": len(demo.h_reachable),
        "reading": reading,
        "universe": universe_size,
        "m": m,
    }
    if isomorphism.reason is not None:
        verdict["failure"] = isomorphism.reason
    logger.info("verification universe=%d m=%d reading=%s: morphism=%s isomorphism=%s",
                universe_size, m, reading, morphism.holds, isomorphism.holds)
    return verdict


__all__ = [
    "READINGS", "Demonstration", "canonical_map", "circle_system", "demonstration_systems",
    "enumerate_circle_states", "enumerate_imperative_states", "imperative_system",
    "kill_step_h", "kill_step_p", "verify_equivalence",
]
