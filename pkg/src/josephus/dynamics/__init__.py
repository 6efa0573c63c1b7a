from .states import (
    Demonstration,
    canonical_map,
    circle_system,
    demonstration_systems,
    enumerate_circle_states,
    enumerate_imperative_states,
    imperative_system,
    kill_step_h,
    kill_step_p,
    verify_equivalence,
)
from .system import (
    Counterexample,
    DynSystem,
    IsomorphismVerdict,
    MorphismVerdict,
    SystemMap,
    build_system,
    compose,
    fixed_points,
    identity,
    inverse,
    is_isomorphism,
    is_morphism,
    orbit,
    reachable_states,
    restrict,
    state_key,
)

__all__ = [
    'DynSystem', 'SystemMap', 'Counterexample', 'MorphismVerdict', 'IsomorphismVerdict',
    'build_system', 'restrict', 'is_morphism', 'is_isomorphism', 'identity', 'inverse',
    'compose', 'orbit', 'reachable_states', 'fixed_points', 'state_key',
    'enumerate_circle_states', 'enumerate_imperative_states', 'kill_step_h', 'kill_step_p',
    'canonical_map', 'circle_system', 'imperative_system', 'Demonstration',
    'demonstration_systems', 'verify_equivalence',
]
