__version__ = "0.1.0"

from .data.fetcher import DocumentFetcher
from .dynamics.states import canonical_map, demonstration_systems, verify_equivalence
from .dynamics.system import DynSystem, SystemMap, build_system, is_isomorphism, is_morphism
from .literate.document import parse
from .literate.tangle import tangle
from .literate.weave import weave
from .solvers.imperative import simulate_imperative
from .solvers.order_statistic import solve_order_statistic
from .solvers.problem import KillSequence, Problem
from .solvers.recurrence import closed_form_m2, solve_recurrence
from .solvers.zipper import remove_nth, solve_zipper
from .structures.circle import Circle, mk_circle
from .visualization.diagram import InternalDiagram, export_internal_diagram

__all__ = [
    'Problem', 'KillSequence', 'Circle', 'mk_circle', 'remove_nth',
    'simulate_imperative', 'solve_zipper', 'solve_order_statistic', 'solve_recurrence', 'closed_form_m2',
    'DynSystem', 'SystemMap', 'build_system', 'is_morphism', 'is_isomorphism',
    'canonical_map', 'demonstration_systems', 'verify_equivalence',
    'InternalDiagram', 'export_internal_diagram', 'DocumentFetcher', 'parse', 'tangle', 'weave',
]
