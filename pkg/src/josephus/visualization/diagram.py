import re
from dataclasses import dataclass, field
from typing import IO, List, Optional, Tuple

from ..config import DIAGRAM_CAP
from ..dynamics.system import DynSystem, SystemMap, state_key
from ..errors import ResourceGuardError
from ..log import setup_logger

logger = setup_logger(__name__)

_QUOTED = r'"((?:[^"\\]|\\.)*)"'
_NODE = re.compile(r"^\s*" + _QUOTED + r"\s*(?:\[(.*)\])?\s*;\s*$")
_EDGE = re.compile(r"^\s*" + _QUOTED + r"\s*->\s*" + _QUOTED + r"\s*(?:\[(.*)\])?\s*;\s*$")
_STYLE = re.compile(r"style\s*=\s*\"?(\w+)\"?")


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _unquote(text: str) -> str:
    return re.sub(r"\\(.)", r"\1", text)


class InternalDiagram:
    """Builds a Graphviz internal diagram of one or two systems and a map between them."""

    def __init__(self, cap: int = DIAGRAM_CAP):
        self.cap = cap
        self.systems: List[DynSystem] = []
        self.mapping: Optional[SystemMap] = None

    def _node_id(self, system: DynSystem, state) -> str:
        return f"{system.name}:{state_key(state)}"

    def add_system(self, system: DynSystem) -> "InternalDiagram":
        if len(self.systems) == 2:
            raise ValueError("An internal diagram holds at most two systems")
        total = sum(len(s) for s in self.systems) + len(system)
        if total > self.cap:
            raise ResourceGuardError(
                f"Diagram would have {total} states, above the cap of {self.cap}; "
                "restrict to reachable states or raise the cap.",
                limit=self.cap,
                requested=total,
            )
        self.systems.append(system)
        return self

    def add_map(self, mapping: SystemMap) -> "InternalDiagram":
        if len(self.systems) != 2:
            raise ValueError("Add both systems first using add_system()")
        self.mapping = mapping
        return self

    def _system_lines(self, system: DynSystem, indent: str) -> List[str]:
        lines = []
        ordered = system.ordered_states()
        for state in ordered:
            lines.append(f"{indent}{_quote(self._node_id(system, state))};")
        for state in ordered:
            source = _quote(self._node_id(system, state))
            target = _quote(self._node_id(system, system.step(state)))
            lines.append(f"{indent}{source} -> {target} [style=solid];")
        return lines

    def render(self) -> str:
        """DOT text with LF line endings; nodes and edges are sorted by state key."""
        if not self.systems:
            raise ValueError("No system to draw")
        lines = ["digraph internal_diagram {"]
        if len(self.systems) == 1:
            lines.extend(self._system_lines(self.systems[0], "  "))
        else:
            for number, system in enumerate(self.systems):
                lines.append(f"  subgraph cluster_{number} {{")
                lines.append(f"    label={_quote(system.name)};")
                lines.extend(self._system_lines(system, "    "))
                lines.append("  }")
        if self.mapping is not None:
            source, target = self.systems
            for state in source.ordered_states():
                tail = _quote(self._node_id(source, state))
                head = _quote(self._node_id(target, self.mapping(state)))
                lines.append(f"  {tail} -> {head} [style=dashed];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def export_internal_diagram(
    systems,
    mapping: Optional[SystemMap] = None,
    sink: Optional[IO[str]] = None,
    cap: int = DIAGRAM_CAP,
) -> str:
    """
    Render one or two systems (and optionally a map between them) as DOT.

    Args:
        systems: A DynSystem or a pair of them; a map needs the pair
        mapping: Drawn as dashed edges from source to target states
        sink: Stream the text is also written to
        cap: Maximum total number of states

    Returns:
        The DOT text
    """
    if isinstance(systems, DynSystem):
        systems = [systems]
    diagram = InternalDiagram(cap=cap)
    for system in systems:
        diagram.add_system(system)
    if mapping is not None:
        diagram.add_map(mapping)
    text = diagram.render()
    if sink is not None:
        sink.write(text)
    logger.info("diagram with %d systems and %d states", len(systems), sum(len(s) for s in systems))
    return text


@dataclass
class DotGraph:
    """What ``read_dot`` recovers from a diagram."""

    nodes: List[str] = field(default_factory=list)
    edges: List[Tuple[str, str, str]] = field(default_factory=list)
    clusters: List[str] = field(default_factory=list)

    def edges_with_style(self, style: str) -> List[Tuple[str, str]]:
        return [(tail, head) for tail, head, edge_style in self.edges if edge_style == style]


def read_dot(text: str) -> DotGraph:
    """
    Parse the DOT subset written by InternalDiagram.

    Raises:
        ValueError: on any line outside that subset or unbalanced braces
    """
    graph = DotGraph()
    lines = text.splitlines()
    if not lines or not re.match(r"^\s*digraph\b.*\{\s*$", lines[0]):
        raise ValueError("DOT text must start with a digraph header")
    depth = 1
    for number, line in enumerate(lines[1:], start=2):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped == "}":
            depth -= 1
            if depth < 0:
                raise ValueError(f"line {number}: unbalanced closing brace")
            continue
        cluster = re.match(r"^subgraph\s+(\w+)\s*\{$", stripped)
        if cluster:
            graph.clusters.append(cluster.group(1))
            depth += 1
            continue
        if re.match(r"^label\s*=", stripped):
            continue
        edge = _EDGE.match(line)
        if edge:
            style = _STYLE.search(edge.group(3) or "")
            graph.edges.append((_unquote(edge.group(1)), _unquote(edge.group(2)), style.group(1) if style else "solid"))
            continue
        node = _NODE.match(line)
        if node:
            graph.nodes.append(_unquote(node.group(1)))
            continue
        raise ValueError(f"line {number}: cannot parse {stripped!r}")
    if depth != 0:
        raise ValueError("unbalanced braces in DOT text")
    return graph
