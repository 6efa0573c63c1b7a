from .diagram import DotGraph, InternalDiagram, export_internal_diagram, read_dot
from .formatting import format_kill_sequence, format_kill_trace, format_table, format_verdict

__all__ = [
    'InternalDiagram', 'export_internal_diagram', 'DotGraph', 'read_dot',
    'format_kill_sequence', 'format_kill_trace', 'format_verdict', 'format_table',
]
