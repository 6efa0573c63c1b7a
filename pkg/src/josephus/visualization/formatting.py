"""
Formatting Module

This module renders results for the command line: kill sequences as JSON,
CSV or a kill-by-kill text trace, verification verdicts, and pandas tables.
Every renderer returns text ending in a single newline; nothing here writes
timestamps, so identical inputs give identical bytes.
"""

import json
from typing import Any, Dict

import pandas as pd

from ..solvers.problem import KillSequence

ANSI = {"bold": "\033[1m", "red": "\033[31m", "green": "\033[32m", "reset": "\033[0m"}


def style(text: str, *names: str, enabled: bool = False) -> str:
    """Wrap text in ANSI codes when styling is enabled."""
    if not enabled or not names:
        return text
    return "".join(ANSI[name] for name in names) + text + ANSI["reset"]


def to_json(data: Any) -> str:
    return json.dumps(data, ensure_ascii=False) + "\n"


def frame_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


def frame_to_text(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(empty)\n"
    return frame.to_string(index=False) + "\n"


def format_kill_trace(sequence: KillSequence) -> str:
    """
    Text trace of the eliminations, one line per kill.

    Shows who dies at each step and who is still standing, in label order.
    A state recorded by the solver is appended when present.

    Example output for n=6, m=3:
    kill 1: 3    remaining [1, 2, 4, 5, 6]
    kill 2: 6    remaining [1, 2, 4, 5]
    """
    standing = list(range(1, sequence.n + 1))
    width = len(str(sequence.n))
    lines = [f"n={sequence.n} m={sequence.m}"]
    for step, killed in enumerate(sequence.order, start=1):
        standing.remove(killed)
        line = f"kill {step}: {killed:>{width}}    remaining {standing}"
        if step <= len(sequence.states):
            line += f"    state {sequence.states[step - 1].key()}"
        lines.append(line)
    lines.append(f"survivor: {sequence.survivor}")
    return "\n".join(lines) + "\n"


def format_kill_sequence(sequence: KillSequence, output_format: str = "json", include_states: bool = False) -> str:
    if output_format == "json":
        return to_json(sequence.to_dict(include_states=include_states and bool(sequence.states)))
    if output_format == "csv":
        return frame_to_csv(sequence.to_frame(include_states=include_states))
    if output_format == "text":
        return format_kill_trace(sequence)
    raise ValueError(f"Kill sequences cannot be written as {output_format!r}")


def format_verdict(verdict: Dict[str, Any], output_format: str = "json", color: bool = False) -> str:
    if output_format == "json":
        return to_json(verdict)
    if output_format == "text":
        ok = style("holds", "green", enabled=color)
        bad = style("fails", "red", "bold", enabled=color)
        lines = [
            f"reading: {verdict['reading']}  universe: {verdict['universe']}  m: {verdict['m']}",
            f"morphism on {verdict['states_checked']} states: {ok if verdict['morphism'] else bad}",
            f"isomorphism on {verdict['reachable_states']} reachable states: {ok if verdict['isomorphism'] else bad}",
        ]
        if verdict.get("failure"):
            lines.append(f"failure: {verdict['failure']}")
        if verdict.get("counterexample"):
            lines.append(f"counterexample: {json.dumps(verdict['counterexample'])}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"Verdicts cannot be written as {output_format!r}")


def format_table(frame: pd.DataFrame, output_format: str = "text") -> str:
    if output_format == "csv":
        return frame_to_csv(frame)
    if output_format == "json":
        return frame.to_json(orient="records") + "\n"
    if output_format == "text":
        return frame_to_text(frame)
    raise ValueError(f"Tables cannot be written as {output_format!r}")
