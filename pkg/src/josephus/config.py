"""
Configuration Module

Defaults for the library and the command line front end, plus the RunConfig
record the CLI builds from its parsed arguments before dispatching.
"""

import os
from dataclasses import dataclass, field
from typing import Optional, Tuple

# Instance of the decimation story: 100 prisoners, every 10th killed.
DEFAULT_N = 100
DEFAULT_M = 10

# Demonstration instance: a circle of 6 prisoners, killing every 3rd.
DEMO_UNIVERSE = 6
DEMO_M = 3

# Exhaustive enumeration grows like k * k!; 8 labels is ~10^6 states.
MAX_UNIVERSE = 8
DIAGRAM_CAP = 200

BENCH_START = 512
BENCH_FACTOR = 2
BENCH_COUNT = 4

COLOR_ENV = "JOSEPHUS_COLOR"

COMMANDS = ("solve", "trace", "verify", "diagram", "bench", "tangle", "weave", "chunks")
FORMATS = ("json", "csv", "dot", "text")


def color_enabled(stream=None) -> bool:
    """ANSI styling is on for terminals unless JOSEPHUS_COLOR=0."""
    if os.environ.get(COLOR_ENV, "1").strip() == "0":
        return False
    return bool(stream is not None and hasattr(stream, "isatty") and stream.isatty())


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters of one CLI invocation."""

    command: str
    n: Optional[int] = None
    m: Optional[int] = None
    algorithm: Optional[str] = None
    universe: Optional[int] = None
    output_format: str = "text"
    output: Optional[str] = None
    show_order: bool = False
    show_states: bool = False
    reading: str = "kill-step"
    jobs: int = 1
    system: str = "h"
    with_map: bool = False
    reachable: bool = False
    cap: int = DIAGRAM_CAP
    sizes: Tuple[int, ...] = field(default_factory=tuple)
    solvers: Tuple[str, ...] = field(default_factory=tuple)
    wall: bool = False
    source: Optional[str] = None
    root: Optional[str] = None
    verbose: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command: {self.command}")
        if self.output_format not in FORMATS:
            raise ValueError(f"Unknown output format: {self.output_format}")

    @classmethod
    def from_namespace(cls, args) -> "RunConfig":
        """Build a RunConfig from an argparse namespace, ignoring absent options."""
        values = {name: getattr(args, name) for name in cls.__dataclass_fields__ if hasattr(args, name)}
        return cls(**values)
