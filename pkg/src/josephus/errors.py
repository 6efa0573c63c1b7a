"""
Exceptions raised by the josephus package.

Validation problems derive from ValueError, infrastructure problems from
RuntimeError, so callers written against the builtin types keep working.
"""


class JosephusError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(JosephusError, ValueError):
    """A parameter or value violates its documented precondition."""


class ClosureError(InvalidInputError):
    """A map sends a state outside of its declared codomain."""

    def __init__(self, state, image, message=None):
        self.state = state
        self.image = image
        super().__init__(message or f"state {state!r} is mapped to {image!r}, which is not a state of the codomain")


class ResourceGuardError(JosephusError, RuntimeError):
    """An enumeration or rendering request exceeds its configured cap."""

    def __init__(self, message, limit=None, requested=None):
        self.limit = limit
        self.requested = requested
        super().__init__(message)


class LiterateError(JosephusError):
    """Base class for literate document problems."""


class ChunkParseError(LiterateError, ValueError):
    def __init__(self, message, line):
        self.line = line
        super().__init__(f"line {line}: {message}")


class UndefinedChunkError(LiterateError, KeyError):
    def __init__(self, name, site=None):
        self.name = name
        self.site = site
        where = f" (referenced at line {site})" if site is not None else ""
        super().__init__(f"undefined chunk <<{name}>>{where}")

    def __str__(self):
        # KeyError would otherwise repr() the message
        return self.args[0]


class ChunkCycleError(LiterateError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        path = " -> ".join(f"<<{name}>>" for name in self.cycle)
        super().__init__(f"chunk reference cycle: {path}")


class DocumentFetchError(JosephusError, RuntimeError):
    """Reading a literate source failed."""
