"""
Literate Document Module

Parses a noweb-style literate source into prose and named code chunks.

Syntax:
    <<Chunk name>>=      starts (or continues) the definition of a chunk
    @                    ends the chunk; following lines are prose
    <<Other chunk>>      anywhere inside a chunk line: a reference
    @<<                  a literal "<<" inside a chunk

Chunk names are trimmed and compared case-sensitively. Ordinals follow the
order of first definitions, starting at 1. References are resolved lazily,
so a document may mention chunks it never defines; tangling such a chunk is
an error, weaving it is not.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import pandas as pd

from ..errors import ChunkParseError
from ..log import setup_logger

logger = setup_logger(__name__)

HEADER = re.compile(r"^<<(.*?)>>=\s*$")
REFERENCE = re.compile(r"(?<!@)<<(.*?)>>")
END = "@"
ESCAPE = "@<<"


@dataclass(frozen=True)
class Reference:
    """A ``<<Name>>`` use inside a chunk line."""

    name: str


Segment = Union[str, Reference]


@dataclass(frozen=True)
class ChunkLine:
    """One body line split into literal text and chunk references."""

    text: str
    line: int
    segments: Tuple[Segment, ...] = ()

    def references(self) -> List[str]:
        return [segment.name for segment in self.segments if isinstance(segment, Reference)]


@dataclass(frozen=True)
class ProseBlock:
    lines: Tuple[str, ...]
    start_line: int


@dataclass(frozen=True)
class ChunkDefinition:
    name: str
    header_line: int
    lines: Tuple[ChunkLine, ...]
    continuation: bool = False


Block = Union[ProseBlock, ChunkDefinition]


@dataclass(frozen=True)
class ReferenceSite:
    """Where a chunk is referenced: the referring chunk and the line."""

    chunk: str
    line: int

    def __str__(self):
        return f"{self.chunk}:{self.line}"


@dataclass
class Chunk:
    name: str
    ordinal: int
    definition_lines: List[int] = field(default_factory=list)
    lines: List[ChunkLine] = field(default_factory=list)
    referenced_from: List[ReferenceSite] = field(default_factory=list)

    def references(self) -> List[str]:
        """Names this chunk refers to, in first-use order."""
        names = []
        for line in self.lines:
            for name in line.references():
                if name not in names:
                    names.append(name)
        return names


@dataclass
class WebDocument:
    blocks: List[Block] = field(default_factory=list)
    chunks: Dict[str, Chunk] = field(default_factory=dict)
    # references to names that are never defined, by name
    undefined: Dict[str, List[ReferenceSite]] = field(default_factory=dict)

    def chunk(self, name: str) -> Optional[Chunk]:
        return self.chunks.get(name.strip())

    def ordinal(self, name: str) -> Optional[int]:
        chunk = self.chunk(name)
        return chunk.ordinal if chunk is not None else None


def _literal(text: str) -> str:
    return text.replace(ESCAPE, "<<")


def _chunk_line(raw: str, number: int) -> ChunkLine:
    stripped = raw.lstrip()
    if stripped.startswith("<<") and ">>" not in stripped:
        raise ChunkParseError(f"unterminated chunk reference {stripped!r}", number)
    segments: List[Segment] = []
    position = 0
    for match in REFERENCE.finditer(raw):
        name = match.group(1).strip()
        if not name or "<<" in name:
            raise ChunkParseError(f"malformed chunk reference {match.group(0)!r}", number)
        if match.start() > position:
            segments.append(_literal(raw[position:match.start()]))
        segments.append(Reference(name))
        position = match.end()
    if position < len(raw) or not segments:
        segments.append(_literal(raw[position:]))
    return ChunkLine(raw, number, tuple(segments))


def parse(source: str) -> WebDocument:
    """
    Parse literate source text.

    Args:
        source: Document text; CRLF line endings are accepted

    Returns:
        WebDocument with every definition and reference located by line number

    Raises:
        ChunkParseError: for a malformed chunk header or reference
    """
    doc = WebDocument()
    prose: List[str] = []
    prose_start = 1
    current: Optional[Tuple[str, int, List[ChunkLine]]] = None

    def close_prose():
        if prose:
            doc.blocks.append(ProseBlock(tuple(prose), prose_start))
            prose.clear()

    def close_chunk():
        nonlocal current
        if current is None:
            return
        name, header_line, body = current
        chunk = doc.chunks.get(name)
        if chunk is None:
            chunk = doc.chunks[name] = Chunk(name, len(doc.chunks) + 1)
            continuation = False
        else:
            continuation = True
        chunk.definition_lines.append(header_line)
        chunk.lines.extend(body)
        doc.blocks.append(ChunkDefinition(name, header_line, tuple(body), continuation))
        current = None

    for number, raw in enumerate(source.splitlines(), start=1):
        header = HEADER.match(raw)
        if header:
            name = header.group(1).strip()
            if not name:
                raise ChunkParseError("empty chunk name", number)
            close_prose()
            close_chunk()
            current = (name, number, [])
            continue
        if raw.startswith("<<") and raw.rstrip().endswith("=") and ">>" not in raw:
            raise ChunkParseError(f"unterminated chunk header {raw.rstrip()!r}", number)
        if current is not None:
            if raw.rstrip() == END:
                close_chunk()
                continue
            current[2].append(_chunk_line(raw, number))
            continue
        if not prose:
            prose_start = number
        prose.append(raw)

    close_chunk()
    close_prose()
    _resolve(doc)
    logger.debug("parsed %d blocks, %d chunks", len(doc.blocks), len(doc.chunks))
    return doc


def _resolve(doc: WebDocument) -> None:
    for chunk in doc.chunks.values():
        for line in chunk.lines:
            for name in line.references():
                site = ReferenceSite(chunk.name, line.line)
                target = doc.chunks.get(name)
                if target is not None:
                    target.referenced_from.append(site)
                else:
                    doc.undefined.setdefault(name, []).append(site)


def list_chunks(doc: WebDocument) -> pd.DataFrame:
    """
    Table of chunks in ordinal order.

    Returns:
        DataFrame with columns ordinal, name, definition_lines (space separated
        line numbers) and reference_sites (``chunk:line`` entries separated by "; ")
    """
    rows = [
        {
            "ordinal": chunk.ordinal,
            "name": chunk.name,
            "definition_lines": " ".join(str(line) for line in chunk.definition_lines),
            "reference_sites": "; ".join(str(site) for site in chunk.referenced_from),
        }
        for chunk in doc.chunks.values()
    ]
    return pd.DataFrame(rows, columns=["ordinal", "name", "definition_lines", "reference_sites"])
