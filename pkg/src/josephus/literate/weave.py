"""
Weave Module

Renders a literate document as markdown: prose passes through, every chunk
definition becomes a numbered note with a fenced code block, and an index at
the end lists where each chunk is defined, what it uses and who uses it.
"""

from typing import List

from .document import ChunkDefinition, Reference, WebDocument

OPEN, CLOSE = "⟨", "⟩"


def chunk_label(doc: WebDocument, name: str) -> str:
    ordinal = doc.ordinal(name)
    return f"{OPEN}{name} {ordinal if ordinal is not None else '?'}{CLOSE}"


def _note_lines(doc: WebDocument, block: ChunkDefinition, note: int) -> List[str]:
    sign = "+≡" if block.continuation else "≡"
    lines = [f"**Note {note}.** {chunk_label(doc, block.name)} {sign}", "", "```"]
    for line in block.lines:
        lines.append("".join(
            chunk_label(doc, segment.name) if isinstance(segment, Reference) else segment
            for segment in line.segments
        ))
    lines.extend(["```", ""])
    return lines


def _index_lines(doc: WebDocument, notes) -> List[str]:
    lines = ["## Index"]
    if doc.chunks or doc.undefined:
        lines.append("")
    for chunk in doc.chunks.values():
        defined = ", ".join(f"Note {notes[line]} (line {line})" for line in chunk.definition_lines)
        uses = ", ".join(chunk_label(doc, name) for name in chunk.references()) or "nothing"
        if chunk.referenced_from:
            used_by = ", ".join(f"{chunk_label(doc, site.chunk)} (line {site.line})" for site in chunk.referenced_from)
        else:
            used_by = "no other chunk"
        lines.append(f"- {chunk_label(doc, chunk.name)}: defined in {defined}; uses {uses}; used by {used_by}.")
    for name, sites in doc.undefined.items():
        used_by = ", ".join(f"{chunk_label(doc, site.chunk)} (line {site.line})" for site in sites)
        lines.append(f"- {chunk_label(doc, name)}: UNDEFINED; used by {used_by}.")
    return lines


def weave(doc: WebDocument) -> str:
    """Markdown rendering of the document, ending in the cross-reference index."""
    lines: List[str] = []
    notes = {}
    for block in doc.blocks:
        if isinstance(block, ChunkDefinition):
            notes[block.header_line] = len(notes) + 1
            lines.extend(_note_lines(doc, block, notes[block.header_line]))
        else:
            lines.extend(block.lines)
    if lines and lines[-1].strip():
        lines.append("")
    lines.extend(_index_lines(doc, notes))
    return "\n".join(lines) + "\n"
