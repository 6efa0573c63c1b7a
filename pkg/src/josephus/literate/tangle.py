import re
from typing import List, Optional

from ..errors import ChunkCycleError, LiterateError, UndefinedChunkError
from ..log import setup_logger
from .document import ChunkLine, Reference, WebDocument

logger = setup_logger(__name__)

DEFAULT_ROOT = "*"


def default_root(doc: WebDocument) -> str:
    """
    The chunk to tangle when no root is named.

    That is the only chunk no other chunk references, or ``*`` (the noweb
    convention) when that chunk is defined.
    """
    if DEFAULT_ROOT in doc.chunks:
        return DEFAULT_ROOT
    roots = [chunk.name for chunk in doc.chunks.values() if not chunk.referenced_from]
    if len(roots) == 1:
        return roots[0]
    if not roots:
        raise LiterateError("No root chunk: every chunk is referenced by another one.")
    raise LiterateError(f"Several root chunks, name one with --root: {', '.join(roots)}")


def _padding(prefix: str) -> str:
    # tabs survive so the column lines up in either indentation style
    return re.sub(r"[^\t]", " ", prefix)


def _expand_line(doc: WebDocument, line: ChunkLine, stack: List[str]) -> List[str]:
    pieces = [""]
    for segment in line.segments:
        if isinstance(segment, Reference):
            inner = _expand(doc, segment.name, stack, line.line) or [""]
            pad = _padding(pieces[-1])
            pieces[-1] += inner[0]
            pieces.extend(pad + text for text in inner[1:])
        else:
            pieces[-1] += segment
    return pieces


def _expand(doc: WebDocument, name: str, stack: List[str], site: Optional[int]) -> List[str]:
    chunk = doc.chunk(name)
    if chunk is None:
        raise UndefinedChunkError(name, site)
    if chunk.name in stack:
        raise ChunkCycleError(stack[stack.index(chunk.name):] + [chunk.name])
    stack.append(chunk.name)
    out: List[str] = []
    for line in chunk.lines:
        out.extend(_expand_line(doc, line, stack))
    stack.pop()
    return out


def tangle(doc: WebDocument, root: Optional[str] = None) -> str:
    """
    Assemble the source text of ``root`` by splicing referenced chunks in place.

    The first line of a spliced chunk continues the referencing line; every
    later line is padded to the column of the reference, so a reference
    indented by w characters prefixes each spliced line with w characters.
    The result ends with exactly one newline.

    Raises:
        UndefinedChunkError: naming the missing chunk and the referencing line
        ChunkCycleError: listing the chunks on the cycle
    """
    if root is None:
        root = default_root(doc)
    out = _expand(doc, root.strip(), [], None)
    logger.info("tangled <<%s>> into %d lines", root, len(out))
    return "\n".join(out).rstrip("\n") + "\n"
