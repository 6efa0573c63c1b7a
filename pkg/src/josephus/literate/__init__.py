from .document import Chunk, ChunkDefinition, ChunkLine, ProseBlock, Reference, ReferenceSite, WebDocument, list_chunks, parse
from .tangle import default_root, tangle
from .weave import weave

__all__ = [
    'WebDocument', 'Chunk', 'ChunkDefinition', 'ChunkLine', 'ProseBlock', 'Reference', 'ReferenceSite',
    'parse', 'list_chunks', 'tangle', 'default_root', 'weave',
]
