from importlib import resources
from pathlib import Path
from typing import List

from ..errors import DocumentFetchError
from ..log import setup_logger

logger = setup_logger(__name__)

BUNDLE_PACKAGE = "josephus.data"
SUFFIX = ".web"


class DocumentFetcher:
    """Fetches literate sources from disk or from the documents bundled with the package."""

    def list_bundled(self) -> List[str]:
        """Names of the bundled literate documents."""
        return sorted(
            entry.name for entry in resources.files(BUNDLE_PACKAGE).iterdir() if entry.name.endswith(SUFFIX)
        )

    def fetch_bundled(self, name: str) -> str:
        """Returns the text of a bundled document, e.g. ``romans.py.web``."""
        if not name:
            raise ValueError("No document name provided.")
        if name not in self.list_bundled():
            raise DocumentFetchError(f"No bundled document named {name!r}; available: {', '.join(self.list_bundled())}")
        try:
            return resources.files(BUNDLE_PACKAGE).joinpath(name).read_text(encoding="utf-8")
        except OSError as e:
            raise DocumentFetchError(f"Failed to fetch bundled document: {e}")

    def fetch_path(self, path) -> str:
        """Returns the UTF-8 text of a literate file on disk."""
        try:
            return Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise DocumentFetchError(f"Failed to fetch document: {e}")

    def fetch(self, source: str) -> str:
        """
        Resolves ``source`` as a file path first, then as a bundled document name.

        Args:
            source: Path of a literate file, or the file name of a bundled one

        Returns:
            Document text
        """
        if not source:
            raise ValueError("No document name provided.")
        if Path(source).is_file():
            logger.debug("reading literate source %s from disk", source)
            return self.fetch_path(source)
        if Path(source).name in self.list_bundled():
            logger.debug("reading bundled literate source %s", source)
            return self.fetch_bundled(Path(source).name)
        raise DocumentFetchError(f"Failed to fetch document: no file or bundled document named {source!r}")
