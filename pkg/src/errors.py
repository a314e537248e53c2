"""Exception hierarchy for the trajectory extractor."""

from pathlib import Path


class TrajextError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(TrajextError):
    """Invalid run configuration."""


class GazetteerIngestError(TrajextError):
    """A GeoNames source file could not be read."""

    def __init__(self, path: str | Path, reason: str):
        self.path = str(path)
        super().__init__(f"Cannot ingest gazetteer source {self.path}: {reason}")


class EmptyGazetteerError(TrajextError):
    """Ingestion accepted zero rows."""

    def __init__(self, path: str | Path, skipped: int = 0):
        self.path = str(path)
        self.skipped = skipped
        super().__init__(
            f"No rows accepted from {self.path} ({skipped} skipped or filtered)"
        )


class GazetteerFormatError(TrajextError):
    """A saved gazetteer index is corrupt or has another format version."""

    def __init__(self, path: str | Path, expected: str, reason: str):
        self.path = str(path)
        self.expected = expected
        super().__init__(
            f"Cannot load gazetteer index {self.path} "
            f"(expected format {expected}): {reason}"
        )


class GazetteerConsistencyError(TrajextError):
    """A resolved (name, country) pair has no matching gazetteer record."""


class LexiconError(TrajextError):
    """A lexicon file could not be read."""

    def __init__(self, path: str | Path, reason: str):
        self.path = str(path)
        super().__init__(f"Cannot read lexicon {self.path}: {reason}")


class GroundTruthError(TrajextError):
    """A ground-truth file is unreadable or malformed."""

    def __init__(self, path: str | Path, reason: str, line: int | None = None):
        self.path = str(path)
        self.line = line
        where = f"{self.path}:{line}" if line is not None else self.path
        super().__init__(f"Invalid ground truth at {where}: {reason}")


class EmptyGroundTruthError(GroundTruthError):
    """A ground-truth file holds no entries."""

    def __init__(self, path: str | Path):
        super().__init__(path, "no entries")


class CorpusMismatchError(TrajextError):
    """Narratives and ground truths do not pair up by id."""

    def __init__(self, unmatched: list[str], reason: str = "no matching ground truth"):
        self.unmatched = sorted(unmatched)
        super().__init__(f"{reason}: {', '.join(self.unmatched) or '<empty corpus>'}")
