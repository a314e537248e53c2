"""Gazetteer index persistence.

The index file is line-delimited UTF-8:

    line 1      format version string
    line 2      JSON build metadata
    lines 3..   one JSON entry per (lookup key, record) pair, key order
    last line   JSON trailer holding the entry count

Identical gazetteers serialize to identical bytes.
"""

import json
from collections import defaultdict
from collections.abc import Collection
from pathlib import Path
from typing import Any

from ..config import get_logger
from ..errors import GazetteerFormatError, GazetteerIngestError
from .geonames import build_gazetteer
from .records import BuildMetadata, Gazetteer, LocationRecord

logger = get_logger(__name__)

FORMAT_NAME = "trajext-gazetteer"
FORMAT_VERSION = f"{FORMAT_NAME}/1"


def _dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def save_gazetteer(g: Gazetteer, path: str | Path) -> None:
    """Write a gazetteer index file.

    Args:
        g: Gazetteer to save.
        path: Destination file; parent directories are created.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(FORMAT_VERSION + "\n")
        f.write(_dumps(g.metadata.to_dict()) + "\n")
        for key, record in g.entries():
            f.write(_dumps({"key": key, "record": record.to_dict()}) + "\n")
            count += 1
        f.write(_dumps({"end": count}) + "\n")

    logger.info("Gazetteer saved", path=str(path), entries=count)


def load_gazetteer(path: str | Path) -> Gazetteer:
    """Load a gazetteer index file written by :func:`save_gazetteer`.

    Args:
        path: Index file path.

    Returns:
        The loaded Gazetteer.

    Raises:
        GazetteerFormatError: On a version mismatch, truncation or corruption.
    """
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").split("\n")
    except (OSError, UnicodeDecodeError) as e:
        raise GazetteerFormatError(path, FORMAT_VERSION, str(e)) from e

    header = lines[0] if lines else ""
    if header != FORMAT_VERSION:
        if header.startswith(FORMAT_NAME + "/"):
            reason = f"unsupported version {header.split('/', 1)[1]!r}"
        else:
            reason = "missing format header"
        raise GazetteerFormatError(path, FORMAT_VERSION, reason)

    # A complete file ends with the trailer followed by a newline
    if len(lines) < 4 or lines[-1] != "":
        raise GazetteerFormatError(path, FORMAT_VERSION, "file is truncated")

    try:
        metadata = BuildMetadata.from_dict(json.loads(lines[1]))
        trailer = json.loads(lines[-2])
        entries = [json.loads(line) for line in lines[2:-2]]

        index: dict[str, list[LocationRecord]] = defaultdict(list)
        for entry in entries:
            index[entry["key"]].append(LocationRecord.from_dict(entry["record"]))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise GazetteerFormatError(path, FORMAT_VERSION, f"corrupt entry: {e}") from e

    if not isinstance(trailer, dict) or trailer.get("end") != len(entries):
        raise GazetteerFormatError(path, FORMAT_VERSION, "file is truncated")

    logger.info("Gazetteer loaded", path=str(path), entries=len(entries))
    return Gazetteer(index, metadata)


def is_index_file(path: str | Path) -> bool:
    """Whether ``path`` starts with the index format header."""
    try:
        with open(path, encoding="utf-8", errors="replace") as f:
            return f.readline().startswith(FORMAT_NAME + "/")
    except OSError as e:
        raise GazetteerIngestError(path, str(e)) from e


def open_gazetteer(
    path: str | Path,
    min_population: int = 0,
    country_filter: Collection[str] | None = None,
) -> Gazetteer:
    """Load a saved index, or build from a raw GeoNames file.

    Population and country filters only apply when building; a saved index
    is used as it was built.
    """
    if is_index_file(path):
        if min_population or country_filter:
            logger.warning(
                "Filters ignored for a saved gazetteer index",
                path=str(path),
                min_population=min_population,
            )
        return load_gazetteer(path)
    return build_gazetteer(path, min_population, country_filter)
