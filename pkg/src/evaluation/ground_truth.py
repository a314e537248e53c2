"""Ground-truth route files.

One entry per line, ``name<TAB>country_code``, in narrative mention order.
Blank lines and ``#`` comments are ignored.
"""

from dataclasses import dataclass
from pathlib import Path

from ..config import get_logger
from ..errors import EmptyGroundTruthError, GroundTruthError

logger = get_logger(__name__)

GROUND_TRUTH_SUFFIX = ".gt.tsv"


@dataclass(frozen=True)
class GroundTruth:
    """Manually extracted route of one narrative."""

    narrative_id: str
    entries: tuple[tuple[str, str], ...]

    def __len__(self) -> int:
        return len(self.entries)


def ground_truth_id(path: str | Path) -> str:
    """Narrative id of a ground-truth file: its name without ``.gt.tsv``."""
    name = Path(path).name
    if name.endswith(GROUND_TRUTH_SUFFIX):
        return name[: -len(GROUND_TRUTH_SUFFIX)]
    return Path(name).stem


def load_ground_truth(path: str | Path) -> GroundTruth:
    """Parse a ground-truth file.

    Args:
        path: File to read.

    Returns:
        The GroundTruth, entries in file order.

    Raises:
        GroundTruthError: If the file is unreadable or a line is malformed.
        EmptyGroundTruthError: If the file holds no entries.
    """
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except (OSError, UnicodeDecodeError) as e:
        raise GroundTruthError(path, str(e)) from e

    entries = []
    for number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise GroundTruthError(
                path, f"expected 'name<TAB>country', got {len(fields)} field(s)", number
            )
        name, country = fields[0].strip(), fields[1].strip().upper()
        if not name or not country:
            raise GroundTruthError(path, "empty name or country", number)
        entries.append((name, country))

    if not entries:
        raise EmptyGroundTruthError(path)

    return GroundTruth(narrative_id=ground_truth_id(path), entries=tuple(entries))


def load_ground_truths(directory: str | Path) -> list[GroundTruth]:
    """Load every ``*.gt.tsv`` file of a directory, sorted by id."""
    paths = sorted(Path(directory).glob(f"*{GROUND_TRUTH_SUFFIX}"))
    truths = [load_ground_truth(p) for p in paths]
    logger.info("Ground truth loaded", directory=str(directory), files=len(truths))
    return truths
