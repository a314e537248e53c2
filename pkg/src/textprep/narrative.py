"""Narrative documents."""

from dataclasses import dataclass, field
from pathlib import Path

from .preprocess import preprocess


@dataclass(frozen=True)
class Narrative:
    """A narrative with its raw and cleansed text."""

    id: str
    raw_text: str
    clean_text: str = field(default="")

    def __post_init__(self) -> None:
        if not self.clean_text:
            object.__setattr__(self, "clean_text", preprocess(self.raw_text))

    @classmethod
    def from_file(cls, path: str | Path) -> "Narrative":
        """Read a UTF-8 narrative file; the id is the file stem."""
        path = Path(path)
        return cls(id=path.stem, raw_text=path.read_text(encoding="utf-8"))

    @property
    def word_count(self) -> int:
        """Number of whitespace-separated words in the clean text."""
        return len(self.clean_text.split())


def load_narratives(input_dir: str | Path) -> list[Narrative]:
    """Load every ``*.txt`` narrative in a directory, sorted by id."""
    return [Narrative.from_file(p) for p in sorted(Path(input_dir).glob("*.txt"))]
