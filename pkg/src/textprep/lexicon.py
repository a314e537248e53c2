"""Multi-word place-name lexicon."""

from dataclasses import dataclass, field
from pathlib import Path

from ..config import get_logger
from ..errors import LexiconError
from .preprocess import normalize_key

logger = get_logger(__name__)


def _words(phrase: str) -> tuple[str, ...]:
    # Same folding as the clean narrative text
    return tuple(normalize_key(phrase).split())


@dataclass(frozen=True)
class Lexicon:
    """A set of multi-word phrases, matched without regard to case or accents.

    Attributes:
        phrases: Surface forms, each with at least two words.
        rejected: Number of lines refused when the lexicon was loaded.
    """

    phrases: frozenset[str] = frozenset()
    rejected: int = 0
    _index: frozenset[tuple[str, ...]] = field(
        default=frozenset(), init=False, repr=False, compare=False
    )
    _longest: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        cleaned = frozenset(" ".join(p.split()) for p in self.phrases)
        short = [p for p in cleaned if len(p.split()) < 2]
        if short:
            raise ValueError(f"Lexicon phrases need at least two words: {short}")
        object.__setattr__(self, "phrases", cleaned)
        index = frozenset(_words(p) for p in cleaned)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_longest", max((len(p) for p in index), default=0))

    @classmethod
    def of(cls, *phrases: str) -> "Lexicon":
        """Build a lexicon from literal phrases."""
        return cls(phrases=frozenset(phrases))

    def __contains__(self, phrase: object) -> bool:
        return isinstance(phrase, str) and _words(phrase) in self._index

    def __len__(self) -> int:
        return len(self.phrases)

    @property
    def longest(self) -> int:
        """Word count of the longest phrase (0 for an empty lexicon)."""
        return self._longest

    def matches(self, words: tuple[str, ...]) -> bool:
        """Check a lowercased, ASCII-folded word tuple against the phrase index."""
        return words in self._index


def load_lexicon(path: str | Path) -> Lexicon:
    """Load a lexicon file.

    The file is UTF-8 with one phrase per line. Blank lines and lines
    starting with ``#`` are ignored; single-word lines are rejected and
    counted.

    Args:
        path: Lexicon file path.

    Returns:
        The loaded Lexicon.

    Raises:
        LexiconError: If the file cannot be read.
    """
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except (OSError, UnicodeDecodeError) as e:
        raise LexiconError(path, str(e)) from e

    phrases: set[str] = set()
    rejected = 0
    for number, line in enumerate(lines, start=1):
        phrase = " ".join(line.split())
        if not phrase or phrase.startswith("#"):
            continue
        if len(phrase.split()) < 2:
            rejected += 1
            logger.warning(
                "Single-word lexicon line rejected",
                path=str(path),
                line=number,
                phrase=phrase,
            )
            continue
        phrases.add(phrase)

    logger.info(
        "Lexicon loaded", path=str(path), phrases=len(phrases), rejected=rejected
    )
    return Lexicon(phrases=frozenset(phrases), rejected=rejected)
