"""Token types shared by the tokenizers and the tagger."""

from dataclasses import dataclass
from enum import StrEnum


class Tag(StrEnum):
    """Categorical tag assigned by the geospatial tagger."""

    GEOSPATIAL = "geospatial-candidate"
    OTHER = "other"


@dataclass(frozen=True)
class Token:
    """One ordered unit of narrative text.

    Attributes:
        text: Single- or multi-word surface form.
        ordinal: 0-based position in the narrative token sequence.
        sentence_index: 0-based sentence number.
        start: Character offset of the token in the clean text.
        end: Character offset one past the token.
        tag: Tag set by the tagger, None when untagged.
        comma_after: Whether a comma directly follows the token.
    """

    text: str
    ordinal: int
    sentence_index: int = 0
    start: int = 0
    end: int = 0
    tag: Tag | None = None
    comma_after: bool = False

    @property
    def is_multiword(self) -> bool:
        """Whether the token spans more than one word."""
        return " " in self.text

    @property
    def capitalized(self) -> bool:
        """Whether the first alphabetic character is uppercase."""
        for ch in self.text:
            if ch.isalpha():
                return ch.isupper()
        return False
