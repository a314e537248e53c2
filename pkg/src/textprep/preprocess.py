"""Narrative cleansing and lookup-key normalization."""

import re
import unicodedata
from functools import lru_cache

from unidecode import unidecode

# Typographic punctuation mapped to plain ASCII
PUNCTUATION_MAP = {
    "“": '"',  # left double quote
    "”": '"',  # right double quote
    "„": '"',  # low double quote
    "‟": '"',
    "«": '"',  # guillemets
    "»": '"',
    "″": '"',  # double prime
    "‘": "'",  # left single quote
    "’": "'",  # right single quote / apostrophe
    "‚": "'",
    "‛": "'",
    "′": "'",  # prime
    "‹": "'",
    "›": "'",
    "‐": "-",  # hyphen
    "‑": "-",  # non-breaking hyphen
    "‒": "-",  # figure dash
    "–": "-",  # en dash
    "—": "-",  # em dash
    "―": "-",  # horizontal bar
    "−": "-",  # minus sign
    "…": "...",  # ellipsis
    "\u00a0": " ",  # no-break space
    "\u2007": " ",  # figure space
    "\u202f": " ",  # narrow no-break space
    "\u200b": "",  # zero-width space
    "\ufeff": "",  # byte order mark
}

_TRANSLATION = str.maketrans(PUNCTUATION_MAP)
_HORIZONTAL_SPACE = re.compile(r"[ \t\f\v]+")
_SPACE_AROUND_NEWLINE = re.compile(r" ?\n ?")
_BLANK_LINES = re.compile(r"\n{3,}")
_WHITESPACE = re.compile(r"\s+")


@lru_cache(maxsize=4096)
def _fold_char(ch: str) -> str:
    if unicodedata.category(ch) == "So":
        return ""
    folded = unidecode(ch)
    # A letter is never erased; one with no transliteration stays as is
    if ch.isalpha() and not folded.strip():
        return ch
    return folded


def fold_ascii(text: str) -> str:
    """Fold text to ASCII by transliteration.

    Accents are dropped, other scripts are romanized and pictographic
    symbols are removed. The rare letter without any ASCII rendering is
    kept unchanged.

    Args:
        text: Arbitrary unicode text.

    Returns:
        The ASCII rendering ("São Paulo" becomes "Sao Paulo", "Москва"
        becomes "Moskva").
    """
    text = text.translate(_TRANSLATION)
    return "".join(ch if ch.isascii() else _fold_char(ch) for ch in text)


def normalize_key(name: str) -> str:
    """Normalize a place name into a gazetteer lookup key.

    Keys are case-insensitive and diacritics-insensitive, with runs of
    whitespace collapsed.

    Args:
        name: Place name as written.

    Returns:
        The lookup key.
    """
    folded = fold_ascii(unicodedata.normalize("NFC", name))
    return _WHITESPACE.sub(" ", folded).strip().lower()


def preprocess(raw_text: str) -> str:
    """Cleanse raw narrative text.

    Typographic quotes and dashes become their ASCII equivalents, letters
    are folded to ASCII, control characters are removed and horizontal
    whitespace is collapsed. Word order and sentence punctuation are kept.
    The operation is idempotent.

    Args:
        raw_text: Narrative text as read from disk.

    Returns:
        The clean text.
    """
    text = raw_text.replace("\r\n", "\n").replace("\r", "\n")
    text = fold_ascii(unicodedata.normalize("NFC", text))
    text = "".join(ch for ch in text if ch.isprintable() or ch in "\n\t")
    text = _HORIZONTAL_SPACE.sub(" ", text)
    text = _SPACE_AROUND_NEWLINE.sub("\n", text)
    text = _BLANK_LINES.sub("\n\n", text)
    return text.strip()
