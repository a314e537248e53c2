"""Significant-entity (ST) and multi-word (MWT) tokenizers."""

import re
from dataclasses import dataclass, replace

from .lexicon import Lexicon
from .tagger import tag_geospatial
from .tokens import Token

# Abbreviations whose period never ends a sentence
ABBREVIATIONS = ("Mr", "Mrs", "Dr", "St")

# Lowercase words allowed inside a run of capitalized words ("Gulf of Mexico")
CONNECTORS = frozenset({"of", "al", "el", "de"})

_LEXEME = re.compile(
    r"(?P<word>(?:[A-Z]\.){2,}"  # U.S.
    rf"|(?:{'|'.join(ABBREVIATIONS)})\.(?![A-Za-z])"  # Mr. St.
    r"|[A-Za-z0-9]+(?:['\-][A-Za-z0-9]+)*)"  # Tel-Aviv, Syria's
    r"|(?P<end>[.!?]+)"
    r"|(?P<comma>,)"
    r"|(?P<other>\S)"
)


@dataclass
class _Word:
    """A scanned word and the punctuation around it."""

    text: str
    sentence_index: int
    start: int
    end: int
    comma_after: bool = False
    break_after: bool = False


def _scan(clean_text: str) -> list[_Word]:
    """Split clean text into words, tracking sentences and punctuation."""
    words: list[_Word] = []
    sentence = 0
    sentence_open = False

    for match in _LEXEME.finditer(clean_text):
        kind = match.lastgroup
        if kind == "word":
            words.append(
                _Word(match.group(), sentence, match.start(), match.end())
            )
            sentence_open = True
            continue

        if words and words[-1].sentence_index == sentence:
            last = words[-1]
            if not last.break_after and kind == "comma":
                last.comma_after = True
            last.break_after = True

        if kind == "end" and sentence_open:
            sentence += 1
            sentence_open = False

    return words


def split_words(clean_text: str) -> list[str]:
    """Plain word splitting: the words of the text in order."""
    return [w.text for w in _scan(clean_text)]


def split_sentences(clean_text: str) -> list[list[str]]:
    """Group the words of the text by sentence."""
    sentences: list[list[str]] = []
    for word in _scan(clean_text):
        while len(sentences) <= word.sentence_index:
            sentences.append([])
        sentences[word.sentence_index].append(word.text)
    return [s for s in sentences if s]


def _token(words: list[_Word], ordinal: int) -> Token:
    first, last = words[0], words[-1]
    return Token(
        text=" ".join(w.text for w in words),
        ordinal=ordinal,
        sentence_index=first.sentence_index,
        start=first.start,
        end=last.end,
        comma_after=last.comma_after,
    )


def _capitalized(word: _Word) -> bool:
    for ch in word.text:
        if ch.isalpha():
            return ch.isupper()
    return False


def _joins(words: list[_Word], i: int) -> int:
    """Number of words that extend the capitalized run ending at ``i``.

    Returns 1 for a capitalized neighbour, 2 for a connector followed by a
    capitalized word, 0 when the run ends.
    """
    here = words[i]
    if here.break_after or i + 1 >= len(words):
        return 0
    nxt = words[i + 1]
    if nxt.sentence_index != here.sentence_index:
        return 0
    if _capitalized(nxt):
        return 1
    if (
        nxt.text.lower() in CONNECTORS
        and not nxt.break_after
        and i + 2 < len(words)
        and words[i + 2].sentence_index == here.sentence_index
        and _capitalized(words[i + 2])
    ):
        return 2
    return 0


def tokenize_st(clean_text: str) -> list[Token]:
    """Significant-entity tokenization.

    Extracts maximal runs of capitalized words (allowing the connectors
    ``of``, ``al``, ``el`` and ``de`` inside a run) as entity tokens. The
    geospatial tagger runs over the full word stream so trigger words are
    seen, and each entity keeps its tag.

    Args:
        clean_text: Preprocessed narrative text.

    Returns:
        Entity tokens in text order, with gapless ordinals.
    """
    words = _scan(clean_text)
    stream: list[Token] = []
    is_entity: list[bool] = []

    i = 0
    while i < len(words):
        if not _capitalized(words[i]):
            stream.append(_token([words[i]], len(stream)))
            is_entity.append(False)
            i += 1
            continue

        end = i
        while step := _joins(words, end):
            end += step
        stream.append(_token(words[i : end + 1], len(stream)))
        is_entity.append(True)
        i = end + 1

    tagged = tag_geospatial(stream)
    entities = [t for t, keep in zip(tagged, is_entity) if keep]
    return [replace(t, ordinal=n) for n, t in enumerate(entities)]


def tokenize_mwt(clean_text: str, lex: Lexicon) -> list[Token]:
    """Multi-word tokenization.

    Splits the text into sentences and words, then merges lexicon phrases
    greedily, longest match first, scanning left to right. Phrases never
    cross sentence boundaries. Tokens are returned untagged.

    Args:
        clean_text: Preprocessed narrative text.
        lex: Multi-word lexicon.

    Returns:
        Tokens in text order, with gapless ordinals.
    """
    words = _scan(clean_text)
    tokens: list[Token] = []

    i = 0
    while i < len(words):
        size = 1
        for n in range(min(lex.longest, len(words) - i), 1, -1):
            span = words[i : i + n]
            if span[-1].sentence_index != span[0].sentence_index or any(
                w.break_after for w in span[:-1]
            ):
                continue
            if lex.matches(tuple(w.text.lower() for w in span)):
                size = n
                break
        tokens.append(_token(words[i : i + size], len(tokens)))
        i += size

    return tokens
