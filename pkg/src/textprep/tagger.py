"""Rule-based geospatial tagging."""

import dataclasses
from collections.abc import Sequence

from .tokens import Tag, Token

TRIGGER_WORDS = frozenset(
    {
        "from",
        "to",
        "in",
        "at",
        "via",
        "through",
        "toward",
        "towards",
        "near",
        "reached",
        "crossed",
        "left",
    }
)
TRIGGER_DISTANCE = 2


def _is_candidate(tokens: Sequence[Token], i: int) -> bool:
    token = tokens[i]
    if not token.capitalized:
        return False

    for j in range(max(0, i - TRIGGER_DISTANCE), i):
        prior = tokens[j]
        if (
            prior.sentence_index == token.sentence_index
            and prior.text.lower() in TRIGGER_WORDS
        ):
            return True

    sentence_initial = i == 0 or tokens[i - 1].sentence_index != token.sentence_index
    return sentence_initial and token.comma_after


def tag_geospatial(tokens: Sequence[Token]) -> list[Token]:
    """Tag tokens as geospatial candidates or other.

    A token is a candidate when it is capitalized and either follows a
    trigger word (``from``, ``to``, ``reached`` ...) within two tokens of
    the same sentence, or opens its sentence and is followed by a comma.
    Only the tag field changes.

    Args:
        tokens: Tokens in narrative order.

    Returns:
        New tokens with tags set.
    """
    return [
        dataclasses.replace(
            token, tag=Tag.GEOSPATIAL if _is_candidate(tokens, i) else Tag.OTHER
        )
        for i, token in enumerate(tokens)
    ]


def tagged_pairs(tokens: Sequence[Token]) -> list[tuple[str, str]]:
    """Return ``(text, tag)`` pairs, tagging untagged tokens first."""
    if any(t.tag is None for t in tokens):
        tokens = tag_geospatial(tokens)
    return [(t.text, str(t.tag)) for t in tokens]
