"""Augmentation: the order-preserving join of tokens with the gazetteer."""

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import StrEnum

from ..gazetteer import Gazetteer, LocationRecord
from ..textprep import Tag, Token


class Resolution(StrEnum):
    """Rule that assigned a token's country."""

    UNIQUE = "unique"
    SYNONYM = "synonym"
    FIRST = "first"
    LAST = "last"
    PRIOR = "prior"
    NEXT = "next"
    FALLBACK = "fallback"


@dataclass
class AugmentedToken:
    """A token joined with its gazetteer candidates.

    Attributes:
        token: The narrative token.
        candidates: Matching records in gazetteer order.
        resolved_country: ISO code once resolved, None until then.
        homonym_count: Distinct places the name can denote.
        synonym_canonical: Formal name when the token is an alias.
        probe: The name that matched the gazetteer.
        rule: How ``resolved_country`` was set.
    """

    token: Token
    candidates: tuple[LocationRecord, ...] = ()
    resolved_country: str | None = None
    homonym_count: int = 0
    synonym_canonical: str | None = None
    probe: str = ""
    rule: Resolution | None = field(default=None)

    @property
    def resolved(self) -> bool:
        """Whether a country has been assigned."""
        return self.resolved_country is not None

    def has_candidate_in(self, country: str) -> bool:
        """Whether one of the candidates lies in ``country``."""
        return any(c.country == country for c in self.candidates)


def _probe_names(text: str) -> list[str]:
    names = [text]
    if text.endswith("'s") and len(text) > 2:
        names.append(text[:-2])
    return names


def probe_tokens(
    tokens: Sequence[Token], use_tags: bool, capitalized_only: bool = False
) -> list[Token]:
    """Select the tokens that are looked up in the gazetteer.

    Args:
        tokens: Narrative tokens.
        use_tags: Probe only geospatial-candidate tokens (baseline mode).
        capitalized_only: Probe only capitalized tokens.

    Returns:
        The probed tokens, in order.
    """
    selected = []
    for token in tokens:
        if use_tags and token.tag is not Tag.GEOSPATIAL:
            continue
        if capitalized_only and not token.capitalized:
            continue
        selected.append(token)
    return selected


def join_token(token: Token, g: Gazetteer) -> AugmentedToken | None:
    """Join one token with the gazetteer; None when nothing matches."""
    for name in _probe_names(token.text):
        candidates = tuple(g.lookup(name))
        if candidates:
            break
    else:
        return None

    aug = AugmentedToken(
        token=token,
        candidates=candidates,
        homonym_count=max(c.homonym_count for c in candidates),
        probe=name,
    )

    aliases = [c for c in candidates if c.is_alias]
    if aliases and len({c.place for c in aliases}) == 1:
        aug.synonym_canonical = aliases[0].canonical_name
    elif len({c.place for c in candidates}) == 1:
        aug.resolved_country = candidates[0].country
        aug.rule = Resolution.UNIQUE

    return aug


def augment(
    tokens: Sequence[Token],
    g: Gazetteer,
    use_tags: bool,
    capitalized_only: bool = False,
) -> list[AugmentedToken]:
    """Join tokens with the gazetteer, keeping narrative order.

    Inner-join semantics: tokens that match nothing are dropped. Tokens
    naming exactly one place get their country immediately; homonyms and
    aliases stay unresolved for :func:`disambiguate`.

    Args:
        tokens: Narrative tokens in order.
        g: Gazetteer to probe.
        use_tags: Probe only geospatial-candidate tokens (baseline mode).
        capitalized_only: Probe only capitalized tokens.

    Returns:
        One AugmentedToken per matching token.
    """
    joined = (join_token(t, g) for t in probe_tokens(tokens, use_tags, capitalized_only))
    return [a for a in joined if a is not None]
