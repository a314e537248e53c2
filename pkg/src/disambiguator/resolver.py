"""Locality-window disambiguation of homonym and synonym place names.

A homonym takes the country of the place visited just before it or just
after it, provided one of its candidates lies in that country. Aliases take
the country of their formal place. Sweeps repeat until nothing changes;
tokens still unresolved then fall back to a configured default.
"""

import dataclasses
from collections.abc import Sequence
from dataclasses import dataclass

from ..config import get_logger
from ..gazetteer import Gazetteer
from ..methods import Fallback
from .augment import AugmentedToken, Resolution

logger = get_logger(__name__)


@dataclass(frozen=True)
class ResolvedPlace:
    """A fully disambiguated location mention.

    Attributes:
        name: Canonical display name.
        country: ISO country code.
        longitude: Decimal degrees.
        latitude: Decimal degrees.
        ordinal: Token ordinal of the mention.
        surface: Name as written in the narrative.
        rule: How the country was chosen.
    """

    name: str
    country: str
    longitude: float
    latitude: float
    ordinal: int
    surface: str = ""
    rule: str | None = None

    @property
    def key(self) -> tuple[str, str]:
        """Identity used for repeat-visit detection."""
        return (self.name, self.country)


@dataclass
class ResolutionOutcome:
    """Augmented tokens after country resolution."""

    tokens: list[AugmentedToken]
    sweeps: int

    @property
    def unresolved(self) -> list[AugmentedToken]:
        """Tokens left without a country."""
        return [a for a in self.tokens if not a.resolved]


def window_context(
    aug: Sequence[AugmentedToken], i: int, k: int = 1
) -> tuple[str | None, str | None]:
    """Countries of the nearest resolved neighbours within ``k`` positions.

    Args:
        aug: Augmented tokens in narrative order.
        i: Index of the token of interest.
        k: Window radius.

    Returns:
        ``(prior, next)`` country codes, None where no resolved neighbour
        lies within the window.
    """
    prior = next(
        (
            aug[j].resolved_country
            for j in range(i - 1, max(-1, i - k - 1), -1)
            if aug[j].resolved
        ),
        None,
    )
    following = next(
        (
            aug[j].resolved_country
            for j in range(i + 1, min(len(aug), i + k + 1))
            if aug[j].resolved
        ),
        None,
    )
    return prior, following


def _assign(token: AugmentedToken, country: str, rule: Resolution) -> None:
    token.resolved_country = country
    token.rule = rule
    logger.debug(
        "Token resolved",
        token=token.token.text,
        ordinal=token.token.ordinal,
        country=country,
        rule=str(rule),
    )


def _sweep(tokens: list[AugmentedToken], k: int) -> int:
    """One pass of the homonym rules; returns the number of tokens resolved."""
    n = len(tokens)
    resolved = 0
    for i, token in enumerate(tokens):
        if token.resolved:
            continue
        # The ends have a single side; it is scanned to the nearest resolved token
        edge = i == 0 or i == n - 1
        prior, following = window_context(tokens, i, n if edge else k)

        if i == 0:
            if following and token.has_candidate_in(following):
                _assign(token, following, Resolution.FIRST)
        elif i == n - 1:
            if prior and token.has_candidate_in(prior):
                _assign(token, prior, Resolution.LAST)
        elif prior and token.has_candidate_in(prior):
            _assign(token, prior, Resolution.PRIOR)
        elif following and token.has_candidate_in(following):
            _assign(token, following, Resolution.NEXT)

        if token.resolved:
            resolved += 1
    return resolved


def _fall_back(token: AugmentedToken, policy: Fallback) -> None:
    if policy is Fallback.POPULATION:
        choice = max(token.candidates, key=lambda c: c.population)
    else:
        choice = token.candidates[0]
    _assign(token, choice.country, Resolution.FALLBACK)


def resolve_countries(
    aug: Sequence[AugmentedToken],
    window_k: int = 1,
    paper_strict: bool = False,
    fallback: Fallback = Fallback.POPULATION,
) -> ResolutionOutcome:
    """Assign a country to every augmented token that can get one.

    Args:
        aug: Augmented tokens in narrative order; left untouched.
        window_k: Locality window radius.
        paper_strict: Run a single sweep and never fall back.
        fallback: Policy for tokens the window cannot resolve.

    Returns:
        Resolved copies of the tokens and the number of sweeps run.
    """
    tokens = [dataclasses.replace(a) for a in aug]

    # An alias pins its formal place, so synonyms resolve before homonyms
    for token in tokens:
        if not token.resolved and token.synonym_canonical:
            alias = next(
                c
                for c in token.candidates
                if c.is_alias and c.canonical_name == token.synonym_canonical
            )
            _assign(token, alias.country, Resolution.SYNONYM)

    sweeps = 0
    while any(not t.resolved for t in tokens):
        sweeps += 1
        if not _sweep(tokens, window_k) or paper_strict:
            break

    if not paper_strict and fallback is not Fallback.NONE:
        for token in tokens:
            if not token.resolved:
                _fall_back(token, fallback)

    return ResolutionOutcome(tokens=tokens, sweeps=sweeps)


def disambiguate(
    aug: Sequence[AugmentedToken],
    g: Gazetteer,
    window_k: int = 1,
    paper_strict: bool = False,
    fallback: Fallback = Fallback.POPULATION,
) -> list[ResolvedPlace]:
    """Resolve augmented tokens to places with coordinates.

    Args:
        aug: Augmented tokens in narrative order.
        g: The gazetteer the tokens were joined against.
        window_k: Locality window radius.
        paper_strict: Single sweep, no fallback.
        fallback: Policy for tokens the window cannot resolve.

    Returns:
        One place per resolved token, in narrative order, repeats kept.

    Raises:
        GazetteerConsistencyError: If a resolved pair no longer matches the
            gazetteer.
    """
    outcome = resolve_countries(aug, window_k, paper_strict, fallback)

    places = []
    for token in outcome.tokens:
        if token.resolved_country is None:
            logger.warning(
                "Token left unresolved",
                token=token.token.text,
                ordinal=token.token.ordinal,
                candidates=len(token.candidates),
            )
            continue
        record = g.resolve(token.probe or token.token.text, token.resolved_country)
        places.append(
            ResolvedPlace(
                name=record.name,
                country=record.country,
                longitude=record.longitude,
                latitude=record.latitude,
                ordinal=token.token.ordinal,
                surface=token.token.text,
                rule=str(token.rule) if token.rule else None,
            )
        )

    logger.debug(
        "Disambiguation finished",
        tokens=len(outcome.tokens),
        places=len(places),
        sweeps=outcome.sweeps,
    )
    return places
