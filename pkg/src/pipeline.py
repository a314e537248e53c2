"""One extraction method run end-to-end over one narrative."""

from dataclasses import dataclass, field

from .config import get_logger
from .disambiguator import (
    AugmentedToken,
    ResolvedPlace,
    augment,
    disambiguate,
    probe_tokens,
)
from .gazetteer import Gazetteer
from .methods import Fallback, Method
from .textprep import Lexicon, Narrative, Token, tag_geospatial, tokenize_mwt, tokenize_st
from .trajectory import Trajectory, build_trajectory

logger = get_logger(__name__)


@dataclass(frozen=True)
class DisambiguationOptions:
    """Knobs of the augmented methods."""

    window_k: int = 1
    paper_strict: bool = False
    fallback: Fallback = Fallback.POPULATION
    capitalized_only: bool = False


@dataclass
class PipelineResult:
    """Everything one method produced for one narrative."""

    narrative_id: str
    method: Method
    trajectory: Trajectory
    tokens: list[Token] = field(default_factory=list)
    augmented: list[AugmentedToken] = field(default_factory=list)
    places: list[ResolvedPlace] = field(default_factory=list)
    rejected_candidates: int = 0


def tokenize(narrative: Narrative, method: Method, lex: Lexicon) -> list[Token]:
    """Run the method's tokenizer front-end; baseline tokens come back tagged."""
    if method.tokenizer == "st":
        # ST tags while it tokenizes so trigger words are still visible
        return tokenize_st(narrative.clean_text)
    tokens = tokenize_mwt(narrative.clean_text, lex)
    return tokens if method.augmented else tag_geospatial(tokens)


def _baseline_places(aug: list[AugmentedToken]) -> list[ResolvedPlace]:
    """First candidate per token, surface name kept, no disambiguation."""
    places = []
    for a in aug:
        first = a.candidates[0]
        places.append(
            ResolvedPlace(
                name=a.token.text,
                country=first.country,
                longitude=first.longitude,
                latitude=first.latitude,
                ordinal=a.token.ordinal,
                surface=a.token.text,
            )
        )
    return places


def run_method(
    narrative: Narrative,
    method: Method,
    g: Gazetteer,
    lex: Lexicon,
    options: DisambiguationOptions | None = None,
) -> PipelineResult:
    """Extract the trajectory of a narrative with one method.

    The baselines (ST, MWT) probe only tokens tagged as geospatial
    candidates and take each match's first gazetteer candidate as is. The
    augmented methods probe every token and disambiguate the matches.

    Args:
        narrative: The narrative to process.
        method: Extraction method.
        g: Gazetteer, shared read-only.
        lex: Multi-word lexicon (used by the MWT front-end).
        options: Disambiguation knobs; defaults when None.

    Returns:
        The PipelineResult with the built trajectory.
    """
    options = options or DisambiguationOptions()
    tokens = tokenize(narrative, method, lex)
    use_tags = not method.augmented
    capitalized_only = options.capitalized_only and method.augmented

    probed = len(probe_tokens(tokens, use_tags, capitalized_only))
    aug = augment(tokens, g, use_tags=use_tags, capitalized_only=capitalized_only)

    if method.augmented:
        places = disambiguate(
            aug,
            g,
            window_k=options.window_k,
            paper_strict=options.paper_strict,
            fallback=options.fallback,
        )
    else:
        places = _baseline_places(aug)

    trajectory = build_trajectory(narrative.id, places)
    logger.debug(
        "Method finished",
        narrative=narrative.id,
        method=str(method),
        tokens=len(tokens),
        matched=len(aug),
        stops=len(trajectory.stops),
    )
    return PipelineResult(
        narrative_id=narrative.id,
        method=method,
        tokens=tokens,
        augmented=aug,
        places=places,
        trajectory=trajectory,
        rejected_candidates=probed - len(aug),
    )
