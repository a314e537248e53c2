"""Run the extraction methods over a corpus and score them."""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from functools import reduce

from ..config import get_logger
from ..errors import CorpusMismatchError
from ..gazetteer import Gazetteer
from ..methods import ALL_METHODS, Method
from ..pipeline import DisambiguationOptions, run_method
from ..textprep import Lexicon, Narrative
from .ground_truth import GroundTruth
from .metrics import MetricsReport, score

logger = get_logger(__name__)


def pair_corpus(
    narratives: Sequence[Narrative], gts: Sequence[GroundTruth]
) -> list[tuple[Narrative, GroundTruth]]:
    """Pair every narrative with its ground truth by id.

    Raises:
        CorpusMismatchError: If the corpus is empty or a narrative has no
            ground truth.
    """
    if not narratives:
        raise CorpusMismatchError([], "empty corpus")

    by_id = {gt.narrative_id: gt for gt in gts}
    missing = [n.id for n in narratives if n.id not in by_id]
    if missing:
        raise CorpusMismatchError(missing)

    extra = sorted(set(by_id) - {n.id for n in narratives})
    if extra:
        logger.warning("Ground truth without narrative ignored", ids=extra)

    return [(n, by_id[n.id]) for n in sorted(narratives, key=lambda n: n.id)]


def score_narrative(
    narrative: Narrative,
    gt: GroundTruth,
    method: Method,
    g: Gazetteer,
    lex: Lexicon,
    options: DisambiguationOptions,
) -> MetricsReport:
    """Run one method on one narrative and score the trajectory."""
    result = run_method(narrative, method, g, lex, options)
    return score(
        result.trajectory,
        gt,
        rejected_candidates=result.rejected_candidates,
        match_country=method.augmented,
        method=str(method),
    )


def run_suite(
    narratives: Sequence[Narrative],
    gts: Sequence[GroundTruth],
    g: Gazetteer,
    lex: Lexicon,
    options: DisambiguationOptions | None = None,
    methods: Sequence[Method] | None = None,
    workers: int = 1,
) -> list[MetricsReport]:
    """Score each method over the corpus, micro-averaged.

    The baselines are matched to the ground truth by name only since they
    emit no reliable country; the augmented methods must match the country
    too.

    Args:
        narratives: The corpus.
        gts: One ground truth per narrative, paired by id.
        g: Gazetteer, shared read-only by the workers.
        lex: Multi-word lexicon.
        options: Disambiguation knobs.
        methods: Methods to run; all four when None.
        workers: Narratives scored concurrently.

    Returns:
        One MetricsReport per method, in method order.

    Raises:
        CorpusMismatchError: On an empty corpus or missing ground truth.
    """
    pairs = pair_corpus(narratives, gts)
    options = options or DisambiguationOptions()
    methods = tuple(methods or ALL_METHODS)

    reports = []
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        for method in methods:
            per_narrative = list(
                executor.map(
                    lambda pair, m=method: score_narrative(*pair, m, g, lex, options),
                    pairs,
                )
            )
            total = reduce(
                lambda a, b: a + b, per_narrative, MetricsReport(method=str(method))
            )
            logger.info(
                "Method scored",
                method=str(method),
                narratives=len(pairs),
                precision=round(total.precision, 4),
                recall=round(total.recall, 4),
                f1=round(total.f1, 4),
            )
            reports.append(total)

    return reports
