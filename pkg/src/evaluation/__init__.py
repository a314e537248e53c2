"""Ground truth, scoring and the method comparison suite."""

from .ground_truth import (
    GROUND_TRUTH_SUFFIX,
    GroundTruth,
    ground_truth_id,
    load_ground_truth,
    load_ground_truths,
)
from .metrics import MetricsReport, lcs_length, score
from .report import COLUMNS, TN_FOOTNOTE, render_report, render_text, render_tsv
from .suite import pair_corpus, run_suite, score_narrative

__all__ = [
    "GROUND_TRUTH_SUFFIX",
    "GroundTruth",
    "ground_truth_id",
    "load_ground_truth",
    "load_ground_truths",
    "MetricsReport",
    "lcs_length",
    "score",
    "COLUMNS",
    "TN_FOOTNOTE",
    "render_report",
    "render_text",
    "render_tsv",
    "pair_corpus",
    "run_suite",
    "score_narrative",
]
