"""Order-sensitive scoring of a predicted trajectory against ground truth."""

import itertools
from collections.abc import Hashable, Sequence
from dataclasses import dataclass

from ..textprep.preprocess import normalize_key
from ..trajectory import Trajectory
from .ground_truth import GroundTruth


def _ratio(numerator: int, denominator: int) -> float:
    return numerator / denominator if denominator else 0.0


@dataclass(frozen=True)
class MetricsReport:
    """Confusion counts of one method, with the derived rates."""

    method: str
    tp: int = 0
    fp: int = 0
    fn: int = 0
    tn: int = 0

    def __post_init__(self):
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise ValueError("confusion counts must be non-negative")

    @property
    def precision(self) -> float:
        return _ratio(self.tp, self.tp + self.fp)

    @property
    def recall(self) -> float:
        return _ratio(self.tp, self.tp + self.fn)

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0

    @property
    def accuracy(self) -> float:
        return _ratio(self.tp + self.tn, self.tp + self.tn + self.fp + self.fn)

    def __add__(self, other: "MetricsReport") -> "MetricsReport":
        """Micro-average: counts are summed, rates are recomputed."""
        if not isinstance(other, MetricsReport):
            return NotImplemented
        return MetricsReport(
            method=self.method,
            tp=self.tp + other.tp,
            fp=self.fp + other.fp,
            fn=self.fn + other.fn,
            tn=self.tn + other.tn,
        )

    def to_row(self) -> dict[str, str | int | float]:
        return {
            "method": self.method,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "accuracy": self.accuracy,
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "tn": self.tn,
        }


def lcs_length(xs: Sequence[Hashable], ys: Sequence[Hashable]) -> int:
    """Length of the longest common subsequence of two sequences."""
    curr = list(itertools.repeat(0, 1 + len(ys)))
    for x in xs:
        prev = list(curr)
        for i, y in enumerate(ys):
            if x == y:
                curr[i + 1] = prev[i] + 1
            else:
                curr[i + 1] = max(curr[i], prev[i + 1])
    return curr[-1]


def score(
    predicted: Trajectory,
    gt: GroundTruth,
    rejected_candidates: int = 0,
    match_country: bool = True,
    method: str = "",
) -> MetricsReport:
    """Align a trajectory with its ground truth and count hits.

    Stops and entries are compared as ``(normalized name, country)`` pairs,
    or by normalized name alone when ``match_country`` is off. The aligned
    pairs are the true positives.

    Args:
        predicted: The extracted trajectory.
        gt: Ground-truth route of the same narrative.
        rejected_candidates: Probed tokens that matched no gazetteer entry;
            reported as true negatives.
        match_country: Require the country to match as well as the name.
        method: Method name stored on the report.

    Returns:
        The MetricsReport of this narrative.
    """
    if match_country:
        xs = [(normalize_key(s.name), s.country) for s in predicted.stops]
        ys = [(normalize_key(name), country) for name, country in gt.entries]
    else:
        xs = [(normalize_key(s.name), "") for s in predicted.stops]
        ys = [(normalize_key(name), "") for name, _ in gt.entries]

    tp = lcs_length(xs, ys)
    return MetricsReport(
        method=method,
        tp=tp,
        fp=len(xs) - tp,
        fn=len(ys) - tp,
        tn=rejected_candidates,
    )
