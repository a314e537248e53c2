"""Evaluation report files: a TSV table and an aligned text table."""

from collections.abc import Sequence
from pathlib import Path

from tabulate import tabulate

from ..config import get_logger
from .metrics import MetricsReport

logger = get_logger(__name__)

COLUMNS = ("method", "precision", "recall", "f1", "accuracy", "tp", "fp", "fn", "tn")

TN_FOOTNOTE = (
    "TN counts probed tokens that matched no gazetteer entry. It is a "
    "definition of this tool, used only to make accuracy computable."
)


def render_tsv(reports: Sequence[MetricsReport]) -> str:
    """Tab-separated table at full float precision."""
    lines = ["\t".join(COLUMNS)]
    for report in reports:
        row = report.to_row()
        lines.append("\t".join(str(row[c]) for c in COLUMNS))
    return "\n".join(lines) + "\n"


def render_text(reports: Sequence[MetricsReport]) -> str:
    """Human-readable table with rates rounded to two decimals."""
    rows = [[report.to_row()[c] for c in COLUMNS] for report in reports]
    table = tabulate(rows, headers=COLUMNS, tablefmt="simple", floatfmt=".2f")
    return f"{table}\n\n* {TN_FOOTNOTE}\n"


def render_report(reports: Sequence[MetricsReport], path: str | Path) -> Path:
    """Write the TSV report and its text companion.

    Args:
        reports: One report per method, in display order.
        path: TSV destination; the text table goes next to it with a
            ``.txt`` suffix.

    Returns:
        Path of the text table.

    Raises:
        ValueError: If ``reports`` is empty.
        OSError: If a file cannot be written.
    """
    if not reports:
        raise ValueError("at least one report is required")

    path = Path(path)
    text_path = path.with_suffix(".txt")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_tsv(reports), encoding="utf-8")
    text_path.write_text(render_text(reports), encoding="utf-8")

    logger.info("Report written", tsv=str(path), text=str(text_path), rows=len(reports))
    return text_path
