"""Tests for report rendering."""

import pytest

from src.evaluation import TN_FOOTNOTE, MetricsReport, render_report, render_text, render_tsv


@pytest.fixture
def four_reports():
    """One report per method."""
    return [
        MetricsReport("ST", tp=21, fp=1, fn=16, tn=300),
        MetricsReport("MWT", tp=21, fp=2, fn=16, tn=290),
        MetricsReport("ST+Aug+DisAmbig", tp=34, fn=3, tn=500),
        MetricsReport("MWT+Aug+DisAmbig", tp=37, tn=480),
    ]


class TestRenderTsv:
    """Tests for render_tsv."""

    def test_header_and_rows(self, four_reports):
        """Test one header line and one line per report."""
        lines = render_tsv(four_reports).splitlines()

        assert len(lines) == 5
        assert lines[0].split("\t") == [
            "method", "precision", "recall", "f1", "accuracy", "tp", "fp", "fn", "tn",
        ]
        assert lines[4].startswith("MWT+Aug+DisAmbig\t1.0\t1.0\t1.0")

    def test_full_precision(self):
        """Test rates keep their float precision."""
        lines = render_tsv([MetricsReport("ST", tp=637, fp=13, fn=63)]).splitlines()

        assert len(lines) == 2
        assert lines[1].startswith("ST\t0.98\t0.91")
        assert lines[1].endswith("\t637\t13\t63\t0")


class TestRenderText:
    """Tests for render_text."""

    def test_rounded_rates_and_footnote(self):
        """Test rates are printed with two decimals under a footnote."""
        text = render_text([MetricsReport("ST", tp=9, fp=1, fn=2)])

        assert "0.90" in text
        assert "0.82" in text
        assert TN_FOOTNOTE in text


class TestRenderReport:
    """Tests for render_report."""

    def test_writes_both_files(self, tmp_path, four_reports):
        """Test the TSV and text companion are written."""
        text_path = render_report(four_reports, tmp_path / "out" / "results.tsv")

        assert text_path == tmp_path / "out" / "results.txt"
        assert len((tmp_path / "out" / "results.tsv").read_text().splitlines()) == 5
        assert TN_FOOTNOTE in text_path.read_text()

    def test_rounded_text(self, tmp_path):
        """Test the text table shows two-decimal precision."""
        text_path = render_report(
            [MetricsReport("MWT+Aug+DisAmbig", tp=637, fp=13, fn=63)],
            tmp_path / "results.tsv",
        )

        assert "0.98" in text_path.read_text()

    def test_empty_refused(self, tmp_path):
        """Test an empty report list is an error."""
        with pytest.raises(ValueError):
            render_report([], tmp_path / "results.tsv")
