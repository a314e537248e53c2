"""Tests for running one method end to end."""

import pytest

from src.methods import ALL_METHODS, Method
from src.pipeline import DisambiguationOptions, run_method, tokenize
from src.textprep import Narrative
from src.trajectory import to_geojson

from .conftest import CORPUS_DIR


def narrative(stem: str) -> Narrative:
    return Narrative.from_file(CORPUS_DIR / f"{stem}.txt")


class TestTokenize:
    """Tests for the tokenizer front-ends."""

    def test_mwt_keeps_lexicon_phrases(self, lexicon):
        """Test MWT emits lexicon phrases as single tokens."""
        tokens = tokenize(narrative("n04"), Method.MWT_AUG, lexicon)

        assert "Rio de Janeiro" in [t.text for t in tokens]

    def test_st_groups_capitalized_runs(self, lexicon):
        """Test ST groups capitalized runs and connectors without the lexicon."""
        texts = [t.text for t in tokenize(narrative("n04"), Method.ST_AUG, lexicon)]

        assert "Rio de Janeiro" in texts
        assert "Then New Orleans" in texts
        assert "New Orleans" not in texts


class TestRunMethod:
    """Tests for run_method."""

    def test_full_method_route(self, corpus_gazetteer, lexicon):
        """Test the full method resolves Tripoli by its Levantine neighbours."""
        result = run_method(narrative("n01"), Method.MWT_AUG, corpus_gazetteer, lexicon)

        assert [(s.name, s.country) for s in result.trajectory.stops] == [
            ("Aleppo", "SY"),
            ("Tripoli", "LB"),
            ("Beirut", "LB"),
        ]

    def test_libyan_tripoli(self, corpus_gazetteer, lexicon):
        """Test Tripoli among Libyan towns resolves to Libya."""
        result = run_method(narrative("n09"), Method.MWT_AUG, corpus_gazetteer, lexicon)

        assert ("Tripoli", "LY") in [(s.name, s.country) for s in result.trajectory.stops]

    def test_synonyms_become_canonical(self, corpus_gazetteer, lexicon):
        """Test old names come back under their canonical name."""
        result = run_method(narrative("n10"), Method.MWT_AUG, corpus_gazetteer, lexicon)

        names = [s.name for s in result.trajectory.stops]
        assert "Madras" not in names
        assert "Pune" in names

    def test_baseline_keeps_surface_names(self, corpus_gazetteer, lexicon):
        """Test baseline stops carry the text as written in the narrative."""
        source = narrative("n10")

        result = run_method(source, Method.ST, corpus_gazetteer, lexicon)

        for stop in result.trajectory.stops:
            assert stop.name in source.clean_text

    def test_baseline_probes_only_tagged_tokens(self, corpus_gazetteer, lexicon):
        """Test baselines join fewer tokens than the augmented variant."""
        source = narrative("n01")

        baseline = run_method(source, Method.MWT, corpus_gazetteer, lexicon)
        augmented = run_method(source, Method.MWT_AUG, corpus_gazetteer, lexicon)

        assert len(baseline.augmented) <= len(augmented.augmented)
        assert augmented.rejected_candidates > baseline.rejected_candidates

    def test_rejected_candidates(self, corpus_gazetteer, lexicon):
        """Test rejected candidates count probed tokens without a match."""
        result = run_method(narrative("n01"), Method.MWT_AUG, corpus_gazetteer, lexicon)

        assert result.rejected_candidates == len(result.tokens) - len(result.augmented)

    def test_capitalized_only_probes_fewer(self, corpus_gazetteer, lexicon):
        """Test capitalized-only probing keeps the route but rejects less."""
        source = narrative("n01")

        wide = run_method(source, Method.MWT_AUG, corpus_gazetteer, lexicon)
        narrow = run_method(
            source,
            Method.MWT_AUG,
            corpus_gazetteer,
            lexicon,
            DisambiguationOptions(capitalized_only=True),
        )

        assert narrow.trajectory.stops == wide.trajectory.stops
        assert narrow.rejected_candidates < wide.rejected_candidates

    def test_no_locations(self, corpus_gazetteer, lexicon):
        """Test a narrative without places gives an empty trajectory."""
        source = Narrative("quiet", "Nothing happened and nobody went anywhere.")

        result = run_method(source, Method.MWT_AUG, corpus_gazetteer, lexicon)

        assert result.trajectory.empty
        assert result.places == []

    @pytest.mark.parametrize("method", ALL_METHODS)
    def test_deterministic(self, method, corpus_gazetteer, lexicon):
        """Test two runs produce byte-identical trajectories."""
        source = narrative("n09")

        first = run_method(source, method, corpus_gazetteer, lexicon)
        second = run_method(source, method, corpus_gazetteer, lexicon)

        assert to_geojson(first.trajectory) == to_geojson(second.trajectory)
