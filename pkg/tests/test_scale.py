"""Timing of a long narrative against a large gazetteer."""

import random
import time

import pytest

from src.methods import ALL_METHODS
from src.pipeline import run_method
from src.textprep import Lexicon
from tools.benchmark_parse import synthetic_gazetteer, synthetic_narrative

RECORDS = 100_000
WORDS = 4212
LIMIT_SECONDS = 2.0


@pytest.fixture(scope="module")
def large_gazetteer():
    """A synthetic gazetteer of a hundred thousand records."""
    return synthetic_gazetteer(RECORDS, random.Random(7))


@pytest.fixture(scope="module")
def long_narrative(large_gazetteer):
    """A narrative at the top of the corpus length range."""
    return synthetic_narrative(WORDS, large_gazetteer, random.Random(11))


@pytest.mark.slow
class TestScale:
    """Tests for parse time at corpus scale."""

    def test_inputs_at_scale(self, large_gazetteer, long_narrative):
        """Test the synthetic inputs have the intended size."""
        assert len(large_gazetteer) == RECORDS
        assert long_narrative.word_count == WORDS

    @pytest.mark.parametrize("method", ALL_METHODS, ids=str)
    def test_parse_within_limit(self, large_gazetteer, long_narrative, method):
        """Test one parse finishes inside the time limit."""
        start = time.perf_counter()
        result = run_method(long_narrative, method, large_gazetteer, Lexicon())
        elapsed = time.perf_counter() - start

        assert result.trajectory.stops
        assert elapsed < LIMIT_SECONDS
