"""Tests for the multi-word lexicon."""

import pytest

from src.errors import LexiconError
from src.textprep.lexicon import Lexicon, load_lexicon

from .conftest import LEXICON


class TestLexicon:
    """Tests for the Lexicon type."""

    def test_contains_case_insensitive(self):
        """Test membership ignores case and extra spaces."""
        lex = Lexicon.of("New Orleans", "Rio de Janeiro")

        assert "new orleans" in lex
        assert "RIO  DE JANEIRO" in lex
        assert "Orleans" not in lex
        assert 42 not in lex

    def test_longest(self):
        """Test the longest phrase length in words."""
        assert Lexicon.of("New Orleans", "Rio de Janeiro").longest == 3
        assert Lexicon().longest == 0

    def test_single_word_phrase_rejected(self):
        """Test phrases need at least two words."""
        with pytest.raises(ValueError):
            Lexicon.of("Beirut")

    def test_matches_word_tuple(self):
        """Test matching against a lowercased word tuple."""
        lex = Lexicon.of("Baton Rouge")

        assert lex.matches(("baton", "rouge"))
        assert not lex.matches(("baton",))

    def test_accented_phrase_matches_folded_words(self):
        """Test accented phrases match the ASCII-folded narrative words."""
        lex = Lexicon.of("São Tomé")

        assert lex.matches(("sao", "tome"))
        assert "Sao Tome" in lex
        assert "SÃO TOMÉ" in lex


class TestLoadLexicon:
    """Tests for load_lexicon."""

    def test_fixture_lexicon(self):
        """Test the fixture lexicon loads all its phrases."""
        lex = load_lexicon(LEXICON)

        assert len(lex) == 5
        assert "Sao Paulo" in lex
        assert lex.rejected == 0

    def test_comments_blank_and_single_words(self, tmp_path):
        """Test comments and blanks are skipped, single words counted."""
        path = tmp_path / "lexicon.txt"
        path.write_text(
            "# places\n\nNew Orleans\nBeirut\n  Baton   Rouge  \nParis\n",
            encoding="utf-8",
        )

        lex = load_lexicon(path)

        assert lex.phrases == frozenset({"New Orleans", "Baton Rouge"})
        assert lex.rejected == 2

    def test_missing_file(self, tmp_path):
        """Test an unreadable file raises LexiconError naming the path."""
        missing = tmp_path / "nope.txt"

        with pytest.raises(LexiconError, match="nope.txt"):
            load_lexicon(missing)
