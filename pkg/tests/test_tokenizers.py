"""Tests for the ST and MWT tokenizers."""

from hypothesis import given
from hypothesis import strategies as st

from src.textprep import Lexicon, preprocess
from src.textprep.tokenizers import (
    split_sentences,
    split_words,
    tokenize_mwt,
    tokenize_st,
)
from src.textprep.tokens import Tag

LEX = Lexicon.of("New Orleans", "Baton Rouge", "Rio de Janeiro")

VOCABULARY = [
    "we",
    "went",
    "to",
    "from",
    "New",
    "Orleans",
    "Baton",
    "Rouge",
    "Rio",
    "de",
    "Janeiro",
    "Beirut",
    "Mr.",
    "U.S.",
    "Syria's",
    ",",
    ".",
    "!",
    ";",
]


class TestSplitting:
    """Tests for word and sentence splitting."""

    def test_split_words(self):
        """Test punctuation is dropped and word-internal marks kept."""
        assert split_words("From Tel-Aviv, we crossed Syria's border.") == [
            "From",
            "Tel-Aviv",
            "we",
            "crossed",
            "Syria's",
            "border",
        ]

    def test_split_sentences(self):
        """Test sentence ends split the text."""
        text = "We left Aleppo. Then Tripoli! Was it Beirut?"
        assert split_sentences(text) == [
            ["We", "left", "Aleppo"],
            ["Then", "Tripoli"],
            ["Was", "it", "Beirut"],
        ]

    def test_abbreviations_do_not_split(self):
        """Test titles and initials keep the sentence open."""
        text = "Mr. Haddad met Dr. Khoury in the U.S. embassy."
        sentences = split_sentences(text)

        assert len(sentences) == 1
        assert sentences[0][0] == "Mr."
        assert "U.S." in sentences[0]


class TestTokenizeMwt:
    """Tests for tokenize_mwt."""

    def test_merges_lexicon_phrases(self):
        """Test lexicon phrases become single tokens."""
        tokens = tokenize_mwt("We drove from New Orleans to Baton Rouge.", LEX)

        assert [t.text for t in tokens] == [
            "We",
            "drove",
            "from",
            "New Orleans",
            "to",
            "Baton Rouge",
        ]
        assert [t.ordinal for t in tokens] == list(range(6))
        assert tokens[3].is_multiword

    def test_longest_match_wins(self):
        """Test the longest lexicon phrase is preferred."""
        lex = Lexicon.of("Rio de", "Rio de Janeiro")
        tokens = tokenize_mwt("to Rio de Janeiro", lex)

        assert [t.text for t in tokens] == ["to", "Rio de Janeiro"]

    def test_case_insensitive_match_keeps_surface(self):
        """Test matching ignores case but the token keeps the text as written."""
        tokens = tokenize_mwt("to NEW ORLEANS", LEX)

        assert tokens[1].text == "NEW ORLEANS"

    def test_accented_lexicon_entry(self):
        """Test an accented lexicon phrase merges in the cleansed text."""
        tokens = tokenize_mwt(preprocess("He flew to São Tomé."), Lexicon.of("São Tomé"))

        assert [t.text for t in tokens] == ["He", "flew", "to", "Sao Tome"]

    def test_no_merge_across_sentences(self):
        """Test phrases never cross a sentence boundary."""
        tokens = tokenize_mwt("We saw the New. Orleans came later.", LEX)

        assert "New Orleans" not in [t.text for t in tokens]

    def test_no_merge_across_comma(self):
        """Test phrases never cross a punctuation break."""
        tokens = tokenize_mwt("Old, New, Orleans", LEX)

        assert [t.text for t in tokens] == ["Old", "New", "Orleans"]

    def test_offsets(self):
        """Test token offsets point into the clean text."""
        text = "to Baton Rouge"
        token = tokenize_mwt(text, LEX)[1]

        assert text[token.start : token.end] == "Baton Rouge"

    def test_untagged(self):
        """Test MWT tokens come back untagged."""
        assert all(t.tag is None for t in tokenize_mwt("to Beirut", LEX))

    @given(st.lists(st.sampled_from(VOCABULARY), max_size=40))
    def test_reconstruction(self, words):
        """Test the token words, in order, are exactly the text's words."""
        text = preprocess(" ".join(words))
        tokens = tokenize_mwt(text, LEX)

        rebuilt = [w for t in tokens for w in t.text.split(" ")]
        assert rebuilt == split_words(text)
        assert [t.ordinal for t in tokens] == list(range(len(tokens)))


class TestTokenizeSt:
    """Tests for tokenize_st."""

    def test_capitalized_runs(self):
        """Test runs of capitalized words become entity tokens."""
        tokens = tokenize_st("we drove from New Orleans to Baton Rouge")

        assert [t.text for t in tokens] == ["New Orleans", "Baton Rouge"]

    def test_connectors_inside_run(self):
        """Test connectors join a run only between capitalized words."""
        tokens = tokenize_st("we sailed to Rio de Janeiro and then de facto home")

        assert [t.text for t in tokens] == ["Rio de Janeiro"]

    def test_sentence_initial_word_glues(self):
        """Test a capitalized sentence opener joins the following name."""
        tokens = tokenize_st("Then Tripoli welcomed us.")

        assert tokens[0].text == "Then Tripoli"

    def test_tags_use_trigger_context(self):
        """Test entities keep the tag computed over the full word stream."""
        tokens = tokenize_st("We left Aleppo. Beirut was far.")
        tags = {t.text: t.tag for t in tokens}

        assert tags["Aleppo"] is Tag.GEOSPATIAL
        assert tags["Beirut"] is Tag.OTHER

    def test_ordinals_gapless(self):
        """Test entity ordinals are renumbered from zero."""
        tokens = tokenize_st("we met Omar in Beirut and Layla in Sidon")

        assert [t.ordinal for t in tokens] == [0, 1, 2, 3]

    @given(st.lists(st.sampled_from(VOCABULARY), max_size=40))
    def test_entities_are_capitalized(self, words):
        """Test every ST token starts with a capital letter."""
        tokens = tokenize_st(preprocess(" ".join(words)))

        assert all(t.capitalized for t in tokens)
