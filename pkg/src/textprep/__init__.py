"""Narrative preprocessing, tokenization and tagging."""

from .lexicon import Lexicon, load_lexicon
from .narrative import Narrative, load_narratives
from .preprocess import fold_ascii, normalize_key, preprocess
from .tagger import TRIGGER_WORDS, tag_geospatial, tagged_pairs
from .tokenizers import split_sentences, split_words, tokenize_mwt, tokenize_st
from .tokens import Tag, Token

__all__ = [
    "Lexicon",
    "load_lexicon",
    "Narrative",
    "load_narratives",
    "fold_ascii",
    "normalize_key",
    "preprocess",
    "TRIGGER_WORDS",
    "tag_geospatial",
    "tagged_pairs",
    "split_sentences",
    "split_words",
    "tokenize_mwt",
    "tokenize_st",
    "Tag",
    "Token",
]
