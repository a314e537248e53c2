"""Pytest configuration and fixtures."""

from pathlib import Path

import pytest

from src.gazetteer import Gazetteer, LocationRecord, build_gazetteer
from src.textprep import Lexicon, Token, load_lexicon

FIXTURES = Path(__file__).parent / "fixtures"
SAMPLE_GEONAMES = FIXTURES / "geonames_sample.tsv"
SMALL_TOWNS_GEONAMES = FIXTURES / "geonames_small_towns.tsv"
CORPUS_GEONAMES = FIXTURES / "geonames_corpus.tsv"
CORPUS_DIR = FIXTURES / "corpus"
LEXICON = FIXTURES / "lexicon.txt"


@pytest.fixture(scope="session")
def sample_gazetteer() -> Gazetteer:
    """Gazetteer built from the ten-place GeoNames sample."""
    return build_gazetteer(SAMPLE_GEONAMES)


@pytest.fixture(scope="session")
def corpus_gazetteer() -> Gazetteer:
    """Gazetteer covering every place of the fixture corpus."""
    return build_gazetteer(CORPUS_GEONAMES)


@pytest.fixture(scope="session")
def lexicon() -> Lexicon:
    """Multi-word lexicon of the fixture corpus."""
    return load_lexicon(LEXICON)


@pytest.fixture
def geonames_file(tmp_path: Path):
    """Write GeoNames rows to a temporary TSV file.

    Each row is a dict of the fields that matter; the rest get defaults.
    """

    def write(*rows: dict, name: str = "geonames.tsv") -> Path:
        path = tmp_path / name
        path.write_text("".join(geonames_row(**row) for row in rows), encoding="utf-8")
        return path

    return write


def geonames_row(
    name: str,
    country: str,
    lat: float = 0.0,
    lon: float = 0.0,
    population: int = 0,
    alternatenames: str = "",
    asciiname: str = "",
    feature_class: str = "P",
    geonameid: int = 1,
) -> str:
    """One GeoNames main-table line with 19 tab-separated fields."""
    fields = [
        str(geonameid),
        name,
        asciiname or name,
        alternatenames,
        str(lat),
        str(lon),
        feature_class,
        "PPL",
        country,
        "",
        "01",
        "",
        "",
        "",
        str(population),
        "",
        "0",
        "UTC",
        "2020-01-01",
    ]
    return "\t".join(fields) + "\n"


def make_record(
    name: str,
    country: str,
    lat: float = 0.0,
    lon: float = 0.0,
    population: int = 0,
    canonical: str | None = None,
) -> LocationRecord:
    """A gazetteer record with sensible defaults."""
    return LocationRecord(
        name=name,
        ascii_name=name,
        country=country,
        longitude=lon,
        latitude=lat,
        population=population,
        synonym_canonical=canonical,
    )


def make_tokens(*texts: str, sentence_index: int = 0) -> list[Token]:
    """Tokens with consecutive ordinals, all in one sentence."""
    return [
        Token(text=text, ordinal=i, sentence_index=sentence_index)
        for i, text in enumerate(texts)
    ]
