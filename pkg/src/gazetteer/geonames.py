"""GeoNames main-table ingestion."""

from collections.abc import Collection, Iterator, Sequence
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from ..config import get_logger
from ..errors import EmptyGazetteerError, GazetteerIngestError
from ..textprep.preprocess import fold_ascii, normalize_key
from .records import BuildMetadata, Gazetteer, LocationRecord

logger = get_logger(__name__)

# Names of the fields in the geonames dump format.
# See https://download.geonames.org/export/dump/readme.txt
GEONAMES_FIELDNAMES = (
    "geonameid",  # integer id of record in geonames database
    "name",  # name of geographical point (utf8)
    "asciiname",  # name of geographical point in plain ascii characters
    "alternatenames",  # comma separated alternate names
    "latitude",  # decimal degrees (wgs84)
    "longitude",  # decimal degrees (wgs84)
    "feature_class",  # see http://www.geonames.org/export/codes.html
    "feature_code",
    "country_code",  # ISO-3166 2-letter country code
    "cc2",  # alternate country codes, comma separated
    "admin1_code",  # first-level administrative division
    "admin2_code",
    "admin3_code",
    "admin4_code",
    "population",
    "elevation",
    "dem",
    "timezone",
    "modification_date",
)

# P = populated place, A = country/state/region
ACCEPTED_FEATURE_CLASSES = frozenset({"P", "A"})


@dataclass
class IngestStats:
    """Row counters kept while reading one or more source files."""

    accepted: int = 0
    skipped: int = 0
    filtered: int = 0


def iterate_geonames(path: Path) -> Iterator[tuple[int, list[str]]]:
    """Iterate ``(line number, fields)`` over a GeoNames TSV file.

    Raises:
        GazetteerIngestError: If the file cannot be opened or decoded.
    """
    try:
        with open(path, encoding="utf-8", newline="\n") as file:
            for number, line in enumerate(file, start=1):
                yield number, line.rstrip("\r\n").split("\t")
    except (OSError, UnicodeDecodeError) as e:
        raise GazetteerIngestError(path, str(e)) from e


def parse_row(row: list[str]) -> LocationRecord:
    """Turn one accepted GeoNames row into its canonical record.

    Raises:
        ValueError: If the row is malformed or out of range.
    """
    if len(row) != len(GEONAMES_FIELDNAMES):
        raise ValueError(f"expected {len(GEONAMES_FIELDNAMES)} columns, got {len(row)}")
    fields = dict(zip(GEONAMES_FIELDNAMES, row))

    name = fields["name"].strip()
    if not name:
        raise ValueError("empty name")
    country = fields["country_code"].strip().upper()
    population = fields["population"].strip()

    return LocationRecord(
        name=name,
        ascii_name=fields["asciiname"].strip() or fold_ascii(name),
        country=country,
        admin1=fields["admin1_code"].strip() or None,
        longitude=float(fields["longitude"]),
        latitude=float(fields["latitude"]),
        population=int(population) if population else 0,
    )


def alias_records(canonical: LocationRecord, alternatenames: str) -> list[LocationRecord]:
    """Build one alias record per distinct alternate name of a row."""
    seen = canonical.keys()
    aliases = []
    for alternate in alternatenames.split(","):
        alternate = " ".join(alternate.split())
        key = normalize_key(alternate)
        if not key or key in seen or not any(ch.isalpha() for ch in key):
            continue
        seen.add(key)
        aliases.append(
            LocationRecord(
                name=alternate,
                ascii_name=fold_ascii(alternate),
                country=canonical.country,
                admin1=canonical.admin1,
                longitude=canonical.longitude,
                latitude=canonical.latitude,
                population=canonical.population,
                synonym_canonical=canonical.name,
            )
        )
    return aliases


def _source_timestamp(paths: Sequence[Path]) -> str:
    mtime = max(p.stat().st_mtime for p in paths)
    return datetime.fromtimestamp(int(mtime), tz=timezone.utc).isoformat()


def build_gazetteer(
    source_path: str | Path | Sequence[str | Path],
    min_population: int = 0,
    country_filter: Collection[str] | None = None,
) -> Gazetteer:
    """Build the location dimension from GeoNames main-table files.

    Rows of feature class P or A with population at or above
    ``min_population`` (and in ``country_filter`` when given) become
    canonical records; each of their alternate names becomes an alias
    record. Malformed rows are skipped and counted, never fatal.

    Args:
        source_path: One path or several paths to GeoNames TSV files.
        min_population: Population cutoff; 0 keeps every row.
        country_filter: ISO codes to keep; None or empty keeps all.

    Returns:
        The built Gazetteer.

    Raises:
        GazetteerIngestError: If a source file cannot be read.
        EmptyGazetteerError: If no row was accepted.
    """
    if isinstance(source_path, (str, Path)):
        paths = [Path(source_path)]
    else:
        paths = [Path(p) for p in source_path]
    countries = {c.upper() for c in country_filter or ()}

    stats = IngestStats()
    records: list[LocationRecord] = []

    for path in paths:
        logger.info("Reading GeoNames file", path=str(path))
        for line, row in iterate_geonames(path):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            try:
                canonical = parse_row(row)
            except ValueError as e:
                stats.skipped += 1
                logger.debug("Row skipped", path=str(path), line=line, reason=str(e))
                continue

            feature_class = row[GEONAMES_FIELDNAMES.index("feature_class")].strip()
            if (
                feature_class not in ACCEPTED_FEATURE_CLASSES
                or canonical.population < min_population
                or (countries and canonical.country not in countries)
            ):
                stats.filtered += 1
                continue

            stats.accepted += 1
            records.append(canonical)
            records.extend(
                alias_records(
                    canonical, row[GEONAMES_FIELDNAMES.index("alternatenames")]
                )
            )

    if stats.skipped:
        logger.warning("Malformed rows skipped", skipped=stats.skipped)
    if not stats.accepted:
        raise EmptyGazetteerError(
            ", ".join(str(p) for p in paths), stats.skipped + stats.filtered
        )

    metadata = BuildMetadata(
        sources=tuple(p.name for p in paths),
        skipped_rows=stats.skipped,
        filtered_rows=stats.filtered,
        build_timestamp=_source_timestamp(paths),
        min_population=min_population,
        country_filter=tuple(sorted(countries)),
    )
    gazetteer = Gazetteer.from_records(records, metadata)
    logger.info(
        "Gazetteer built",
        canonical=gazetteer.metadata.canonical_count,
        aliases=gazetteer.metadata.alias_count,
        skipped=stats.skipped,
        filtered=stats.filtered,
    )
    return gazetteer
