"""Gazetteer records and the in-memory location index."""

import dataclasses
from collections import defaultdict
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from ..errors import GazetteerConsistencyError
from ..textprep.preprocess import normalize_key


@dataclass(frozen=True)
class LocationRecord:
    """One gazetteer row.

    Canonical records have ``synonym_canonical`` unset; alias records carry
    the canonical name of the place they stand for and share its country
    and coordinates.
    """

    name: str
    ascii_name: str
    country: str
    longitude: float
    latitude: float
    homonym_count: int = 1
    synonym_canonical: str | None = None
    admin1: str | None = None
    population: int = 0

    def __post_init__(self) -> None:
        if not -90.0 <= self.latitude <= 90.0:
            raise ValueError(f"latitude out of range: {self.latitude}")
        if not -180.0 <= self.longitude <= 180.0:
            raise ValueError(f"longitude out of range: {self.longitude}")
        if not self.country:
            raise ValueError("country must not be empty")
        if self.population < 0:
            raise ValueError(f"population must be >= 0: {self.population}")
        if self.homonym_count < 1:
            raise ValueError(f"homonym_count must be >= 1: {self.homonym_count}")

    @property
    def is_alias(self) -> bool:
        """Whether this record is an alternate name of another record."""
        return self.synonym_canonical is not None

    @property
    def canonical_name(self) -> str:
        """Formal name of the place this record denotes."""
        return self.synonym_canonical or self.name

    @property
    def place(self) -> tuple[str, str, float, float]:
        """Identity of the denoted place: (canonical name, country, lat, lon)."""
        return (self.canonical_name, self.country, self.latitude, self.longitude)

    def keys(self) -> set[str]:
        """Lookup keys under which this record is indexed."""
        return {k for k in (normalize_key(self.name), normalize_key(self.ascii_name)) if k}

    def to_dict(self) -> dict[str, Any]:
        """Plain-dict form used by the index file."""
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "LocationRecord":
        """Rebuild a record from its plain-dict form."""
        return cls(**data)


@dataclass(frozen=True)
class BuildMetadata:
    """Provenance of a built gazetteer."""

    sources: tuple[str, ...] = ()
    record_count: int = 0
    canonical_count: int = 0
    alias_count: int = 0
    skipped_rows: int = 0
    filtered_rows: int = 0
    build_timestamp: str = ""
    min_population: int = 0
    country_filter: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        """Plain-dict form used by the index file."""
        data = dataclasses.asdict(self)
        data["sources"] = list(self.sources)
        data["country_filter"] = list(self.country_filter)
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "BuildMetadata":
        """Rebuild metadata from its plain-dict form."""
        values = dict(data)
        values["sources"] = tuple(values.get("sources", ()))
        values["country_filter"] = tuple(values.get("country_filter", ()))
        return cls(**values)


def _sort_key(record: LocationRecord) -> tuple[Any, ...]:
    return (
        -record.population,
        record.country,
        record.is_alias,
        record.name,
        record.latitude,
        record.longitude,
    )


class Gazetteer:
    """The location dimension: a read-only multimap from key to records.

    Lookups are case- and diacritics-insensitive. Every record returned for
    a key carries the number of distinct places that key can denote as its
    ``homonym_count``.
    """

    def __init__(
        self,
        index: Mapping[str, Sequence[LocationRecord]],
        metadata: BuildMetadata | None = None,
    ):
        """Initialize from a prepared index.

        Args:
            index: Lookup key to records, already counted and ordered.
            metadata: Build provenance.
        """
        self._index: dict[str, tuple[LocationRecord, ...]] = {
            key: tuple(records) for key, records in index.items() if records
        }
        self.metadata = metadata or BuildMetadata()

    @classmethod
    def from_records(
        cls,
        records: Iterable[LocationRecord],
        metadata: BuildMetadata | None = None,
    ) -> "Gazetteer":
        """Index records, computing homonym counts and candidate order.

        Args:
            records: Canonical and alias records; incoming homonym counts
                are ignored.
            metadata: Build provenance; record counts are filled in.

        Returns:
            A new Gazetteer.
        """
        grouped: dict[str, dict[LocationRecord, None]] = defaultdict(dict)
        unique: dict[LocationRecord, None] = {}
        for record in records:
            base = dataclasses.replace(record, homonym_count=1)
            unique[base] = None
            for key in base.keys():
                grouped[key][base] = None

        index: dict[str, list[LocationRecord]] = {}
        for key in sorted(grouped):
            members = list(grouped[key])
            count = len({r.place for r in members})
            index[key] = sorted(
                (dataclasses.replace(r, homonym_count=count) for r in members),
                key=_sort_key,
            )

        aliases = sum(1 for r in unique if r.is_alias)
        metadata = dataclasses.replace(
            metadata or BuildMetadata(),
            record_count=len(unique),
            canonical_count=len(unique) - aliases,
            alias_count=aliases,
        )
        return cls(index, metadata)

    def lookup(self, name: str) -> list[LocationRecord]:
        """Return all records for a name, most populous first.

        Args:
            name: Place name in any case or accentuation.

        Returns:
            Matching canonical and alias records; empty when absent.
        """
        return list(self._index.get(normalize_key(name), ()))

    def __contains__(self, name: object) -> bool:
        return isinstance(name, str) and normalize_key(name) in self._index

    def __len__(self) -> int:
        return self.metadata.record_count

    def keys(self) -> list[str]:
        """All lookup keys in sorted order."""
        return sorted(self._index)

    def entries(self) -> Iterator[tuple[str, LocationRecord]]:
        """Iterate ``(key, record)`` pairs in key order."""
        for key in self.keys():
            for record in self._index[key]:
                yield key, record

    def resolve(self, name: str, country: str) -> LocationRecord:
        """Join a resolved (name, country) pair back to its canonical record.

        Aliases are followed to the canonical record of the same place.

        Args:
            name: Surface name as probed.
            country: Resolved ISO country code.

        Returns:
            The canonical record.

        Raises:
            GazetteerConsistencyError: If no record matches.
        """
        in_country = [r for r in self.lookup(name) if r.country == country]
        if not in_country:
            raise GazetteerConsistencyError(
                f"No gazetteer record for {name!r} in {country!r}"
            )

        record = in_country[0]
        if not record.is_alias:
            return record

        for canonical in self.lookup(record.canonical_name):
            if not canonical.is_alias and canonical.place == record.place:
                return canonical
        raise GazetteerConsistencyError(
            f"Alias {name!r} points at missing record {record.canonical_name!r} "
            f"in {country!r}"
        )


def lookup(g: Gazetteer, name: str) -> list[LocationRecord]:
    """Return all records for ``name`` in deterministic order."""
    return g.lookup(name)
