"""Location dimension built from GeoNames."""

from .geonames import ACCEPTED_FEATURE_CLASSES, GEONAMES_FIELDNAMES, build_gazetteer
from .records import BuildMetadata, Gazetteer, LocationRecord, lookup
from .store import (
    FORMAT_VERSION,
    is_index_file,
    load_gazetteer,
    open_gazetteer,
    save_gazetteer,
)

__all__ = [
    "ACCEPTED_FEATURE_CLASSES",
    "GEONAMES_FIELDNAMES",
    "build_gazetteer",
    "BuildMetadata",
    "Gazetteer",
    "LocationRecord",
    "lookup",
    "FORMAT_VERSION",
    "is_index_file",
    "load_gazetteer",
    "open_gazetteer",
    "save_gazetteer",
]
