"""Trajectory assembly and rendering."""

from .builder import (
    DESTINATION,
    ORIGIN,
    TRANSIT,
    Trajectory,
    build_trajectory,
    compute_visit_index,
)
from .geojson import from_geojson, to_feature_collection, to_geojson
from .html_map import to_map_html

__all__ = [
    "DESTINATION",
    "ORIGIN",
    "TRANSIT",
    "Trajectory",
    "build_trajectory",
    "compute_visit_index",
    "from_geojson",
    "to_feature_collection",
    "to_geojson",
    "to_map_html",
]
