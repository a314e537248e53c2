"""GeoJSON (RFC 7946) encoding of trajectories."""

import json
from typing import Any

from ..disambiguator import ResolvedPlace
from .builder import Trajectory, compute_visit_index


def to_feature_collection(t: Trajectory) -> dict[str, Any]:
    """Build the GeoJSON FeatureCollection for a trajectory.

    One Point feature per stop, then one LineString through the stops in
    order when there are at least two. Positions are [longitude, latitude].
    """
    features: list[dict[str, Any]] = []
    for stop, visit, role in zip(t.stops, t.visit_index, t.roles()):
        features.append(
            {
                "type": "Feature",
                "geometry": {
                    "type": "Point",
                    "coordinates": [stop.longitude, stop.latitude],
                },
                "properties": {
                    "name": stop.name,
                    "country": stop.country,
                    "ordinal": stop.ordinal,
                    "visit_index": visit,
                    "role": role,
                    "surface": stop.surface,
                    "rule": stop.rule,
                },
            }
        )

    if len(t.stops) >= 2:
        features.append(
            {
                "type": "Feature",
                "geometry": {
                    "type": "LineString",
                    "coordinates": [[s.longitude, s.latitude] for s in t.stops],
                },
                "properties": {
                    "narrative_id": t.narrative_id,
                    "ordinals": [s.ordinal for s in t.stops],
                },
            }
        )

    return {
        "type": "FeatureCollection",
        "narrative_id": t.narrative_id,
        "features": features,
    }


def to_geojson(t: Trajectory) -> str:
    """Serialize a trajectory as a GeoJSON document."""
    return json.dumps(to_feature_collection(t), indent=2, ensure_ascii=False) + "\n"


def from_geojson(text: str) -> Trajectory:
    """Parse a document produced by :func:`to_geojson` back into a Trajectory.

    Raises:
        ValueError: If the document is not a trajectory FeatureCollection.
    """
    data = json.loads(text)
    if not isinstance(data, dict) or data.get("type") != "FeatureCollection":
        raise ValueError("not a GeoJSON FeatureCollection")

    stops = []
    for number, feature in enumerate(data.get("features", [])):
        if not isinstance(feature, dict):
            raise ValueError(f"feature {number} is not an object")
        geometry = feature.get("geometry") or {}
        if geometry.get("type") != "Point":
            continue
        props = feature.get("properties") or {}
        try:
            lon, lat = geometry["coordinates"][:2]
            stops.append(
                ResolvedPlace(
                    name=props["name"],
                    country=props["country"],
                    longitude=float(lon),
                    latitude=float(lat),
                    ordinal=int(props["ordinal"]),
                    surface=props.get("surface", ""),
                    rule=props.get("rule"),
                )
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ValueError(f"feature {number} is not a trajectory stop: {e}") from e

    return Trajectory(
        narrative_id=str(data.get("narrative_id", "")),
        stops=tuple(stops),
        visit_index=compute_visit_index(stops),
    )
