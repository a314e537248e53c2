"""Tests for the static HTML map."""

import json
import re

from src.disambiguator import ResolvedPlace
from src.trajectory import build_trajectory, to_geojson, to_map_html


def route(*stops: tuple[str, str, float, float]):
    return build_trajectory(
        "n01",
        [
            ResolvedPlace(name, country, lon, lat, i)
            for i, (name, country, lon, lat) in enumerate(stops)
        ],
    )


LEVANT = route(
    ("Aleppo", "SY", 37.16, 36.2),
    ("Tripoli", "LB", 35.85, 34.44),
    ("Beirut", "LB", 35.5, 33.89),
)


class TestToMapHtml:
    """Tests for to_map_html."""

    def test_one_marker_per_stop(self):
        """Test each stop is drawn once."""
        html = to_map_html(LEVANT)

        assert html.count('class="stop-marker') == 3
        assert html.count('<polyline class="route"') == 1

    def test_embeds_geojson(self):
        """Test the GeoJSON document is embedded unchanged."""
        html = to_map_html(LEVANT)
        match = re.search(
            r'<script type="application/geo\+json" id="trajectory-data">\n(.*?)</script>',
            html,
            re.S,
        )

        assert match is not None
        assert match.group(1) == to_geojson(LEVANT)
        assert json.loads(match.group(1))["narrative_id"] == "n01"

    def test_markers_inside_viewport(self):
        """Test projected markers fall within the SVG canvas."""
        html = to_map_html(LEVANT)
        for cx, cy in re.findall(r'cx="([\d.-]+)" cy="([\d.-]+)"', html):
            assert 0 <= float(cx) <= 960
            assert 0 <= float(cy) <= 540

    def test_labels_escaped(self):
        """Test place names are HTML-escaped."""
        t = route(("Bar & <Grill>", "US", -90.0, 30.0))

        html = to_map_html(t)

        assert ">1. Bar &amp; &lt;Grill&gt;</text>" in html
        assert "<td>Bar &amp; &lt;Grill&gt;</td>" in html

    def test_single_stop(self):
        """Test a single stop draws a marker and no route."""
        html = to_map_html(route(("Athens", "GR", 23.73, 37.98)))

        assert html.count('class="stop-marker') == 1
        assert "<polyline" not in html

    def test_empty(self):
        """Test an empty trajectory shows a notice instead of a map."""
        html = to_map_html(build_trajectory("n02", []))

        assert "No stops" in html
        assert "<svg" not in html
        assert 'id="trajectory-data"' in html

    def test_deterministic(self):
        """Test identical input renders identical bytes."""
        assert to_map_html(LEVANT) == to_map_html(LEVANT)

    def test_self_contained(self):
        """Test the page loads nothing from the network."""
        html = to_map_html(LEVANT)

        assert "<link" not in html
        assert "src=" not in html
