"""Self-contained static HTML map of a trajectory.

The route is drawn as inline SVG on an equirectangular projection fitted to
the stops, so the page needs no network access. The GeoJSON document is
embedded verbatim for downstream tools.
"""

import html
import math

from .builder import Trajectory
from .geojson import to_geojson

WIDTH = 960
HEIGHT = 540
MARGIN = 48
MIN_SPAN_DEGREES = 1.0

_STYLE = """
body { font-family: sans-serif; margin: 1.5em; color: #222; }
svg { background: #eef4f8; border: 1px solid #b8c7d3; }
.graticule { stroke: #d3dde5; stroke-width: 1; }
.route { fill: none; stroke: #c0392b; stroke-width: 2.5; stroke-linejoin: round; }
.stop-marker { fill: #2c3e50; stroke: #fff; stroke-width: 1.5; }
.stop-marker.origin { fill: #27ae60; }
.stop-marker.destination { fill: #c0392b; }
.label { font-size: 12px; fill: #222; }
.notice { font-style: italic; color: #666; }
table { border-collapse: collapse; margin-top: 1em; }
td, th { border: 1px solid #ccc; padding: 0.2em 0.6em; text-align: left; }
"""


class _Projection:
    """Fit longitude/latitude pairs into the SVG viewport."""

    def __init__(self, points: list[tuple[float, float]]):
        lons = [p[0] for p in points]
        lats = [p[1] for p in points]
        self.min_lon, self.max_lon = self._span(min(lons), max(lons))
        self.min_lat, self.max_lat = self._span(min(lats), max(lats))

        # Shrink longitudes by the cosine of the mid latitude
        mid = math.radians((self.min_lat + self.max_lat) / 2)
        self.x_factor = max(math.cos(mid), 0.1)
        width = (self.max_lon - self.min_lon) * self.x_factor
        height = self.max_lat - self.min_lat
        self.scale = min(
            (WIDTH - 2 * MARGIN) / width, (HEIGHT - 2 * MARGIN) / height
        )
        self.x_offset = (WIDTH - width * self.scale) / 2
        self.y_offset = (HEIGHT - height * self.scale) / 2

    @staticmethod
    def _span(low: float, high: float) -> tuple[float, float]:
        if high - low < MIN_SPAN_DEGREES:
            mid = (low + high) / 2
            return mid - MIN_SPAN_DEGREES / 2, mid + MIN_SPAN_DEGREES / 2
        return low, high

    def __call__(self, lon: float, lat: float) -> tuple[float, float]:
        x = self.x_offset + (lon - self.min_lon) * self.x_factor * self.scale
        y = self.y_offset + (self.max_lat - lat) * self.scale
        return round(x, 2), round(y, 2)


def _svg(t: Trajectory) -> str:
    project = _Projection([(s.longitude, s.latitude) for s in t.stops])
    points = [project(s.longitude, s.latitude) for s in t.stops]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">'
    ]

    for lon in range(math.ceil(project.min_lon), math.floor(project.max_lon) + 1):
        x, _ = project(lon, project.min_lat)
        parts.append(f'<line class="graticule" x1="{x}" y1="0" x2="{x}" y2="{HEIGHT}"/>')
    for lat in range(math.ceil(project.min_lat), math.floor(project.max_lat) + 1):
        _, y = project(project.min_lon, lat)
        parts.append(f'<line class="graticule" x1="0" y1="{y}" x2="{WIDTH}" y2="{y}"/>')

    if len(points) >= 2:
        path = " ".join(f"{x},{y}" for x, y in points)
        parts.append(f'<polyline class="route" points="{path}"/>')

    for number, (stop, role, (x, y)) in enumerate(
        zip(t.stops, t.roles(), points), start=1
    ):
        title = html.escape(f"{number}. {stop.name} ({stop.country})")
        parts.append(
            f'<circle class="stop-marker {role}" cx="{x}" cy="{y}" r="6">'
            f"<title>{title}</title></circle>"
        )
        parts.append(
            f'<text class="label" x="{round(x + 9, 2)}" y="{round(y - 9, 2)}">'
            f"{number}. {html.escape(stop.name)}</text>"
        )

    parts.append("</svg>")
    return "\n".join(parts)


def _table(t: Trajectory) -> str:
    rows = [
        "<table>",
        "<tr><th>#</th><th>Place</th><th>Country</th><th>Visit</th><th>Role</th></tr>",
    ]
    for number, (stop, visit, role) in enumerate(
        zip(t.stops, t.visit_index, t.roles()), start=1
    ):
        rows.append(
            f"<tr><td>{number}</td><td>{html.escape(stop.name)}</td>"
            f"<td>{html.escape(stop.country)}</td><td>{visit}</td><td>{role}</td></tr>"
        )
    rows.append("</table>")
    return "\n".join(rows)


def to_map_html(t: Trajectory) -> str:
    """Render a trajectory as a standalone HTML page.

    Args:
        t: Trajectory to draw.

    Returns:
        The HTML document; identical input gives identical bytes.
    """
    title = html.escape(f"Trajectory of {t.narrative_id}")
    geojson = to_geojson(t).replace("</", "<\\/")

    if t.empty:
        body = '<p class="notice">No stops: this narrative yielded no locations.</p>'
    else:
        body = _svg(t) + "\n" + _table(t)

    return (
        "<!DOCTYPE html>\n"
        '<html lang="en">\n<head>\n<meta charset="utf-8">\n'
        f"<title>{title}</title>\n<style>{_STYLE}</style>\n</head>\n<body>\n"
        f"<h1>{title}</h1>\n{body}\n"
        '<script type="application/geo+json" id="trajectory-data">\n'
        f"{geojson}</script>\n</body>\n</html>\n"
    )
