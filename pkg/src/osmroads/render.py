"""SVG maps, GeoJSON features and CSV edge lists."""

from __future__ import annotations

import csv
import io
import json
import math
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import BinaryIO, Iterable, Optional, Sequence

from .errors import EmptyInput, NonFiniteCoordinate, StyleError
from .geodesy import ProjectedPolyline
from .graph import RoadNetwork
from .model import HighwayClass, RoadPolyline

_COLOR_RE = re.compile(r"#[0-9a-fA-F]{6}\Z")
COORD_DECIMALS = 7


@dataclass(frozen=True)
class Stroke:
    width: float
    color: str


@dataclass(frozen=True)
class RenderStyle:
    strokes: dict = field(default_factory=dict)
    default: Stroke = Stroke(0.6, "#b0b0b0")
    background: str = "#ffffff"
    canvas_width: int = 1600
    margin: float = 0.03

    def __post_init__(self):
        for s in [self.default, *self.strokes.values()]:
            if not s.width > 0:
                raise StyleError(f"stroke width must be positive, got {s.width}")
            if not _COLOR_RE.match(s.color):
                raise StyleError(f"bad color {s.color!r}")
        if not _COLOR_RE.match(self.background):
            raise StyleError(f"bad background color {self.background!r}")
        if self.canvas_width < 64:
            raise StyleError("canvas_width must be at least 64")
        if not 0 <= self.margin < 0.5:
            raise StyleError("margin must be in [0, 0.5)")

    def stroke(self, cls) -> Stroke:
        return self.strokes.get(str(cls), self.default)


def parse_style(text: str, base: Optional[RenderStyle] = None) -> RenderStyle:
    """Parse the key=value style format, overlaying it on ``base``."""
    base = base or RenderStyle()
    widths = {k: v.width for k, v in base.strokes.items()}
    colors = {k: v.color for k, v in base.strokes.items()}
    widths["default"], colors["default"] = base.default.width, base.default.color
    top = {"background": base.background, "canvas_width": base.canvas_width, "margin": base.margin}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise StyleError(f"line {lineno}: expected key = value")
        try:
            if key == "background":
                top[key] = value
            elif key == "canvas_width":
                top[key] = int(value)
            elif key == "margin":
                top[key] = float(value)
            elif key.endswith(".width"):
                widths[key[:-6]] = float(value)
            elif key.endswith(".color"):
                colors[key[:-6]] = value
            else:
                raise StyleError(f"line {lineno}: unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, StyleError):
                raise
            raise StyleError(f"line {lineno}: bad value {value!r}") from None
    names = (set(widths) | set(colors)) - {"default"}
    for name in names:
        if name not in HighwayClass.__members__:
            raise StyleError(f"unknown highway class {name!r} in style")
    default = Stroke(widths.pop("default"), colors.pop("default"))
    strokes = {n: Stroke(widths.get(n, default.width), colors.get(n, default.color)) for n in sorted(names)}
    return RenderStyle(strokes, default, top["background"], top["canvas_width"], top["margin"])


def default_style() -> RenderStyle:
    text = resources.files("osmroads").joinpath("default_style.conf").read_text(encoding="utf-8")
    return parse_style(text)


def load_style(path=None) -> RenderStyle:
    """Default style, optionally overlaid with the file at ``path``."""
    style = default_style()
    if path is None:
        return style
    with open(path, encoding="utf-8") as fh:
        return parse_style(fh.read(), style)


@dataclass(frozen=True)
class RenderReport:
    element_count: int
    # projected viewport (min_easting, min_northing, max_easting, max_northing)
    viewport: tuple[float, float, float, float]
    scale: float
    width_px: float
    height_px: float

    def to_svg(self, easting, northing):
        """Map a projected coordinate to SVG user units."""
        return (easting - self.viewport[0]) * self.scale, (self.viewport[3] - northing) * self.scale

    def from_svg(self, x, y):
        return self.viewport[0] + x / self.scale, self.viewport[3] - y / self.scale

    def as_lines(self) -> list[str]:
        v = self.viewport
        return [
            f"elements={self.element_count}",
            f"viewport={v[0]:.3f},{v[1]:.3f},{v[2]:.3f},{v[3]:.3f}",
            f"scale={self.scale:.9g}",
            f"width_px={self.width_px:.3f}",
            f"height_px={self.height_px:.3f}",
        ]


def _fmt(v):
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _viewport(polylines, margin):
    min_e = min(min(p.eastings) for p in polylines)
    max_e = max(max(p.eastings) for p in polylines)
    min_n = min(min(p.northings) for p in polylines)
    max_n = max(max(p.northings) for p in polylines)
    span_e, span_n = max_e - min_e, max_n - min_n
    pad = margin * max(span_e, span_n)
    # never collapse an axis to zero width; 1 m is the floor
    w = max(span_e + 2 * pad, 1.0)
    h = max(span_n + 2 * pad, 1.0)
    ce, cn = (min_e + max_e) / 2, (min_n + max_n) / 2
    return (ce - w / 2, cn - h / 2, ce + w / 2, cn + h / 2)


def render_svg(polylines: Sequence[ProjectedPolyline], style: RenderStyle, out: BinaryIO) -> RenderReport:
    """Write a standalone SVG 1.1 map of projected polylines to ``out``.

    Northing increases upward, both axes share one scale, and each polyline
    becomes a single ``<polyline>`` element.  Wider strokes are drawn last.
    """
    if not polylines:
        raise EmptyInput("nothing to render")
    for p in polylines:
        if not all(map(math.isfinite, p.eastings)) or not all(map(math.isfinite, p.northings)):
            raise NonFiniteCoordinate(p.way_id)
    viewport = _viewport(polylines, style.margin)
    scale = style.canvas_width / (viewport[2] - viewport[0])
    width = style.canvas_width
    height = (viewport[3] - viewport[1]) * scale
    report = RenderReport(len(polylines), viewport, scale, float(width), height)

    ordered = sorted(polylines, key=lambda p: style.stroke(p.highway).width)
    buf = io.StringIO()
    buf.write('<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n')
    buf.write(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">\n'
    )
    buf.write(f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" fill="{style.background}"/>\n')
    buf.write('<g fill="none" stroke-linecap="round" stroke-linejoin="round">\n')
    for p in ordered:
        stroke = style.stroke(p.highway)
        pts = " ".join(
            f"{_fmt(x)},{_fmt(y)}" for x, y in (report.to_svg(e, n) for e, n in zip(p.eastings, p.northings))
        )
        buf.write(
            f'<polyline class="hw-{p.highway}" data-way="{p.way_id}" stroke="{stroke.color}" '
            f'stroke-width="{stroke.width:g}" points="{pts}"/>\n'
        )
    buf.write("</g>\n</svg>\n")
    out.write(buf.getvalue().encode("utf-8"))
    return report


def _feature(poly: RoadPolyline):
    return {
        "type": "Feature",
        "properties": {"way_id": poly.way_id, "highway": str(poly.highway)},
        "geometry": {
            "type": "LineString",
            "coordinates": [[round(lon, COORD_DECIMALS), round(lat, COORD_DECIMALS)] for lat, lon in poly.points],
        },
    }


def export_geojson(polylines: Iterable[RoadPolyline], out: BinaryIO) -> int:
    """Write an RFC 7946 FeatureCollection of LineStrings in (lon, lat) order."""
    features = [_feature(p) for p in polylines]
    doc = {"type": "FeatureCollection", "features": features}
    out.write(json.dumps(doc, separators=(",", ":"), ensure_ascii=False).encode("utf-8"))
    out.write(b"\n")
    return len(features)


EDGE_CSV_HEADER = ("edge_id", "from_node", "to_node", "length_m", "highway", "way_id")


def export_edges_csv(network: RoadNetwork, out: BinaryIO) -> int:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(EDGE_CSV_HEADER)
    rows = 0
    for e in sorted(network.edges, key=lambda e: e.edge_id):
        w.writerow([e.edge_id, e.a, e.b, f"{e.length:.3f}", str(e.highway), e.source_way])
        rows += 1
    out.write(buf.getvalue().encode("utf-8"))
    return rows
