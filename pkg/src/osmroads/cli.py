"""Command-line front end: extract, render, graph, route.

Exit codes: 0 success, 1 input or pipeline error, 2 class filter matched no
ways, 3 no path between the requested vertices.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import geodesy
from .errors import NoPath, OsmRoadsError
from .graph import build_graph, network_stats, shortest_path
from .ingest import ParseSummary, parse_osm_file
from .model import HighwayClass, parse_class_list
from .render import export_edges_csv, export_geojson, load_style, render_svg
from .tables import (
    MergeReport,
    NodeTable,
    bounding_box,
    extract_ways,
    filter_by_class,
    resolve_ways,
    write_nodes_csv,
    write_ways_csv,
)

log = logging.getLogger("osmroads")

STYLE_ENV = "OSMROADS_STYLE"
EXIT_OK, EXIT_ERROR, EXIT_EMPTY, EXIT_NO_PATH = 0, 1, 2, 3


class EmptySelection(Exception):
    pass


@dataclass
class PipelineConfig:
    input: Path
    out: Path = Path(".")
    classes: frozenset = frozenset(HighwayClass)
    zone: Optional[int] = None
    style: Optional[Path] = None
    svg: bool = True
    geojson: bool = False
    csv: bool = False


@dataclass
class Extract:
    summary: ParseSummary
    nodes: NodeTable
    ways: list
    polylines: list = field(default_factory=list)
    merge: MergeReport = field(default_factory=MergeReport)


def load_extract(path) -> Extract:
    nodes = NodeTable()
    raw_ways = []
    summary = parse_osm_file(path, nodes.add, raw_ways.append)
    ways = extract_ways(raw_ways)
    polylines, merge = resolve_ways(ways, nodes)
    return Extract(summary, nodes, ways, polylines, merge)


def choose_zone(polylines, override=None) -> geodesy.UtmZone:
    """Zone of the bounding-box centroid; ``override`` replaces the zone number only."""
    centre = bounding_box(polylines).centroid
    auto = geodesy.utm_zone_for(centre.lon, centre.lat)
    if override is None:
        return auto
    return geodesy.UtmZone(override, auto.hemisphere)


def _selected(extract, config):
    chosen = filter_by_class(extract.polylines, config.classes)
    if not chosen:
        raise EmptySelection("class filter matched no ways")
    return chosen


def _emit(lines):
    for line in lines:
        print(line)


def _merge_lines(m: MergeReport):
    return [
        f"ways_resolved={m.ways_resolved}",
        f"ways_dropped_missing_nodes={m.ways_dropped_missing_nodes}",
        f"refs_missing={m.refs_missing}",
    ]


def cmd_extract(config: PipelineConfig) -> int:
    ex = load_extract(config.input)
    config.out.mkdir(parents=True, exist_ok=True)
    with open(config.out / "nodes.csv", "w", encoding="utf-8", newline="") as fh:
        write_nodes_csv(ex.nodes, fh)
    with open(config.out / "ways.csv", "w", encoding="utf-8", newline="") as fh:
        write_ways_csv(ex.ways, fh)
    _emit(ex.summary.as_lines())
    _emit([f"node_table={len(ex.nodes)}", f"way_table={len(ex.ways)}"])
    _emit(_merge_lines(ex.merge))
    return EXIT_OK


def cmd_render(config: PipelineConfig) -> int:
    ex = load_extract(config.input)
    chosen = _selected(ex, config)
    zone = choose_zone(ex.polylines, config.zone)
    style = load_style(config.style)
    projected = geodesy.project_polylines(chosen, zone)
    config.out.mkdir(parents=True, exist_ok=True)
    with open(config.out / "map.svg", "wb") as fh:
        report = render_svg(projected, style, fh)
    if config.geojson:
        with open(config.out / "roads.geojson", "wb") as fh:
            export_geojson(chosen, fh)
    if config.csv:
        with open(config.out / "edges.csv", "wb") as fh:
            export_edges_csv(build_graph(chosen), fh)
    print(f"zone={zone}")
    _emit(report.as_lines())
    return EXIT_OK


def cmd_graph(config: PipelineConfig) -> int:
    ex = load_extract(config.input)
    chosen = _selected(ex, config)
    network = build_graph(chosen)
    config.out.mkdir(parents=True, exist_ok=True)
    with open(config.out / "edges.csv", "wb") as fh:
        export_edges_csv(network, fh)
    if config.geojson:
        with open(config.out / "roads.geojson", "wb") as fh:
            export_geojson(chosen, fh)
    _emit(network_stats(network).as_lines())
    return EXIT_OK


def cmd_route(config: PipelineConfig, source: int, target: int) -> int:
    ex = load_extract(config.input)
    network = build_graph(_selected(ex, config))
    result = shortest_path(network, source, target)
    _emit(str(v) for v in result.vertices)
    print(f"length_m={result.total_length:.3f}")
    return EXIT_OK


def _zone_arg(text):
    value = int(text)
    if not 1 <= value <= 60:
        raise argparse.ArgumentTypeError("zone must be in 1..60")
    return value


def _classes_arg(text):
    try:
        return parse_class_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="osmroads", description="Turn OSM XML extracts into road networks.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, type=Path, help="OSM XML file")
    common.add_argument("--out", default=Path("."), type=Path, help="output directory (default: .)")
    common.add_argument(
        "--classes", default=frozenset(HighwayClass), type=_classes_arg,
        help="comma-separated highway classes, or 'all' (default)",
    )
    common.add_argument("--zone", type=_zone_arg, help="UTM zone 1..60 (default: from extract centroid)")
    common.add_argument("--style", type=Path, help=f"style file (fallback: ${STYLE_ENV})")
    common.add_argument("--geojson", action="store_true", help="also write roads.geojson")
    common.add_argument("--csv", action="store_true", help="also write edges.csv (render)")

    sub.add_parser("extract", parents=[common], help="write nodes.csv and ways.csv, print parse summary")
    sub.add_parser("render", parents=[common], help="write map.svg")
    sub.add_parser("graph", parents=[common], help="write edges.csv, print network stats")
    route = sub.add_parser("route", parents=[common], help="print the shortest path between two vertices")
    route.add_argument("--from", dest="source", type=int, required=True)
    route.add_argument("--to", dest="target", type=int, required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    style = args.style
    if style is None and os.environ.get(STYLE_ENV):
        style = Path(os.environ[STYLE_ENV])
    config = PipelineConfig(args.input, args.out, args.classes, args.zone, style, geojson=args.geojson, csv=args.csv)
    try:
        if args.command == "extract":
            return cmd_extract(config)
        if args.command == "render":
            return cmd_render(config)
        if args.command == "graph":
            return cmd_graph(config)
        return cmd_route(config, args.source, args.target)
    except EmptySelection as exc:
        print(f"osmroads: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except NoPath as exc:
        print(f"osmroads: {exc}", file=sys.stderr)
        return EXIT_NO_PATH
    except (OsmRoadsError, OSError) as exc:
        print(f"osmroads: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
