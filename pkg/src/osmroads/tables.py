"""Node table, highway way table, and the join that resolves ways to polylines."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, TextIO

from .errors import EmptyClassSet, EmptyInput
from .model import (
    BoundingBox,
    GeoPoint,
    HighwayClass,
    RawNode,
    RawWay,
    RoadPolyline,
    classify_highway,
)


class NodeTable:
    """Mapping of node id to coordinates; re-inserting an id overwrites it."""

    def __init__(self):
        self._coords: dict[int, tuple[float, float]] = {}
        self.insertions = 0

    def add(self, node: RawNode) -> None:
        self._coords[node.id] = (node.lat, node.lon)
        self.insertions += 1

    # lets a NodeTable be handed to the parser directly as node_sink
    __call__ = add

    def __len__(self):
        return len(self._coords)

    def __contains__(self, node_id):
        return node_id in self._coords

    def get(self, node_id: int) -> Optional[GeoPoint]:
        c = self._coords.get(node_id)
        return None if c is None else GeoPoint(*c)

    def __getitem__(self, node_id: int) -> GeoPoint:
        return GeoPoint(*self._coords[node_id])

    def items(self) -> Iterator[tuple[int, GeoPoint]]:
        for node_id, c in self._coords.items():
            yield node_id, GeoPoint(*c)


class WayEntry(NamedTuple):
    way_id: int
    highway: HighwayClass
    node_refs: tuple[int, ...]


class WayTable(list):
    """Ordered list of ``WayEntry``; only named highway classes are admitted."""

    def append(self, entry: WayEntry) -> None:
        if not isinstance(entry.highway, HighwayClass):
            raise ValueError(f"way {entry.way_id} has unnamed class {entry.highway!r}")
        super().append(entry)


@dataclass
class MergeReport:
    ways_resolved: int = 0
    ways_dropped_missing_nodes: int = 0
    refs_missing: int = 0


def extract_nodes(nodes: Iterable[RawNode]) -> NodeTable:
    table = NodeTable()
    for node in nodes:
        table.add(node)
    return table


def highway_entry(way: RawWay) -> Optional[WayEntry]:
    """Return the table entry for ``way``, or None if it is not a kept highway."""
    value = way.tag("highway")
    if value is None:
        return None
    cls = classify_highway(value)
    if not isinstance(cls, HighwayClass):
        return None
    return WayEntry(way.id, cls, way.node_refs)


def extract_ways(ways: Iterable[RawWay]) -> WayTable:
    table = WayTable()
    for way in ways:
        entry = highway_entry(way)
        if entry is not None:
            table.append(entry)
    return table


def resolve_ways(way_table: Iterable[WayEntry], node_table: NodeTable) -> tuple[list[RoadPolyline], MergeReport]:
    """Look up every ref of every way; a way with any missing ref is dropped whole."""
    report = MergeReport()
    polylines = []
    for entry in way_table:
        points = [node_table.get(ref) for ref in entry.node_refs]
        missing = points.count(None)
        if missing:
            report.ways_dropped_missing_nodes += 1
            report.refs_missing += missing
            continue
        polylines.append(RoadPolyline(entry.way_id, entry.highway, tuple(entry.node_refs), tuple(points)))
        report.ways_resolved += 1
    return polylines, report


def filter_by_class(polylines: Iterable[RoadPolyline], keep) -> list[RoadPolyline]:
    keep = frozenset(keep)
    if not keep:
        raise EmptyClassSet("class filter is empty")
    return [p for p in polylines if p.highway in keep]


def bounding_box(polylines: Iterable[RoadPolyline]) -> BoundingBox:
    lats = []
    lons = []
    for p in polylines:
        for lat, lon in p.points:
            lats.append(lat)
            lons.append(lon)
    if not lats:
        raise EmptyInput("bounding box of no points")
    return BoundingBox(min(lats), min(lons), max(lats), max(lons))


def _writer(out: TextIO):
    return csv.writer(out, lineterminator="\n")


def write_nodes_csv(table: NodeTable, out: TextIO) -> int:
    w = _writer(out)
    w.writerow(["id", "lat", "lon"])
    n = 0
    for node_id, (lat, lon) in table.items():
        w.writerow([node_id, repr(lat), repr(lon)])
        n += 1
    return n


def write_ways_csv(table: Iterable[WayEntry], out: TextIO) -> int:
    w = _writer(out)
    w.writerow(["way_id", "highway", "node_refs"])
    n = 0
    for entry in table:
        w.writerow([entry.way_id, entry.highway.value, ";".join(map(str, entry.node_refs))])
        n += 1
    return n


def read_nodes_csv(src: TextIO) -> NodeTable:
    table = NodeTable()
    for row in csv.DictReader(src):
        table.add(RawNode(int(row["id"]), float(row["lat"]), float(row["lon"])))
    return table


def read_ways_csv(src: TextIO) -> WayTable:
    table = WayTable()
    for row in csv.DictReader(src):
        refs = tuple(int(r) for r in row["node_refs"].split(";"))
        table.append(WayEntry(int(row["way_id"]), HighwayClass(row["highway"]), refs))
    return table
