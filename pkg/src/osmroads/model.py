"""Domain vocabulary: OSM element records, highway classes, geographic primitives."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Union

MAX_OSM_ID = 2**63 - 1


@dataclass(frozen=True)
class Tag:
    key: str
    value: str = ""

    def __post_init__(self):
        if not self.key:
            raise ValueError("tag key must be non-empty")


class GeoPoint(NamedTuple):
    """WGS84 position in degrees."""

    lat: float
    lon: float


def _check_id(value):
    if not 0 < value <= MAX_OSM_ID:
        raise ValueError(f"OSM id must be a positive 64-bit integer, got {value}")


def _check_lat_lon(lat, lon):
    if not (math.isfinite(lat) and -90.0 <= lat <= 90.0):
        raise ValueError(f"latitude out of range: {lat}")
    if not (math.isfinite(lon) and -180.0 <= lon <= 180.0):
        raise ValueError(f"longitude out of range: {lon}")


@dataclass(frozen=True)
class RawNode:
    id: int
    lat: float
    lon: float
    tags: tuple[Tag, ...] = ()

    def __post_init__(self):
        _check_id(self.id)
        _check_lat_lon(self.lat, self.lon)

    @property
    def point(self) -> GeoPoint:
        return GeoPoint(self.lat, self.lon)


@dataclass(frozen=True)
class RawWay:
    id: int
    node_refs: tuple[int, ...]
    tags: tuple[Tag, ...] = ()

    def __post_init__(self):
        _check_id(self.id)
        if len(self.node_refs) < 2:
            raise ValueError(f"way {self.id} has fewer than two node refs")

    def tag(self, key, default=None):
        """Value of the first tag with exactly this key."""
        for t in self.tags:
            if t.key == key:
                return t.value
        return default


class HighwayClass(str, enum.Enum):
    """The 26 highway values kept by the extraction step."""

    residential = "residential"
    service = "service"
    tertiary = "tertiary"
    track = "track"
    secondary = "secondary"
    primary = "primary"
    tertiary_link = "tertiary_link"
    secondary_link = "secondary_link"
    motorway_link = "motorway_link"
    primary_link = "primary_link"
    motorway = "motorway"
    trunk_link = "trunk_link"
    trunk = "trunk"
    footway = "footway"
    construction = "construction"
    pedestrian = "pedestrian"
    proposed = "proposed"
    path = "path"
    raceway = "raceway"
    cycleway = "cycleway"
    living_street = "living_street"
    steps = "steps"
    abandoned = "abandoned"
    rest_area = "rest_area"
    corridor = "corridor"
    platform = "platform"

    def __str__(self):
        return self.value


def normalize_class_name(value: str) -> str:
    """Lowercase, trim, and join whitespace-separated words with underscores."""
    return "_".join(value.strip().lower().split())


@dataclass(frozen=True)
class OtherHighway:
    """Highway value outside the 26 named classes.

    Keeps the original spelling in ``value``; equality and hashing use the
    normalized form so classification stays idempotent.
    """

    value: str = field(compare=False)
    name: str = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "name", normalize_class_name(self.value))

    def __str__(self):
        return self.name


RoadClass = Union[HighwayClass, OtherHighway]

_BY_NAME = {c.value: c for c in HighwayClass}


def classify_highway(value: str) -> RoadClass:
    return _BY_NAME.get(normalize_class_name(value)) or OtherHighway(value)


def parse_class_list(text: str) -> frozenset[HighwayClass]:
    """Parse ``"motorway,trunk link"`` or ``"all"`` into a set of named classes.

    Raises ValueError for unknown names or an empty list.
    """
    if text.strip().lower() == "all":
        return frozenset(HighwayClass)
    out = set()
    for part in text.split(","):
        if not part.strip():
            continue
        cls = classify_highway(part)
        if isinstance(cls, OtherHighway):
            raise ValueError(f"unknown highway class: {part.strip()!r}")
        out.add(cls)
    if not out:
        raise ValueError("empty class list")
    return frozenset(out)


def is_closed(way: RawWay) -> bool:
    return way.node_refs[0] == way.node_refs[-1]


@dataclass(frozen=True)
class RoadPolyline:
    """A highway way with every node ref resolved to coordinates."""

    way_id: int
    highway: RoadClass
    node_ids: tuple[int, ...]
    points: tuple[GeoPoint, ...]

    def __post_init__(self):
        if len(self.node_ids) < 2:
            raise ValueError(f"polyline {self.way_id} needs at least two points")
        if len(self.node_ids) != len(self.points):
            raise ValueError("node_ids and points differ in length")

    @property
    def closed(self) -> bool:
        return self.node_ids[0] == self.node_ids[-1]

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class BoundingBox:
    min_lat: float
    min_lon: float
    max_lat: float
    max_lon: float

    def __post_init__(self):
        if self.min_lat > self.max_lat or self.min_lon > self.max_lon:
            raise ValueError("bounding box min exceeds max")

    @property
    def centroid(self) -> GeoPoint:
        return GeoPoint((self.min_lat + self.max_lat) / 2, (self.min_lon + self.max_lon) / 2)

    def contains(self, lat, lon) -> bool:
        return self.min_lat <= lat <= self.max_lat and self.min_lon <= lon <= self.max_lon
