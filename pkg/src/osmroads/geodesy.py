"""WGS84 to UTM projection and great-circle distances.

The forward Transverse Mercator map uses Krüger's series in the third
flattening n, carried to n**6 (coefficients as tabulated by Karney, 2011),
which is accurate to well under a millimetre within a UTM zone.  All public
functions take and return degrees.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import kernels
from .errors import OutOfBand, OutOfRange, ProjectionError, ZoneTooFar
from .model import GeoPoint, RoadClass, RoadPolyline

EARTH_RADIUS_M = 6_371_000.0
UTM_LAT_LIMIT = 84.0
MAX_MERIDIAN_OFFSET = 60.0


class Hemisphere(str, enum.Enum):
    north = "north"
    south = "south"


@dataclass(frozen=True)
class UtmZone:
    zone: int
    hemisphere: Hemisphere = Hemisphere.north

    def __post_init__(self):
        if not 1 <= self.zone <= 60:
            raise OutOfRange(f"UTM zone must be in 1..60, got {self.zone}")
        object.__setattr__(self, "hemisphere", Hemisphere(self.hemisphere))

    def __str__(self):
        return f"{self.zone}{'N' if self.hemisphere is Hemisphere.north else 'S'}"


@dataclass(frozen=True)
class ProjectedPoint:
    easting: float
    northing: float
    zone: UtmZone


@dataclass(frozen=True)
class EllipsoidParams:
    semi_major_axis: float
    inverse_flattening: float
    scale_factor: float
    false_easting: float
    false_northing_north: float
    false_northing_south: float

    def __post_init__(self):
        if self.semi_major_axis <= 0 or self.inverse_flattening <= 0:
            raise ValueError("semi-major axis and inverse flattening must be positive")
        if not 0 < self.scale_factor <= 1:
            raise ValueError("scale factor must be in (0, 1]")

    @property
    def flattening(self):
        return 1.0 / self.inverse_flattening

    @property
    def third_flattening(self):
        f = self.flattening
        return f / (2.0 - f)

    @property
    def eccentricity(self):
        f = self.flattening
        return math.sqrt(f * (2.0 - f))

    @property
    def rectifying_radius(self):
        n2 = self.third_flattening**2
        return self.semi_major_axis / (1.0 + self.third_flattening) * (1.0 + n2 / 4 + n2**2 / 64 + n2**3 / 256)

    def false_northing(self, hemisphere):
        return self.false_northing_north if hemisphere is Hemisphere.north else self.false_northing_south


WGS84_UTM = EllipsoidParams(
    semi_major_axis=6_378_137.0,
    inverse_flattening=298.257223563,
    scale_factor=0.9996,
    false_easting=500_000.0,
    false_northing_north=0.0,
    false_northing_south=10_000_000.0,
)

# Krüger forward coefficients alpha_1..alpha_6 as polynomials in n:
# row j lists the coefficients of n**1 .. n**6.
_F = Fraction
_ALPHA_POLY = (
    (_F(1, 2), _F(-2, 3), _F(5, 16), _F(41, 180), _F(-127, 288), _F(7891, 37800)),
    (0, _F(13, 48), _F(-3, 5), _F(557, 1440), _F(281, 630), _F(-1983433, 1935360)),
    (0, 0, _F(61, 240), _F(-103, 140), _F(15061, 26880), _F(167603, 181440)),
    (0, 0, 0, _F(49561, 161280), _F(-179, 168), _F(6601661, 7257600)),
    (0, 0, 0, 0, _F(34729, 80640), _F(-3418889, 1995840)),
    (0, 0, 0, 0, 0, _F(212378941, 319334400)),
)


def kruger_alpha(n: float) -> tuple[float, ...]:
    return tuple(sum(float(c) * n ** (k + 1) for k, c in enumerate(row)) for row in _ALPHA_POLY)


class _TM:
    """Precomputed constants of one ellipsoid, passed to the kernels."""

    def __init__(self, params: EllipsoidParams):
        self.params = params
        self.e = params.eccentricity
        self.k0_a = params.scale_factor * params.rectifying_radius
        self.alpha = kruger_alpha(params.third_flattening)


_WGS84_TM = _TM(WGS84_UTM)


def _tm_for(params):
    return _WGS84_TM if params is WGS84_UTM else _TM(params)


def utm_zone_for(lon: float, lat: float) -> UtmZone:
    if not (-180.0 <= lon <= 180.0) or not (-90.0 <= lat <= 90.0):
        raise OutOfRange(f"lon/lat out of range: {lon}, {lat}")
    zone = int(math.floor((lon + 180.0) / 6.0)) % 60 + 1
    return UtmZone(zone, Hemisphere.north if lat >= 0 else Hemisphere.south)


def central_meridian(zone: UtmZone) -> float:
    return -183.0 + 6.0 * zone.zone


def _meridian_offset(lon, lon0):
    return (lon - lon0 + 180.0) % 360.0 - 180.0


def _check(lat, lon, lon0):
    if not abs(lat) < UTM_LAT_LIMIT:
        raise OutOfBand(f"latitude {lat} outside the UTM band")
    if not (-180.0 <= lon <= 180.0):
        raise OutOfRange(f"longitude out of range: {lon}")
    if abs(_meridian_offset(lon, lon0)) > MAX_MERIDIAN_OFFSET:
        raise ZoneTooFar(f"longitude {lon} is more than {MAX_MERIDIAN_OFFSET} deg from {lon0}")


def project_to_utm(p: GeoPoint, zone: UtmZone, params: EllipsoidParams = WGS84_UTM) -> ProjectedPoint:
    lat, lon = p
    lon0 = central_meridian(zone)
    _check(lat, lon, lon0)
    tm = _tm_for(params)
    e, n = kernels.tm_forward(
        lat, lon, lon0, tm.e, tm.k0_a, tm.alpha, params.false_easting, params.false_northing(zone.hemisphere)
    )
    return ProjectedPoint(e, n, zone)


def project_arrays(lats: Sequence[float], lons: Sequence[float], zone: UtmZone, params=WGS84_UTM):
    """Project parallel coordinate arrays in one kernel call.

    Returns two ``array('d')`` of eastings and northings.  Preconditions are
    checked for every point first.
    """
    lon0 = central_meridian(zone)
    for lat, lon in zip(lats, lons):
        _check(lat, lon, lon0)
    tm = _tm_for(params)
    return kernels.tm_forward_many(
        lats, lons, lon0, tm.e, tm.k0_a, tm.alpha, params.false_easting, params.false_northing(zone.hemisphere)
    )


@dataclass(frozen=True)
class ProjectedPolyline:
    way_id: int
    highway: RoadClass
    node_ids: tuple[int, ...]
    eastings: tuple[float, ...]
    northings: tuple[float, ...]
    zone: UtmZone

    @property
    def points(self) -> list[ProjectedPoint]:
        return [ProjectedPoint(e, n, self.zone) for e, n in zip(self.eastings, self.northings)]

    def __len__(self):
        return len(self.eastings)


def project_polylines(polylines: Sequence[RoadPolyline], zone: UtmZone, params=WGS84_UTM) -> list[ProjectedPolyline]:
    """Project every polyline into one fixed zone.

    Raises ProjectionError naming the way id and point index of the first
    point that violates the projection preconditions.
    """
    lon0 = central_meridian(zone)
    lats = []
    lons = []
    for poly in polylines:
        for i, (lat, lon) in enumerate(poly.points):
            try:
                _check(lat, lon, lon0)
            except (OutOfBand, OutOfRange, ZoneTooFar) as exc:
                raise ProjectionError(poly.way_id, i, exc) from exc
            lats.append(lat)
            lons.append(lon)
    tm = _tm_for(params)
    east, north = kernels.tm_forward_many(
        lats, lons, lon0, tm.e, tm.k0_a, tm.alpha, params.false_easting, params.false_northing(zone.hemisphere)
    )
    out = []
    pos = 0
    for poly in polylines:
        end = pos + len(poly.points)
        out.append(
            ProjectedPolyline(poly.way_id, poly.highway, poly.node_ids, tuple(east[pos:end]), tuple(north[pos:end]), zone)
        )
        pos = end
    return out


def grid_convergence(p: GeoPoint, zone: UtmZone, params=WGS84_UTM, dlat=1e-5) -> float:
    """Angle in degrees from grid north to true north at ``p``.

    Estimated from the projected direction of a short meridian segment
    through ``p``; positive east of the central meridian in the northern
    hemisphere.
    """
    lat, lon = p
    a = project_to_utm(GeoPoint(lat - dlat, lon), zone, params)
    b = project_to_utm(GeoPoint(lat + dlat, lon), zone, params)
    return math.degrees(math.atan2(a.easting - b.easting, b.northing - a.northing))


def haversine_m(a: GeoPoint, b: GeoPoint, radius: float = EARTH_RADIUS_M) -> float:
    return kernels.haversine(a[0], a[1], b[0], b[1], radius)


def path_length_m(points: Sequence[GeoPoint], radius: float = EARTH_RADIUS_M) -> float:
    lats = [p[0] for p in points]
    lons = [p[1] for p in points]
    return math.fsum(kernels.haversine_segments(lats, lons, radius))
