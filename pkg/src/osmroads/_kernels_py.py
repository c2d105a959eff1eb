"""Pure-Python numeric kernels.

Same signatures as the compiled ``_kernels`` extension; used when the
extension is unavailable or ``OSMROADS_PURE_PYTHON`` is set.  Angles are in
degrees at this boundary.
"""

from array import array
from math import asin, atan2, atanh, cos, cosh, radians, sin, sinh, sqrt


def tm_forward(lat, lon, lon0, e, k0_a, alpha, false_easting, false_northing):
    """Ellipsoidal Transverse Mercator forward map of one point.

    ``k0_a`` is the scale factor times the rectifying radius and ``alpha``
    holds the six Krüger coefficients.  Returns ``(easting, northing)``.
    """
    phi = radians(lat)
    dlon = (lon - lon0 + 180.0) % 360.0 - 180.0
    lam = radians(dlon)
    s = sin(phi)
    t = sinh(atanh(s) - e * atanh(e * s))
    xi_p = atan2(t, cos(lam))
    eta_p = atanh(sin(lam) / sqrt(1.0 + t * t))
    xi = xi_p
    eta = eta_p
    for j, a in enumerate(alpha, 1):
        xi += a * sin(2 * j * xi_p) * cosh(2 * j * eta_p)
        eta += a * cos(2 * j * xi_p) * sinh(2 * j * eta_p)
    return false_easting + k0_a * eta, false_northing + k0_a * xi


def tm_forward_many(lats, lons, lon0, e, k0_a, alpha, false_easting, false_northing):
    if len(lats) != len(lons):
        raise ValueError("lats and lons differ in length")
    east = array("d")
    north = array("d")
    for lat, lon in zip(lats, lons):
        x, y = tm_forward(lat, lon, lon0, e, k0_a, alpha, false_easting, false_northing)
        east.append(x)
        north.append(y)
    return east, north


def haversine(lat1, lon1, lat2, lon2, radius):
    p1 = radians(lat1)
    p2 = radians(lat2)
    h = sin((p2 - p1) / 2) ** 2 + cos(p1) * cos(p2) * sin(radians(lon2 - lon1) / 2) ** 2
    return 2.0 * radius * asin(min(1.0, sqrt(h)))


def haversine_segments(lats, lons, radius):
    """Lengths of the consecutive segments of a path, ``len(lats) - 1`` values."""
    if len(lats) != len(lons):
        raise ValueError("lats and lons differ in length")
    out = array("d")
    for i in range(1, len(lats)):
        out.append(haversine(lats[i - 1], lons[i - 1], lats[i], lons[i], radius))
    return out
