# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric kernels; mirrors osmroads._kernels_py exactly."""

from cpython cimport array
import array

from libc.math cimport asin, atan2, atanh, cos, cosh, fmod, sin, sinh, sqrt, M_PI

cdef double DEG = M_PI / 180.0


cdef inline void _tm(double lat, double lon, double lon0, double e, double k0_a,
                     const double *alpha, double fe, double fn,
                     double *east, double *north) nogil:
    cdef double phi = lat * DEG
    cdef double dlon = fmod(lon - lon0 + 180.0, 360.0)
    if dlon < 0:
        dlon += 360.0
    cdef double lam = (dlon - 180.0) * DEG
    cdef double s = sin(phi)
    cdef double t = sinh(atanh(s) - e * atanh(e * s))
    cdef double xi_p = atan2(t, cos(lam))
    cdef double eta_p = atanh(sin(lam) / sqrt(1.0 + t * t))
    cdef double xi = xi_p, eta = eta_p
    cdef int j
    for j in range(1, 7):
        xi += alpha[j - 1] * sin(2 * j * xi_p) * cosh(2 * j * eta_p)
        eta += alpha[j - 1] * cos(2 * j * xi_p) * sinh(2 * j * eta_p)
    east[0] = fe + k0_a * eta
    north[0] = fn + k0_a * xi


cdef inline double _hav(double lat1, double lon1, double lat2, double lon2, double radius) nogil:
    cdef double p1 = lat1 * DEG, p2 = lat2 * DEG
    cdef double a = sin((p2 - p1) / 2), b = sin((lon2 - lon1) * DEG / 2)
    cdef double h = a * a + cos(p1) * cos(p2) * b * b
    h = sqrt(h)
    if h > 1.0:
        h = 1.0
    return 2.0 * radius * asin(h)


cdef object _as_doubles(seq):
    if isinstance(seq, array.array) and seq.typecode == "d":
        return seq
    return array.array("d", seq)


cdef void _unpack_alpha(alpha, double *out) except *:
    if len(alpha) != 6:
        raise ValueError("expected six series coefficients")
    for i in range(6):
        out[i] = alpha[i]


def tm_forward(double lat, double lon, double lon0, double e, double k0_a, alpha,
               double false_easting, double false_northing):
    cdef double a[6]
    cdef double x, y
    _unpack_alpha(alpha, a)
    _tm(lat, lon, lon0, e, k0_a, a, false_easting, false_northing, &x, &y)
    return x, y


def tm_forward_many(lats, lons, double lon0, double e, double k0_a, alpha,
                    double false_easting, double false_northing):
    cdef const double[::1] la = _as_doubles(lats)
    cdef const double[::1] lo = _as_doubles(lons)
    if la.shape[0] != lo.shape[0]:
        raise ValueError("lats and lons differ in length")
    cdef Py_ssize_t n = la.shape[0], i
    cdef double a[6]
    _unpack_alpha(alpha, a)
    cdef array.array east = array.clone(array.array("d"), n, zero=False)
    cdef array.array north = array.clone(array.array("d"), n, zero=False)
    cdef double *pe = east.data.as_doubles
    cdef double *pn = north.data.as_doubles
    with nogil:
        for i in range(n):
            _tm(la[i], lo[i], lon0, e, k0_a, a, false_easting, false_northing, &pe[i], &pn[i])
    return east, north


def haversine(double lat1, double lon1, double lat2, double lon2, double radius):
    return _hav(lat1, lon1, lat2, lon2, radius)


def haversine_segments(lats, lons, double radius):
    cdef const double[::1] la = _as_doubles(lats)
    cdef const double[::1] lo = _as_doubles(lons)
    if la.shape[0] != lo.shape[0]:
        raise ValueError("lats and lons differ in length")
    cdef Py_ssize_t n = la.shape[0], i
    cdef Py_ssize_t m = n - 1 if n > 0 else 0
    cdef array.array out = array.clone(array.array("d"), m, zero=False)
    cdef double *po = out.data.as_doubles
    with nogil:
        for i in range(1, n):
            po[i - 1] = _hav(la[i - 1], lo[i - 1], la[i], lo[i], radius)
    return out
