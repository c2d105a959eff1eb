"""Regenerate tests/data/utm_oracle.json from PROJ (via pyproj).

Not used by the test suite at runtime; pyproj is only needed to refresh the
pinned table.  Run from the repository root:

    python tools/gen_utm_oracle.py > tests/data/utm_oracle.json
"""
import json
import sys

import pyproj

ZONE = 15
CM = -93.0


def utm(zone, south):
    crs = pyproj.CRS.from_dict(
        {"proj": "utm", "zone": zone, "ellps": "WGS84", "south": south}
    )
    return pyproj.Transformer.from_crs("EPSG:4326", crs, always_xy=True), pyproj.Proj(crs)


def main():
    points = []
    for lat in (0.0, 30.0, -30.0, 60.0, -60.0):
        for off in (0.0, 1.0, -1.0, 3.0, -3.0):
            lon = CM + off
            tr, _ = utm(ZONE, lat < 0)
            e, n = tr.transform(lon, lat)
            points.append({"lat": lat, "lon": lon, "zone": ZONE,
                           "hemisphere": "south" if lat < 0 else "north",
                           "easting": round(e, 6), "northing": round(n, 6)})

    tr, proj = utm(ZONE, False)
    lat, lon = 35.1495, -90.0490
    e, n = tr.transform(lon, lat)
    factors = proj.get_factors(lon, lat)
    memphis = {"lat": lat, "lon": lon, "zone": ZONE, "hemisphere": "north",
               "easting": round(e, 6), "northing": round(n, 6),
               "meridian_convergence_deg": round(factors.meridian_convergence, 9)}

    json.dump({"source": f"PROJ {pyproj.proj_version_str} via pyproj {pyproj.__version__}",
               "grid": points, "memphis": memphis}, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
