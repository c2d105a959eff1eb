"""Compare the compiled and pure-Python kernels on batch projection and haversine.

    python3 benchmarks/bench_kernels.py [--points N] [--repeat R]

Prints one line per (kernel, backend) with the best wall time over R runs,
throughput, and the speedup of the compiled backend.  Outputs of the two
backends are checked against each other before timing.
"""

import argparse
import random
import timeit
from array import array

from osmroads import geodesy, kernels
from osmroads.geodesy import UtmZone


def make_inputs(n, seed=0):
    rng = random.Random(seed)
    lon0 = geodesy.central_meridian(UtmZone(15))
    lats = array("d", (rng.uniform(-80.0, 84.0) for _ in range(n)))
    lons = array("d", (lon0 + rng.uniform(-3.0, 3.0) for _ in range(n)))
    return lats, lons, lon0


def max_difference(a, b):
    """Largest absolute elementwise gap; tuples of arrays are compared column by column."""
    if not isinstance(a, tuple):
        a, b = (a,), (b,)
    return max(abs(x - y) for col_a, col_b in zip(a, b) for x, y in zip(col_a, col_b))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=200_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    lats, lons, lon0 = make_inputs(args.points)
    tm = geodesy._WGS84_TM
    params = geodesy.WGS84_UTM
    proj_args = (lats, lons, lon0, tm.e, tm.k0_a, tm.alpha, params.false_easting, 0.0)

    cases = {
        "tm_forward_many": lambda mod: mod.tm_forward_many(*proj_args),
        "haversine_segments": lambda mod: mod.haversine_segments(lats, lons, geodesy.EARTH_RADIUS_M),
    }

    backends = kernels.BACKENDS
    if "cython" not in backends:
        print("compiled backend unavailable; timing the pure-Python kernels only")

    print(f"points={args.points} repeat={args.repeat}")
    for name, fn in cases.items():
        results = {b: fn(mod) for b, mod in backends.items()}
        if len(results) == 2:
            worst = max_difference(results["python"], results["cython"])
            print(f"{name}: max backend difference {worst:.3e} m")
        best = {}
        for bname, mod in backends.items():
            best[bname] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
            rate = args.points / best[bname] / 1e6
            print(f"  {bname:<7} {best[bname] * 1e3:9.2f} ms  {rate:7.2f} Mpts/s")
        if len(best) == 2:
            print(f"  speedup {best['python'] / best['cython']:.1f}x")


if __name__ == "__main__":
    main()
