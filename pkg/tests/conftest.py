import gzip
import shutil
from pathlib import Path

import pytest

from osmroads import kernels

DATA = Path(__file__).parent / "data"
FIXTURE_SMALL = DATA / "fixture_small.osm"
REAL_SAMPLE_GZ = DATA / "helsinki_region_sample.osm.gz"


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return kernels.BACKENDS[request.param]


@pytest.fixture(scope="session")
def real_sample(tmp_path_factory):
    """Real OSM extract (libosmium XML export of pyrosm's bundled Helsinki.osm.pbf)."""
    out = tmp_path_factory.mktemp("real") / "sample.osm"
    with gzip.open(REAL_SAMPLE_GZ, "rb") as src, open(out, "wb") as dst:
        shutil.copyfileobj(src, dst)
    return out



ACCEPTANCE_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        ok = rep.passed
        prev = ACCEPTANCE_RESULTS.get(number, (title, True, ""))
        detail = getattr(item, "acceptance_detail", "")
        ACCEPTANCE_RESULTS[number] = (title, prev[1] and ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, ok, detail = ACCEPTANCE_RESULTS[number]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
