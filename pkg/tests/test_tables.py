import io
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from osmroads.errors import EmptyClassSet, EmptyInput
from osmroads.model import BoundingBox, GeoPoint, HighwayClass, RawNode, RawWay, Tag
from osmroads.tables import (
    NodeTable,
    WayEntry,
    WayTable,
    bounding_box,
    extract_nodes,
    extract_ways,
    filter_by_class,
    read_nodes_csv,
    read_ways_csv,
    resolve_ways,
    write_nodes_csv,
    write_ways_csv,
)

from .helpers import poly, random_polylines


def hw(way_id, refs, value="residential", key="highway"):
    return RawWay(way_id, tuple(refs), (Tag(key, value),))


def test_extract_nodes():
    assert len(extract_nodes([])) == 0
    table = extract_nodes([RawNode(10, 1.0, 2.0), RawNode(11, 3.0, 4.0)])
    assert len(table) == 2
    assert table[10] == GeoPoint(1.0, 2.0)
    assert table.get(11) == GeoPoint(3.0, 4.0)
    assert table.get(12) is None


def test_extract_nodes_last_wins():
    table = extract_nodes([RawNode(10, 1.0, 1.0), RawNode(10, 2.0, 2.0)])
    assert table[10] == GeoPoint(2.0, 2.0)
    assert table.insertions == 2


def test_extract_ways_filters():
    ways = [
        hw(1, [1, 2], "motorway"),
        RawWay(2, (1, 2), (Tag("building", "yes"),)),
        hw(3, [1, 2], "busway"),
        hw(4, [1, 2], "motorway", key="Highway"),
        hw(5, [2, 3], "Tertiary Link"),
    ]
    table = extract_ways(ways)
    assert [(e.way_id, e.highway) for e in table] == [(1, HighwayClass.motorway), (5, HighwayClass.tertiary_link)]


def test_way_table_rejects_other():
    from osmroads.model import OtherHighway

    with pytest.raises(ValueError):
        WayTable().append(WayEntry(1, OtherHighway("busway"), (1, 2)))


@pytest.fixture
def nodes():
    return extract_nodes([RawNode(i, 35.0 + i / 100, -90.0 + i / 100) for i in (1, 2, 3, 5, 6, 7)])


def test_resolve_all_present(nodes):
    polys, report = resolve_ways(extract_ways([hw(1, [1, 2, 3])]), nodes)
    assert len(polys) == 1 and len(polys[0].points) == 3
    assert polys[0].points[1] == nodes[2]
    assert report.ways_resolved == 1


def test_resolve_drops_whole_way(nodes):
    polys, report = resolve_ways(extract_ways([hw(1, [1, 2, 9])]), nodes)
    assert polys == []
    assert (report.ways_resolved, report.ways_dropped_missing_nodes, report.refs_missing) == (0, 1, 1)


def test_resolve_counts_every_missing_pair(nodes):
    _, report = resolve_ways(extract_ways([hw(1, [9, 1, 9, 8])]), nodes)
    assert report.refs_missing == 3


def test_resolve_closed(nodes):
    polys, _ = resolve_ways(extract_ways([hw(1, [5, 6, 7, 5])]), nodes)
    assert polys[0].closed


@given(st.lists(st.lists(st.integers(1, 12), min_size=2, max_size=8), max_size=10))
def test_resolution_conservation(ref_lists):
    table = extract_nodes([RawNode(i, float(i), float(i)) for i in range(1, 9)])
    ways = extract_ways([hw(k + 1, refs) for k, refs in enumerate(ref_lists)])
    polys, report = resolve_ways(ways, table)
    assert report.ways_resolved + report.ways_dropped_missing_nodes == len(ways)
    by_id = {w.way_id: w for w in ways}
    for p in polys:
        assert len(p.points) == len(by_id[p.way_id].node_refs)
        assert all(n in table for n in p.node_ids)


COORDS = {i: (35.0 + i * 0.001, -90.0 - i * 0.001) for i in range(1, 20)}


def mixed():
    classes = [HighwayClass.motorway, HighwayClass.trunk, HighwayClass.residential, HighwayClass.secondary,
               HighwayClass.primary, HighwayClass.motorway, HighwayClass.footway]
    return [poly(k, [k, k + 1], COORDS, c) for k, c in enumerate(classes, 1)]


def test_filter_motorway_only():
    out = filter_by_class(mixed(), {HighwayClass.motorway})
    assert [p.way_id for p in out] == [1, 6]


def test_filter_major_roads():
    keep = {HighwayClass.motorway, HighwayClass.trunk, HighwayClass.primary, HighwayClass.secondary}
    assert [p.way_id for p in filter_by_class(mixed(), keep)] == [1, 2, 4, 5, 6]


def test_filter_all_is_identity():
    polys = mixed()
    assert filter_by_class(polys, set(HighwayClass)) == polys


def test_filter_empty_set():
    with pytest.raises(EmptyClassSet):
        filter_by_class(mixed(), set())


@given(st.sets(st.sampled_from(list(HighwayClass)), min_size=1), st.sets(st.sampled_from(list(HighwayClass))), st.integers(0, 2**32))
def test_filter_monotone(small, extra, seed):
    polys = random_polylines(random.Random(seed))
    a = filter_by_class(polys, small)
    b = filter_by_class(polys, small | extra)
    assert set(map(id, a)) <= set(map(id, b))


def test_bounding_box_examples():
    assert bounding_box([poly(1, [1, 1], {1: (35.0, -90.0)})]) == BoundingBox(35, -90, 35, -90)
    assert bounding_box([poly(1, [1, 2], {1: (0, 0), 2: (1, 2)})]) == BoundingBox(0, 0, 1, 2)
    with pytest.raises(EmptyInput):
        bounding_box([])


@given(st.integers(0, 2**32))
def test_bounding_box_order_invariant(seed):
    rng = random.Random(seed)
    polys = random_polylines(rng)
    shuffled = polys[:]
    rng.shuffle(shuffled)
    assert bounding_box(shuffled) == bounding_box(polys)


def test_csv_round_trip(nodes):
    ways = extract_ways([hw(1, [1, 2, 3], "primary"), hw(2, [5, 6], "living street")])
    buf = io.StringIO(newline="")
    assert write_nodes_csv(nodes, buf) == 6
    text = buf.getvalue()
    assert text.startswith("id,lat,lon\n") and "\r" not in text
    assert dict(read_nodes_csv(io.StringIO(text)).items()) == dict(nodes.items())

    buf = io.StringIO(newline="")
    write_ways_csv(ways, buf)
    assert buf.getvalue().splitlines()[:2] == ["way_id,highway,node_refs", "1,primary,1;2;3"]
    assert list(read_ways_csv(io.StringIO(buf.getvalue()))) == list(ways)
