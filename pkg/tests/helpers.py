"""Shared builders and independent oracles for the test suite."""

import math
import random
from collections import Counter

import pytest

from osmroads.graph import Edge, RoadNetwork, find_junctions
from osmroads.model import GeoPoint, HighwayClass, RoadPolyline


def osm_doc(body: str) -> bytes:
    return f'<?xml version="1.0" encoding="UTF-8"?>\n<osm version="0.6">\n{body}\n</osm>\n'.encode()


def poly(way_id, ids, coords, cls=HighwayClass.residential):
    return RoadPolyline(way_id, cls, tuple(ids), tuple(GeoPoint(*coords[i]) for i in ids))


def random_polylines(rng: random.Random, max_lines=20, max_points=15, pool=40):
    """Polylines over a shared pool of node ids so junctions and repeats occur."""
    coords = {i: (35.0 + rng.uniform(0, 0.05), -90.0 + rng.uniform(0, 0.05)) for i in range(1, pool + 1)}
    classes = list(HighwayClass)
    out = []
    for w in range(rng.randint(1, max_lines)):
        n = rng.randint(2, max_points)
        ids = [rng.randint(1, pool) for _ in range(n)]
        if rng.random() < 0.15:
            ids[-1] = ids[0]
        out.append(poly(1000 + w, ids, coords, rng.choice(classes)))
    return out


def direct_haversine(a, b, radius=6_371_000.0):
    """Textbook haversine, independent of osmroads.kernels."""
    lat1, lon1 = map(math.radians, a)
    lat2, lon2 = map(math.radians, b)
    h = math.sin((lat2 - lat1) / 2) ** 2 + math.cos(lat1) * math.cos(lat2) * math.sin((lon2 - lon1) / 2) ** 2
    return 2 * radius * math.asin(min(1.0, math.sqrt(h)))


def random_network(rng: random.Random, n_vertices=50, n_edges=None, integer_lengths=False):
    ids = rng.sample(range(1, 10 * n_vertices), n_vertices)
    vertices = {v: GeoPoint(0.0, 0.0) for v in ids}
    if n_edges is None:
        n_edges = rng.randint(n_vertices // 2, 3 * n_vertices)
    edges = []
    for k in range(n_edges):
        a, b = rng.choice(ids), rng.choice(ids)
        length = float(rng.randint(0, 20)) if integer_lengths else rng.uniform(0.0, 1000.0)
        edges.append(Edge(k, a, b, (a, b), (vertices[a], vertices[b]), length, HighwayClass.residential, k))
    return RoadNetwork(vertices, edges)


def bellman_ford(network: RoadNetwork, source):
    """Single-source distances by edge relaxation; math.inf when unreachable."""
    dist = {v: math.inf for v in network.vertices}
    dist[source] = 0.0
    for _ in range(len(dist)):
        changed = False
        for e in network.edges:
            for u, v in ((e.a, e.b), (e.b, e.a)):
                if dist[u] + e.length < dist[v]:
                    dist[v] = dist[u] + e.length
                    changed = True
        if not changed:
            break
    return dist


def brute_force_shortest(network: RoadNetwork, source, target):
    """Minimum length over every simple path; only for tiny graphs."""
    adj = {}
    for e in network.edges:
        for u, v in ((e.a, e.b), (e.b, e.a)):
            adj.setdefault(u, []).append((v, e.length))
    best = math.inf
    stack = [(source, 0.0, {source})]
    while stack:
        u, d, seen = stack.pop()
        if u == target:
            best = min(best, d)
            continue
        for v, w in adj.get(u, []):
            if v not in seen:
                stack.append((v, d + w, seen | {v}))
    return best


def pairs(seq):
    return list(zip(seq, seq[1:]))


def check_graph_invariants(polys, net):
    junctions = find_junctions(polys)
    # endpoints are vertices, geometry anchored on endpoints, no interior junctions
    for e in net.edges:
        assert e.a in net.vertices and e.b in net.vertices
        assert e.geometry[0] == net.vertices[e.a] and e.geometry[-1] == net.vertices[e.b]
        assert e.a in junctions and e.b in junctions
        assert not any(n in junctions for n in e.node_ids[1:-1])
        direct = math.fsum(direct_haversine(p, q) for p, q in pairs(e.geometry))
        assert e.length == pytest.approx(direct, rel=1e-6, abs=1e-9)
    # length conservation
    total_edges = math.fsum(e.length for e in net.edges)
    total_polys = math.fsum(direct_haversine(p, q) for pl in polys for p, q in pairs(pl.points))
    assert total_edges == pytest.approx(total_polys, rel=1e-6, abs=1e-9)
    # segment multiset conservation, modulo dropped same-node segments
    edge_segments = Counter(s for e in net.edges for s in pairs(e.node_ids))
    poly_segments = Counter(s for pl in polys for s in pairs(pl.node_ids) if s[0] != s[1])
    dropped = sum(1 for pl in polys for s in pairs(pl.node_ids) if s[0] == s[1])
    assert edge_segments == poly_segments
    assert net.dropped_degenerate == dropped
    # junction soundness: vertices are exactly the junctions touching a kept segment
    touching = {n for s in poly_segments for n in s} & junctions
    assert set(net.vertices) == touching
