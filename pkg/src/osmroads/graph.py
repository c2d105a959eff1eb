"""Junction-split road graph built from resolved polylines, with Dijkstra routing."""

from __future__ import annotations

import heapq
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import NoPath, VertexNotFound
from .geodesy import EARTH_RADIUS_M
from .kernels import haversine_segments
from .model import GeoPoint, RoadClass, RoadPolyline


@dataclass(frozen=True)
class Edge:
    edge_id: int
    a: int
    b: int
    node_ids: tuple[int, ...]
    geometry: tuple[GeoPoint, ...]
    length: float
    highway: RoadClass
    source_way: int


class RoadNetwork:
    """Undirected multigraph; parallel edges and self-loops are kept.

    ``vertices`` maps node id to position.  ``dropped_degenerate`` counts
    zero-length edges (same node at both ends, no shape points) that
    ``build_graph`` discarded.
    """

    def __init__(self, vertices: Mapping[int, GeoPoint], edges: Sequence[Edge], dropped_degenerate: int = 0):
        self.vertices = dict(vertices)
        self.edges = list(edges)
        self.dropped_degenerate = dropped_degenerate
        for e in self.edges:
            if e.a not in self.vertices or e.b not in self.vertices:
                raise ValueError(f"edge {e.edge_id} endpoint is not a vertex")
        adj = defaultdict(dict)
        for e in self.edges:
            if e.a == e.b:
                continue
            for u, v in ((e.a, e.b), (e.b, e.a)):
                best = adj[u].get(v)
                if best is None or (e.length, e.edge_id) < best:
                    adj[u][v] = (e.length, e.edge_id)
        # neighbours sorted by id so equal-distance ties resolve to the smaller id
        self._adj = {u: sorted((v, w, eid) for v, (w, eid) in nbrs.items()) for u, nbrs in adj.items()}

    def neighbours(self, node_id):
        return self._adj.get(node_id, [])

    def __repr__(self):
        return f"RoadNetwork({len(self.vertices)} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class PathResult:
    vertices: tuple[int, ...]
    total_length: float
    edges: tuple[int, ...] = ()


@dataclass
class NetworkStats:
    vertex_count: int = 0
    edge_count: int = 0
    component_count: int = 0
    total_length: float = 0.0
    length_by_class: dict = field(default_factory=dict)
    dropped_degenerate: int = 0

    def as_lines(self) -> list[str]:
        lines = [
            f"vertices={self.vertex_count}",
            f"edges={self.edge_count}",
            f"components={self.component_count}",
            f"total_length_m={self.total_length:.3f}",
            f"dropped_degenerate={self.dropped_degenerate}",
        ]
        lines += [f"length_m.{name}={value:.3f}" for name, value in sorted(self.length_by_class.items())]
        return lines


def find_junctions(polylines: Iterable[RoadPolyline]) -> set[int]:
    junctions = set()
    owner = {}
    for idx, poly in enumerate(polylines):
        ids = poly.node_ids
        junctions.add(ids[0])
        junctions.add(ids[-1])
        seen = set()
        for node_id in ids:
            if node_id in seen:
                junctions.add(node_id)
                continue
            seen.add(node_id)
            first = owner.setdefault(node_id, idx)
            if first != idx:
                junctions.add(node_id)
    return junctions


def _edge_length(points):
    return math.fsum(haversine_segments([p[0] for p in points], [p[1] for p in points], EARTH_RADIUS_M))


def build_graph(polylines: Sequence[RoadPolyline]) -> RoadNetwork:
    """Split every polyline at its interior junctions.

    Edge ids are assigned sequentially in polyline order, then split order.
    """
    junctions = find_junctions(polylines)
    vertices = {}
    edges = []
    dropped = 0
    for poly in polylines:
        ids = poly.node_ids
        cuts = [i for i, node_id in enumerate(ids) if node_id in junctions]
        for i, j in zip(cuts, cuts[1:]):
            if j == i + 1 and ids[i] == ids[j]:
                dropped += 1
                continue
            geometry = poly.points[i : j + 1]
            edges.append(
                Edge(len(edges), ids[i], ids[j], ids[i : j + 1], geometry, _edge_length(geometry), poly.highway, poly.way_id)
            )
            vertices.setdefault(ids[i], poly.points[i])
            vertices.setdefault(ids[j], poly.points[j])
    return RoadNetwork(vertices, edges, dropped)


def shortest_path(network: RoadNetwork, source: int, target: int) -> PathResult:
    """Dijkstra over undirected edge lengths.

    Among equal-length alternatives the smaller vertex id wins, both in the
    settling order and when choosing a predecessor.
    """
    for v in (source, target):
        if v not in network.vertices:
            raise VertexNotFound(v)
    dist = {source: 0.0}
    pred = {}
    settled = set()
    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in settled:
            continue
        settled.add(u)
        if u == target:
            break
        for v, w, eid in network.neighbours(u):
            if v in settled:
                continue
            nd = d + w
            old = dist.get(v)
            if old is None or nd < old or (nd == old and u < pred[v][0]):
                dist[v] = nd
                pred[v] = (u, eid, w)
                heapq.heappush(heap, (nd, v))
    if target not in settled:
        raise NoPath(f"no path from {source} to {target}")
    path = [target]
    edge_ids = []
    lengths = []
    while path[-1] != source:
        u, eid, w = pred[path[-1]]
        path.append(u)
        edge_ids.append(eid)
        lengths.append(w)
    total = 0.0
    for w in reversed(lengths):
        total += w
    return PathResult(tuple(reversed(path)), total, tuple(reversed(edge_ids)))


def _count_components(vertices, edges):
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = len(parent)
    for e in edges:
        ra, rb = find(e.a), find(e.b)
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count


def network_stats(network: RoadNetwork) -> NetworkStats:
    by_class = defaultdict(list)
    for e in network.edges:
        by_class[str(e.highway)].append(e.length)
    return NetworkStats(
        vertex_count=len(network.vertices),
        edge_count=len(network.edges),
        component_count=_count_components(network.vertices, network.edges),
        total_length=math.fsum(e.length for e in network.edges),
        length_by_class={k: math.fsum(v) for k, v in by_class.items()},
        dropped_degenerate=network.dropped_degenerate,
    )
