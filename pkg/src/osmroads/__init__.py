"""Convert OpenStreetMap XML extracts into projected road maps and routable graphs."""

from .errors import (
    EmptyClassSet,
    EmptyInput,
    MalformedXml,
    NoPath,
    OsmIOError,
    OsmRoadsError,
    OutOfBand,
    VertexNotFound,
    ZoneTooFar,
)
from .geodesy import (
    WGS84_UTM,
    Hemisphere,
    ProjectedPoint,
    UtmZone,
    central_meridian,
    haversine_m,
    project_polylines,
    project_to_utm,
    utm_zone_for,
)
from .graph import RoadNetwork, build_graph, find_junctions, network_stats, shortest_path
from .ingest import ParseSummary, parse_osm, parse_osm_file
from .model import (
    BoundingBox,
    GeoPoint,
    HighwayClass,
    OtherHighway,
    RawNode,
    RawWay,
    RoadPolyline,
    Tag,
    classify_highway,
    is_closed,
)
from .render import RenderStyle, export_edges_csv, export_geojson, load_style, render_svg
from .tables import (
    MergeReport,
    NodeTable,
    WayEntry,
    WayTable,
    bounding_box,
    extract_nodes,
    extract_ways,
    filter_by_class,
    resolve_ways,
)

__version__ = "0.1.0"
