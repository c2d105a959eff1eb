"""Streaming parser for the node/way/nd/tag subset of OSM XML.

The parser is push-based on top of expat: the source is read in fixed-size
chunks and records are handed to the sinks as soon as their closing tag is
seen, so memory stays bounded by the largest single element.
"""

from __future__ import annotations

import io
import logging
import math
import os
import re
from dataclasses import dataclass, fields
from typing import BinaryIO, Callable, Optional, Union
from xml.parsers import expat

from .errors import InvalidAttribute, MalformedXml, OsmIOError
from .model import MAX_OSM_ID, RawNode, RawWay, Tag

log = logging.getLogger(__name__)

DEFAULT_BUFFER_SIZE = 64 * 1024

NodeSink = Callable[[RawNode], object]
WaySink = Callable[[RawWay], object]

_INT_RE = re.compile(r"[0-9]+\Z")
_FLOAT_RE = re.compile(r"[+-]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?\Z")
_UTF8_NAMES = {"utf-8", "utf8"}


@dataclass
class ParseSummary:
    nodes_read: int = 0
    ways_read: int = 0
    ways_rejected_short: int = 0
    relations_skipped: int = 0
    unknown_elements_skipped: int = 0
    malformed_records: int = 0

    def as_lines(self) -> list[str]:
        return [f"{f.name}={getattr(self, f.name)}" for f in fields(self)]


def _parse_id(text):
    if text is None or not _INT_RE.match(text):
        raise InvalidAttribute(f"bad id {text!r}")
    value = int(text)
    if not 0 < value <= MAX_OSM_ID:
        raise InvalidAttribute(f"id out of range {text!r}")
    return value


def _parse_degrees(text, limit):
    if text is None or not _FLOAT_RE.match(text.strip()):
        raise InvalidAttribute(f"bad coordinate {text!r}")
    value = float(text)
    if not (math.isfinite(value) and -limit <= value <= limit):
        raise InvalidAttribute(f"coordinate out of range {text!r}")
    return value


class _Record:
    __slots__ = ("kind", "id", "lat", "lon", "refs", "tags", "error")

    def __init__(self, kind):
        self.kind = kind
        self.id = None
        self.lat = self.lon = None
        self.refs = []
        self.tags = []
        self.error = None


class _Handler:
    def __init__(self, parser, node_sink, way_sink):
        self.parser = parser
        self.node_sink = node_sink
        self.way_sink = way_sink
        self.summary = ParseSummary()
        self.depth = 0
        # depth at which a skipped subtree started; 0 means not skipping
        self.skip_until = 0
        self.record: Optional[_Record] = None

    def _fail(self, message):
        raise MalformedXml(message, self.parser.CurrentLineNumber, self.parser.CurrentColumnNumber)

    def xml_decl(self, version, encoding, standalone):
        if encoding is not None and encoding.lower() not in _UTF8_NAMES:
            self._fail(f"unsupported encoding {encoding!r}; input must be UTF-8")

    def entity_decl(self, *args):
        self._fail("entity declarations are not supported")

    def start(self, name, attrs):
        self.depth += 1
        depth = self.depth
        if self.skip_until:
            return
        if depth == 1:
            if name != "osm":
                self._fail(f"root element must be <osm>, found <{name}>")
            return
        rec = self.record
        if depth == 2:
            if name == "node":
                rec = self.record = _Record("node")
                try:
                    rec.id = _parse_id(attrs.get("id"))
                    rec.lat = _parse_degrees(attrs.get("lat"), 90.0)
                    rec.lon = _parse_degrees(attrs.get("lon"), 180.0)
                except InvalidAttribute as exc:
                    rec.error = exc
            elif name == "way":
                rec = self.record = _Record("way")
                try:
                    rec.id = _parse_id(attrs.get("id"))
                except InvalidAttribute as exc:
                    rec.error = exc
            elif name == "relation":
                self.summary.relations_skipped += 1
                self.skip_until = depth
            else:
                self.summary.unknown_elements_skipped += 1
                self.skip_until = depth
            return
        if depth == 3 and name == "tag":
            key = attrs.get("k")
            if not key:
                if rec.error is None:
                    rec.error = InvalidAttribute("tag without key")
            else:
                rec.tags.append(Tag(key, attrs.get("v", "")))
            return
        if depth == 3 and name == "nd" and rec.kind == "way":
            try:
                rec.refs.append(_parse_id(attrs.get("ref")))
            except InvalidAttribute as exc:
                if rec.error is None:
                    rec.error = exc
            return
        self.summary.unknown_elements_skipped += 1
        self.skip_until = depth

    def end(self, name):
        depth = self.depth
        self.depth -= 1
        if self.skip_until:
            if depth == self.skip_until:
                self.skip_until = 0
            return
        if depth != 2:
            return
        rec, self.record = self.record, None
        summary = self.summary
        if rec.error is not None:
            summary.malformed_records += 1
            log.debug("skipping %s %s: %s", rec.kind, rec.id, rec.error)
        elif rec.kind == "node":
            summary.nodes_read += 1
            self.node_sink(RawNode(rec.id, rec.lat, rec.lon, tuple(rec.tags)))
        elif len(rec.refs) < 2:
            summary.ways_rejected_short += 1
        else:
            summary.ways_read += 1
            self.way_sink(RawWay(rec.id, tuple(rec.refs), tuple(rec.tags)))


def _discard(_record):
    pass


def parse_osm(
    source: Union[BinaryIO, bytes],
    node_sink: Optional[NodeSink] = None,
    way_sink: Optional[WaySink] = None,
    buffer_size: int = DEFAULT_BUFFER_SIZE,
) -> ParseSummary:
    """Parse OSM XML from a binary stream, pushing records into the sinks.

    Nodes with a missing/invalid id, lat or lon, and ways with an invalid id or
    nd ref, are skipped and counted in ``malformed_records``; ways with fewer
    than two refs are counted in ``ways_rejected_short``.  Relations and any
    unrecognised element are skipped with their whole subtree.

    Raises:
        MalformedXml: markup cannot be parsed, the root is not ``<osm>``, the
            document declares a non-UTF-8 encoding or declares entities.
    """
    if isinstance(source, (bytes, bytearray, memoryview)):
        source = io.BytesIO(source)
    if buffer_size < 1:
        raise ValueError("buffer_size must be positive")
    parser = expat.ParserCreate()
    handler = _Handler(
        parser,
        _discard if node_sink is None else node_sink,
        _discard if way_sink is None else way_sink,
    )
    parser.StartElementHandler = handler.start
    parser.EndElementHandler = handler.end
    parser.XmlDeclHandler = handler.xml_decl
    parser.EntityDeclHandler = handler.entity_decl
    try:
        while True:
            chunk = source.read(buffer_size)
            if not chunk:
                break
            parser.Parse(chunk, False)
        parser.Parse(b"", True)
    except expat.ExpatError as exc:
        raise MalformedXml(expat.ErrorString(exc.code), exc.lineno, exc.offset) from None
    return handler.summary


def parse_osm_file(
    path: Union[str, os.PathLike],
    node_sink: Optional[NodeSink] = None,
    way_sink: Optional[WaySink] = None,
    buffer_size: int = DEFAULT_BUFFER_SIZE,
) -> ParseSummary:
    try:
        fh = open(path, "rb")
    except OSError as exc:
        raise OsmIOError(f"cannot open {path}: {exc.strerror}") from exc
    with fh:
        return parse_osm(fh, node_sink, way_sink, buffer_size)
