"""Deterministic DOT and JSON serialization for constructed graphs.

JSON schema:
  {"k": int,
   "vertices": [{"label": "xyz", "port": 0|1|2, "layer": int}, ...],
   "edges": [{"u": idx, "v": idx, "kind": "internal"|"external", "color": int|null}, ...]}

Vertex labels travel as 3-character binary strings. Edge endpoints are indices
into the vertex list. Imports validate the schema and report the offending
field; they do not require the edge set to follow the G_k edge rule, so
arbitrary small graphs can be fed to the verification and oracle routines.
"""

from __future__ import annotations

import json
from typing import Any

from pancert.construction import ConstructedGraph, Edge, PortedVertex
from pancert.cycles import CycleCertificate
from pancert.group import label_str, parse_label

# one fill per external color, internal edges drawn dashed
_DOT_COLORS = {0: "crimson", 1: "royalblue", 2: "forestgreen"}

_EDGE_KINDS = ("internal", "external")


class SchemaError(ValueError):
    """A graph file that does not match the JSON schema; message names the locus."""


def vertex_obj(v: PortedVertex) -> dict[str, Any]:
    return {"label": label_str(v.label), "port": v.port, "layer": v.layer}


def certificate_obj(cert: CycleCertificate) -> dict[str, Any]:
    return {
        "target": vertex_obj(cert.target),
        "m": cert.m,
        "cycle": [vertex_obj(v) for v in cert.vertices],
    }


def certificate_line(cert: CycleCertificate) -> str:
    """Canonical single-line JSON rendering, used for JSONL archives."""
    return json.dumps(certificate_obj(cert), sort_keys=True, separators=(",", ":"))


def to_json(graph: ConstructedGraph) -> str:
    obj = {
        "k": graph.k,
        "vertices": [vertex_obj(v) for v in graph.vertices],
        "edges": [
            {"u": e.u, "v": e.v, "kind": e.kind, "color": e.color} for e in graph.edges
        ],
    }
    return json.dumps(obj, indent=2) + "\n"


def to_dot(graph: ConstructedGraph) -> str:
    lines = [f'graph "{graph.name or "graph"}" {{']
    lines.append("  node [shape=circle fontsize=10];")
    for i, v in enumerate(graph.vertices):
        lines.append(f'  v{i} [label="{v}"];')
    for e in graph.edges:
        if e.kind == "internal":
            style = "style=dashed"
        else:
            style = f"color={_DOT_COLORS[e.color]}"
        lines.append(f"  v{e.u} -- v{e.v} [{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_bytes(graph: ConstructedGraph, fmt: str) -> bytes:
    if fmt == "dot":
        return to_dot(graph).encode()
    if fmt == "json":
        return to_json(graph).encode()
    raise ValueError(f"unknown format: {fmt!r}")


def from_json(text: str, name: str = "imported") -> ConstructedGraph:
    """Parse and validate a graph file; raises SchemaError naming the bad field."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise SchemaError("top level: expected an object")
    for key in ("k", "vertices", "edges"):
        if key not in obj:
            raise SchemaError(f"top level: missing key {key!r}")
    for key in obj:
        if key not in ("k", "vertices", "edges"):
            raise SchemaError(f"top level: unknown key {key!r}")

    k = obj["k"]
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise SchemaError(f"k: expected a positive integer, got {k!r}")

    raw_vertices = obj["vertices"]
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise SchemaError("vertices: expected a non-empty array")
    vertices: list[PortedVertex] = []
    for i, rv in enumerate(raw_vertices):
        vertices.append(_parse_vertex(rv, k, locus=f"vertices[{i}]"))
    seen: dict[PortedVertex, int] = {}
    for i, v in enumerate(vertices):
        if v in seen:
            raise SchemaError(f"vertices[{i}]: duplicate of vertices[{seen[v]}]")
        seen[v] = i

    raw_edges = obj["edges"]
    if not isinstance(raw_edges, list):
        raise SchemaError("edges: expected an array")
    n = len(vertices)
    edges: list[Edge] = []
    seen_pairs: dict[tuple[int, int], int] = {}
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for i, re in enumerate(raw_edges):
        e = _parse_edge(re, n, locus=f"edges[{i}]")
        pair = (e.u, e.v)
        if pair in seen_pairs:
            raise SchemaError(f"edges[{i}]: duplicate of edges[{seen_pairs[pair]}]")
        seen_pairs[pair] = i
        adjacency[e.u].add(e.v)
        adjacency[e.v].add(e.u)
        edges.append(e)

    return ConstructedGraph(
        k=k,
        vertices=tuple(vertices),
        edges=tuple(edges),
        adjacency=tuple(frozenset(s) for s in adjacency),
        name=name,
    )


def _parse_vertex(rv: Any, k: int, locus: str) -> PortedVertex:
    if not isinstance(rv, dict):
        raise SchemaError(f"{locus}: expected an object")
    for key in ("label", "port", "layer"):
        if key not in rv:
            raise SchemaError(f"{locus}: missing key {key!r}")
    try:
        label = parse_label(rv["label"])
    except ValueError as exc:
        raise SchemaError(f"{locus}.label: {exc}") from exc
    port = rv["port"]
    if port not in (0, 1, 2):
        raise SchemaError(f"{locus}.port: expected 0, 1 or 2, got {port!r}")
    layer = rv["layer"]
    if not isinstance(layer, int) or isinstance(layer, bool) or not 1 <= layer <= k:
        raise SchemaError(f"{locus}.layer: expected an integer in 1..{k}, got {layer!r}")
    return PortedVertex(label, port, layer)


def _parse_edge(re: Any, n: int, locus: str) -> Edge:
    if not isinstance(re, dict):
        raise SchemaError(f"{locus}: expected an object")
    for key in ("u", "v", "kind", "color"):
        if key not in re:
            raise SchemaError(f"{locus}: missing key {key!r}")
    u, v = re["u"], re["v"]
    for side, idx in (("u", u), ("v", v)):
        if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < n:
            raise SchemaError(f"{locus}.{side}: unknown vertex index {idx!r}")
    if u == v:
        raise SchemaError(f"{locus}: loop edge at vertex {u}")
    if u > v:
        u, v = v, u
    kind = re["kind"]
    if kind not in _EDGE_KINDS:
        raise SchemaError(f"{locus}.kind: expected 'internal' or 'external', got {kind!r}")
    color = re["color"]
    if kind == "internal":
        if color is not None:
            raise SchemaError(f"{locus}.color: internal edges carry null, got {color!r}")
    elif color not in (0, 1, 2):
        raise SchemaError(f"{locus}.color: expected 0, 1 or 2, got {color!r}")
    return Edge(u, v, kind, color)
