"""The graph family G_k and its edge-colored auxiliary graph R_k.

G_k has vertex set Q x {0,1,2} x {1..k}: a label in F_2^3, a port, and a layer.
The three vertices sharing a label and a layer form a small triangle (internal
edges). Vertices with distinct labels x, y are joined exactly at the common
port classify(x + y) (external edges), across any pair of layers.

R_k forgets ports: its vertices are (label, layer), every distinct-label pair
is an edge, and the edge carries color classify(x + y).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from pancert.group import ALL_LABELS, classify, label_str

PORTS: tuple[int, ...] = (0, 1, 2)


@dataclass(frozen=True, order=True)
class PortedVertex:
    label: int
    port: int
    layer: int

    def __str__(self) -> str:
        return f"{label_str(self.label)}_{self.port}^({self.layer})"


@dataclass(frozen=True)
class Edge:
    """Undirected edge, endpoints as canonical vertex indices with u < v."""

    u: int
    v: int
    kind: str  # "internal" or "external"
    color: int | None  # partition class of the label sum; None for internal


@dataclass(frozen=True)
class AuxVertex:
    label: int
    layer: int

    def __str__(self) -> str:
        return f"{label_str(self.label)}^({self.layer})"


@dataclass(frozen=True)
class ConstructedGraph:
    k: int
    vertices: tuple[PortedVertex, ...]
    edges: tuple[Edge, ...]
    adjacency: tuple[frozenset[int], ...]
    name: str = field(default="", compare=False)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def _index(self) -> dict[PortedVertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index_of(self, v: PortedVertex) -> int:
        return self._index[v]

    def __contains__(self, v: PortedVertex) -> bool:
        return v in self._index

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def min_degree(self) -> int:
        return min(self.degree(u) for u in range(self.n))


@dataclass(frozen=True)
class AuxGraph:
    k: int
    vertices: tuple[AuxVertex, ...]
    # (u, v, color) index triples with u < v
    edges: tuple[tuple[int, int, int], ...]

    @cached_property
    def _index(self) -> dict[AuxVertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index_of(self, v: AuxVertex) -> int:
        return self._index[v]

    def has_edge(self, a: AuxVertex, b: AuxVertex) -> bool:
        if a not in self._index or b not in self._index:
            raise ValueError(f"vertex not in graph: {a} / {b}")
        return a.label != b.label

    def edge_color(self, a: AuxVertex, b: AuxVertex) -> int:
        if not self.has_edge(a, b):
            raise ValueError(f"no edge between {a} and {b}")
        return classify(a.label ^ b.label)


def vertex_index(k: int, v: PortedVertex) -> int:
    """Canonical position of v in the vertex list of G_k."""
    return (v.label * 3 + v.port) * k + (v.layer - 1)


def adjacent(k: int, u: PortedVertex, v: PortedVertex) -> bool:
    """Edge rule of G_k. Internal: same label and layer, different ports.
    External: same port i, different labels with classify(sum) = i."""
    for w in (u, v):
        if not 1 <= w.layer <= k:
            raise ValueError(f"layer out of range 1..{k}: {w}")
        if w.port not in PORTS:
            raise ValueError(f"port out of range: {w}")
    if u == v:
        return False
    if u.label == v.label:
        return u.layer == v.layer and u.port != v.port
    return u.port == v.port and classify(u.label ^ v.label) == u.port


def build_graph(k: int, name: str = "") -> ConstructedGraph:
    """Materialize G_k: 24k vertices in canonical (label, port, layer) order."""
    _check_k(k)
    vertices = tuple(
        PortedVertex(x, i, r) for x in ALL_LABELS for i in PORTS for r in range(1, k + 1)
    )
    n = len(vertices)
    adjacency: list[set[int]] = [set() for _ in range(n)]
    edges: list[Edge] = []
    for a in range(n):
        for b in range(a + 1, n):
            u, v = vertices[a], vertices[b]
            if not adjacent(k, u, v):
                continue
            adjacency[a].add(b)
            adjacency[b].add(a)
            if u.label == v.label:
                edges.append(Edge(a, b, "internal", None))
            else:
                edges.append(Edge(a, b, "external", u.port))
    return ConstructedGraph(
        k=k,
        vertices=vertices,
        edges=tuple(edges),
        adjacency=tuple(frozenset(s) for s in adjacency),
        name=name or f"G_{k}",
    )


def build_aux(k: int) -> AuxGraph:
    """Materialize R_k: 8k vertices, one colored edge per distinct-label pair."""
    _check_k(k)
    vertices = tuple(AuxVertex(x, r) for x in ALL_LABELS for r in range(1, k + 1))
    edges = []
    for a in range(len(vertices)):
        for b in range(a + 1, len(vertices)):
            x, y = vertices[a].label, vertices[b].label
            if x != y:
                edges.append((a, b, classify(x ^ y)))
    return AuxGraph(k=k, vertices=vertices, edges=tuple(edges))


def layer_subgraph(graph: ConstructedGraph, r: int) -> tuple[tuple[frozenset[int], ...], list[int]]:
    """Adjacency of the induced subgraph on layer r, plus the original indices."""
    if not 1 <= r <= graph.k:
        raise ValueError(f"layer out of range 1..{graph.k}: {r}")
    ids = [i for i, v in enumerate(graph.vertices) if v.layer == r]
    remap = {g: l for l, g in enumerate(ids)}
    sub = tuple(frozenset(remap[w] for w in graph.adjacency[g] if w in remap) for g in ids)
    return sub, ids


def _check_k(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
