"""Exact vertex connectivity via max-flow with unit vertex capacities.

Each vertex v is split into v_in and v_out joined by a unit-capacity arc;
every edge becomes a pair of uncapped arcs between the opposite halves. The
max-flow between non-adjacent s and t then equals the minimum number of other
vertices whose deletion separates them, and the vertices cut by the residual
reachability boundary form a minimum separating set.

Global connectivity sweeps one minimum-degree vertex v: min cuts from v to all
its non-neighbors, plus min cuts between non-adjacent pairs inside N(v). Any
minimum separator either misses v (caught by the first family) or contains v,
in which case v has neighbors in two components of the remainder (caught by
the second).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Sequence

from pancert.construction import ConstructedGraph, PortedVertex, layer_subgraph
from pancert.serialize import vertex_obj

Adjacency = Sequence[frozenset[int]]


@dataclass(frozen=True)
class ConnectivityReport:
    graph_name: str
    kappa: int
    # None exactly for complete graphs, which have no separating set
    separator: tuple[PortedVertex, ...] | None
    min_degree: int

    def to_obj(self) -> dict[str, Any]:
        return {
            "graph": self.graph_name,
            "kappa": self.kappa,
            "separator": None
            if self.separator is None
            else [vertex_obj(v) for v in self.separator],
            "min_degree": self.min_degree,
        }


def min_vertex_cut(adjacency: Adjacency, s: int, t: int) -> list[int]:
    """Minimum set of vertices separating non-adjacent s from t."""
    n = len(adjacency)
    if t in adjacency[s] or s == t:
        raise ValueError("endpoints must be distinct and non-adjacent")
    big = n + 1  # effectively infinite for unit vertex capacities
    cap: dict[tuple[int, int], int] = {}
    nbr: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(u: int, v: int, c: int) -> None:
        cap[(u, v)] = c
        cap.setdefault((v, u), 0)
        nbr[u].append(v)
        nbr[v].append(u)

    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u in range(n):
        for v in adjacency[u]:
            arc(2 * u + 1, 2 * v, big)

    src, snk = 2 * s + 1, 2 * t
    while True:
        parent: dict[int, int | None] = {src: None}
        queue = deque([src])
        while queue and snk not in parent:
            u = queue.popleft()
            for v in nbr[u]:
                if v not in parent and cap[(u, v)] > 0:
                    parent[v] = u
                    queue.append(v)
        if snk not in parent:
            break
        v = snk  # augment by one unit along the BFS path
        while parent[v] is not None:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u

    seen = {src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in nbr[u]:
            if v not in seen and cap[(u, v)] > 0:
                seen.add(v)
                queue.append(v)
    # cut vertices: in-half reachable, out-half not (their unit arc is saturated)
    return [v for v in range(n) if 2 * v in seen and 2 * v + 1 not in seen]


def is_connected(adjacency: Adjacency, removed: frozenset[int] = frozenset()) -> bool:
    n = len(adjacency)
    alive = [v for v in range(n) if v not in removed]
    if not alive:
        return True
    seen = {alive[0]}
    queue = deque([alive[0]])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if v not in removed and v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == len(alive)


def connectivity_of(adjacency: Adjacency) -> tuple[int, tuple[int, ...] | None]:
    """Exact connectivity with a deletion-verified minimum separator.

    Returns (kappa, separator indices); the separator is None exactly when the
    graph is complete, and empty exactly when the graph is disconnected.
    """
    n = len(adjacency)
    if n < 2:
        raise ValueError("connectivity needs at least 2 vertices")
    if not is_connected(adjacency):
        return 0, ()
    if all(len(adjacency[v]) == n - 1 for v in range(n)):
        return n - 1, None

    v = min(range(n), key=lambda u: len(adjacency[u]))
    best: list[int] | None = None
    for u in range(n):
        if u != v and u not in adjacency[v]:
            cut = min_vertex_cut(adjacency, v, u)
            if best is None or len(cut) < len(best):
                best = cut
    for x, y in combinations(sorted(adjacency[v]), 2):
        if y not in adjacency[x]:
            cut = min_vertex_cut(adjacency, x, y)
            if best is None or len(cut) < len(best):
                best = cut
    assert best is not None  # non-complete graphs always yield candidates
    if is_connected(adjacency, frozenset(best)):
        raise RuntimeError(f"separator {best} does not disconnect the graph")
    return len(best), tuple(sorted(best))


def vertex_connectivity(graph: ConstructedGraph) -> ConnectivityReport:
    """Connectivity report for a constructed graph, witness included."""
    kappa, cut = connectivity_of(graph.adjacency)
    min_deg = graph.min_degree()
    if kappa > min_deg:
        raise RuntimeError(f"kappa {kappa} exceeds minimum degree {min_deg}")
    separator = None if cut is None else tuple(graph.vertices[i] for i in cut)
    return ConnectivityReport(
        graph_name=graph.name, kappa=kappa, separator=separator, min_degree=min_deg
    )


def layer_connectivity(graph: ConstructedGraph, r: int) -> int:
    """Exact connectivity of the induced subgraph on layer r."""
    sub, _ = layer_subgraph(graph, r)
    kappa, _ = connectivity_of(sub)
    return kappa
