"""Independent brute-force ground truth for cycle lengths on small graphs.

Shares no code with the constructive synthesis: achievability of each length
is decided by exhaustive depth-first search over simple paths, one target
length at a time, with bitmask visited sets and a breadth-first-distance lower
bound for pruning. The prune is sound (distances in the full graph never
exceed distances avoiding visited vertices), so a failed search is a proof of
absence, and neighbor order is canonical ascending, so results do not depend
on construction order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any, Iterable

from pancert.construction import ConstructedGraph, PortedVertex, build_graph
from pancert.cycles import CycleCertificate, cycle_through
from pancert.serialize import vertex_obj
from pancert.verify import certificate_error, edge_in_4cycle, edge_in_triangle

DEFAULT_GUARD = 60


class OracleGuardError(ValueError):
    """The instance exceeds the exhaustive-search guard."""


@dataclass(frozen=True)
class CycleLengthProfile:
    kind: str  # "vertex" or "edge"
    anchor: tuple[PortedVertex, ...]
    achievable: frozenset[int]
    max_m: int

    def to_obj(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "anchor": [vertex_obj(v) for v in self.anchor],
            "max_m": self.max_m,
            "achievable": sorted(self.achievable),
        }


@dataclass(frozen=True)
class OracleReport:
    graph_name: str
    k: int
    vertex_profiles: tuple[CycleLengthProfile, ...]
    edge_profiles: tuple[CycleLengthProfile, ...]
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_obj(self) -> dict[str, Any]:
        return {
            "graph": self.graph_name,
            "k": self.k,
            "ok": self.ok,
            "mismatches": list(self.mismatches),
            "vertex_profiles": [p.to_obj() for p in self.vertex_profiles],
            "edge_profiles": [p.to_obj() for p in self.edge_profiles],
        }


def _masks(graph: ConstructedGraph) -> list[int]:
    return [sum(1 << w for w in nbrs) for nbrs in graph.adjacency]


def _bfs_dist(masks: list[int], src: int) -> list[int]:
    n = len(masks)
    dist = [n + 1] * n  # n + 1 marks unreachable
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        m = masks[u]
        while m:
            bit = m & -m
            w = bit.bit_length() - 1
            m ^= bit
            if dist[w] > dist[u] + 1:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _exists_cycle(masks: list[int], home: int, dist: list[int], start: int, depth: int, used: int, length: int) -> bool:
    """Is there a simple path of exactly ``length`` vertices extending the
    current one and closing at ``home``? ``depth`` counts used path vertices."""

    def dfs(w: int, depth: int, used: int) -> bool:
        if depth == length:
            return masks[w] >> home & 1 == 1
        limit = length - depth  # remaining edges before the closing one
        m = masks[w] & ~used
        while m:
            bit = m & -m
            u = bit.bit_length() - 1
            m ^= bit
            if dist[u] <= limit and dfs(u, depth + 1, used | bit):
                return True
        return False

    return dfs(start, depth, used)


def _guard_check(graph: ConstructedGraph, guard: int) -> None:
    if graph.n > guard:
        raise OracleGuardError(
            f"instance too large for oracle: {graph.n} vertices > guard {guard}"
        )


def _resolve_max_m(graph: ConstructedGraph, max_m: int | None) -> int:
    if max_m is None:
        return graph.n
    if not isinstance(max_m, int) or isinstance(max_m, bool) or max_m > graph.n:
        raise ValueError(f"max_m must be an integer <= {graph.n}, got {max_m!r}")
    return max_m


def lengths_through_vertex(
    graph: ConstructedGraph, v: int, max_m: int | None = None, guard: int = DEFAULT_GUARD
) -> CycleLengthProfile:
    """Exact set of lengths m <= max_m of simple cycles through vertex v."""
    _guard_check(graph, guard)
    if not 0 <= v < graph.n:
        raise ValueError(f"vertex index out of range: {v!r}")
    max_m = _resolve_max_m(graph, max_m)
    masks = _masks(graph)
    dist = _bfs_dist(masks, v)
    achievable = frozenset(
        L for L in range(3, max_m + 1) if _exists_cycle(masks, v, dist, v, 1, 1 << v, L)
    )
    return CycleLengthProfile(
        kind="vertex", anchor=(graph.vertices[v],), achievable=achievable, max_m=max_m
    )


def lengths_through_edge(
    graph: ConstructedGraph, u: int, v: int, max_m: int | None = None, guard: int = DEFAULT_GUARD
) -> CycleLengthProfile:
    """Exact set of lengths m <= max_m of simple cycles containing edge uv."""
    _guard_check(graph, guard)
    if not graph.has_edge(u, v):
        raise ValueError(f"not an edge: ({u}, {v})")
    max_m = _resolve_max_m(graph, max_m)
    masks = _masks(graph)
    dist = _bfs_dist(masks, u)
    achievable = frozenset(
        L
        for L in range(3, max_m + 1)
        if _exists_cycle(masks, u, dist, v, 2, (1 << u) | (1 << v), L)
    )
    return CycleLengthProfile(
        kind="edge",
        anchor=(graph.vertices[u], graph.vertices[v]),
        achievable=achievable,
        max_m=max_m,
    )


def cross_check(
    k: int,
    graph: ConstructedGraph | None = None,
    guard: int = DEFAULT_GUARD,
    vertex_sample: Iterable[int] | None = None,
    edge_sample: Iterable[int] | None = None,
    certificates: Iterable[CycleCertificate] | None = None,
) -> OracleReport:
    """Compare oracle profiles against the synthesized cycles and obstruction checks.

    Vertex anchors must achieve every length 3..24k; no edge may achieve both
    3 and 4; triangle and 4-cycle membership must agree with the oracle; and
    every certificate (synthesized here unless injected) must validate and
    claim an oracle-achievable length. Samples are vertex indices and edge
    list indices; by default everything is checked.
    """
    if graph is None:
        graph = build_graph(k)
    _guard_check(graph, guard)
    mismatches: list[str] = []

    expected = frozenset(range(3, 24 * k + 1))
    max_m = min(graph.n, 24 * k)
    vertex_ids = sorted(vertex_sample) if vertex_sample is not None else range(graph.n)
    profiles: dict[int, CycleLengthProfile] = {}
    for vi in vertex_ids:
        profiles[vi] = lengths_through_vertex(graph, vi, max_m=max_m, guard=guard)
        if profiles[vi].achievable != expected:
            missing = sorted(expected - profiles[vi].achievable)
            extra = sorted(profiles[vi].achievable - expected)
            mismatches.append(
                f"vertex {graph.vertices[vi]}: achievable set is not 3..{24 * k}"
                f" (missing {missing}, extra {extra})"
            )

    if certificates is None:
        generated: list[CycleCertificate] = []
        for vi in vertex_ids:
            v = graph.vertices[vi]
            for m in range(3, 24 * k + 1):
                try:
                    generated.append(cycle_through(v, m, k))
                except ValueError as exc:
                    mismatches.append(f"synthesis failed for {v}, m={m}: {exc}")
        certificates = generated
    for cert in certificates:
        reason = certificate_error(graph, cert)
        if reason is not None:
            mismatches.append(
                f"certificate for {cert.target}, m={cert.m} is invalid: {reason}"
            )
            continue
        vi = graph.index_of(cert.target)
        if vi not in profiles:
            profiles[vi] = lengths_through_vertex(graph, vi, max_m=max_m, guard=guard)
        if cert.m not in profiles[vi].achievable:
            mismatches.append(
                f"certificate length {cert.m} at {cert.target} is not oracle-achievable"
            )

    edge_ids = sorted(edge_sample) if edge_sample is not None else range(len(graph.edges))
    edge_profiles: list[CycleLengthProfile] = []
    edge_cap = min(4, graph.n)
    for ei in edge_ids:
        e = graph.edges[ei]
        profile = lengths_through_edge(graph, e.u, e.v, max_m=edge_cap, guard=guard)
        edge_profiles.append(profile)
        pair = f"({graph.vertices[e.u]}, {graph.vertices[e.v]})"
        if {3, 4} <= profile.achievable:
            mismatches.append(f"edge {pair} achieves both 3 and 4")
        if edge_in_triangle(graph, e.u, e.v) != (3 in profile.achievable):
            mismatches.append(f"triangle check disagrees with oracle at edge {pair}")
        if edge_in_4cycle(graph, e.u, e.v) != (4 in profile.achievable):
            mismatches.append(f"4-cycle check disagrees with oracle at edge {pair}")

    return OracleReport(
        graph_name=graph.name,
        k=k,
        vertex_profiles=tuple(profiles[vi] for vi in sorted(profiles)),
        edge_profiles=tuple(edge_profiles),
        mismatches=tuple(mismatches),
    )
