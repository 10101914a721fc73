"""Property checks: certificates, degrees, obstructions, and full certification.

Check outcomes are data, not exceptions: every checker returns a report object
whose ``ok`` reflects the verdict, so the same suite runs unchanged on graphs
where a property intentionally fails.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Iterable

from pancert.connectivity import layer_connectivity, vertex_connectivity
from pancert.construction import ConstructedGraph, PortedVertex, build_graph
from pancert.cycles import CycleCertificate, cycle_through
from pancert.group import PARTITION, verify_sumfree
from pancert.serialize import vertex_obj

CHECK_NAMES: tuple[str, ...] = (
    "sumfree",
    "degrees",
    "connectivity",
    "layers",
    "obstructions",
    "pancyclic",
)


@dataclass(frozen=True)
class ObstructionRecord:
    u: int
    v: int
    kind: str
    in_triangle: bool
    in_4cycle: bool


@dataclass(frozen=True)
class ObstructionReport:
    graph_name: str
    records: tuple[ObstructionRecord, ...]

    @property
    def violations(self) -> tuple[ObstructionRecord, ...]:
        """Edges lying in both a triangle and a 4-cycle: pancyclic candidates."""
        return tuple(r for r in self.records if r.in_triangle and r.in_4cycle)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def pattern_ok(self) -> bool:
        """Internal edges sit in triangles but never 4-cycles; external edges
        the other way around."""
        return all(
            (r.in_triangle, r.in_4cycle) == ((True, False) if r.kind == "internal" else (False, True))
            for r in self.records
        )

    def to_obj(self) -> dict[str, Any]:
        return {
            "graph": self.graph_name,
            "edges": len(self.records),
            "ok": self.ok,
            "pattern_ok": self.pattern_ok,
            "violations": [
                {"u": r.u, "v": r.v, "kind": r.kind} for r in self.violations
            ],
        }


@dataclass(frozen=True)
class CertificationResult:
    graph_name: str
    k: int
    total: int
    certificates: tuple[CycleCertificate, ...]
    failures: tuple[tuple[PortedVertex, int, str], ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_obj(self) -> dict[str, Any]:
        return {
            "graph": self.graph_name,
            "k": self.k,
            "total": self.total,
            "synthesized": len(self.certificates),
            "ok": self.ok,
            "failures": [
                {"target": vertex_obj(v), "m": m, "reason": reason}
                for v, m, reason in self.failures
            ],
        }


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    details: dict[str, Any]


@dataclass(frozen=True)
class VerificationReport:
    graph_name: str
    k: int
    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_obj(self) -> dict[str, Any]:
        return {
            "graph": self.graph_name,
            "k": self.k,
            "ok": self.ok,
            "checks": [
                {"name": r.name, "ok": r.ok, "details": r.details} for r in self.results
            ],
        }


def certificate_error(graph: ConstructedGraph, cert: CycleCertificate) -> str | None:
    """Why the certificate is invalid for this graph, or None if it is valid."""
    if cert.m < 3:
        return f"degenerate length {cert.m}"
    if len(cert.vertices) != cert.m:
        return f"length mismatch: {len(cert.vertices)} vertices for m={cert.m}"
    if len(set(cert.vertices)) != cert.m:
        return "repeated vertex"
    for v in cert.vertices:
        if v not in graph:
            return f"vertex not in graph: {v}"
    if cert.target not in cert.vertices:
        return f"target not on cycle: {cert.target}"
    idx = [graph.index_of(v) for v in cert.vertices]
    for j in range(cert.m):
        if not graph.has_edge(idx[j], idx[(j + 1) % cert.m]):
            return f"non-adjacent pair at positions {j}, {(j + 1) % cert.m}"
    return None


def validate_certificate(graph: ConstructedGraph, cert: CycleCertificate) -> bool:
    return certificate_error(graph, cert) is None


def degree_audit(graph: ConstructedGraph) -> bool:
    """Every vertex has degree 2 + k * (size of its port's class)."""
    k = graph.k
    return all(
        graph.degree(i) == 2 + k * len(PARTITION[v.port])
        for i, v in enumerate(graph.vertices)
    )


def edge_in_triangle(graph: ConstructedGraph, u: int, v: int) -> bool:
    """True iff the endpoints of edge uv share a common neighbor."""
    if not graph.has_edge(u, v):
        raise ValueError(f"not an edge: ({u}, {v})")
    return bool(graph.adjacency[u] & graph.adjacency[v])


def edge_in_4cycle(graph: ConstructedGraph, u: int, v: int) -> bool:
    """True iff edge uv lies on a simple 4-cycle u, w, w', v."""
    if not graph.has_edge(u, v):
        raise ValueError(f"not an edge: ({u}, {v})")
    for w in graph.adjacency[u]:
        if w == v:
            continue
        for w2 in graph.adjacency[v] & graph.adjacency[w]:
            if w2 != u and w2 != w:
                return True
    return False


def no_pancyclic_edge(graph: ConstructedGraph) -> ObstructionReport:
    """Per-edge triangle and 4-cycle membership; any edge with both is reported."""
    records = tuple(
        ObstructionRecord(
            u=e.u,
            v=e.v,
            kind=e.kind,
            in_triangle=edge_in_triangle(graph, e.u, e.v),
            in_4cycle=edge_in_4cycle(graph, e.u, e.v),
        )
        for e in graph.edges
    )
    return ObstructionReport(graph_name=graph.name, records=records)


def _certify_chunk(
    args: tuple[ConstructedGraph, int, list[int]],
) -> list[tuple[int, int, CycleCertificate | None, str | None]]:
    graph, k, indices = args
    rows: list[tuple[int, int, CycleCertificate | None, str | None]] = []
    for vi in indices:
        v = graph.vertices[vi]
        for m in range(3, 24 * k + 1):
            try:
                cert = cycle_through(v, m, k)
            except ValueError as exc:
                rows.append((vi, m, None, f"synthesis error: {exc}"))
                continue
            rows.append((vi, m, cert, certificate_error(graph, cert)))
    return rows


def certify_vertex_pancyclic(
    k: int, graph: ConstructedGraph | None = None, workers: int = 1
) -> CertificationResult:
    """Synthesize and validate a cycle of every length 3..24k through every vertex.

    The certificate list is ordered by (vertex index, m) whatever the worker
    count, so archives serialize identically for any ``workers``.
    """
    if graph is None:
        graph = build_graph(k)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers!r}")
    indices = list(range(graph.n))
    if workers == 1 or graph.n == 0:
        rows = _certify_chunk((graph, k, indices))
    else:
        step = -(-len(indices) // workers)
        chunks = [
            (graph, k, indices[i : i + step]) for i in range(0, len(indices), step)
        ]
        rows = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_certify_chunk, chunks):
                rows.extend(part)
    rows.sort(key=lambda row: (row[0], row[1]))
    certificates = tuple(cert for _, _, cert, _ in rows if cert is not None)
    failures = tuple(
        (graph.vertices[vi], m, reason) for vi, m, _, reason in rows if reason is not None
    )
    return CertificationResult(
        graph_name=graph.name,
        k=k,
        total=len(rows),
        certificates=certificates,
        failures=failures,
    )


def run_checks(
    k: int,
    names: Iterable[str] | None = None,
    graph: ConstructedGraph | None = None,
    workers: int = 1,
) -> VerificationReport:
    """Run the named property checks (all of them by default) in canonical order."""
    if graph is None:
        graph = build_graph(k)
    if names is None:
        selected = list(CHECK_NAMES)
    else:
        selected = list(dict.fromkeys(names))
        for name in selected:
            if name not in CHECK_NAMES:
                raise ValueError(
                    f"unknown check: {name!r} (valid: {', '.join(CHECK_NAMES)})"
                )
        selected = [name for name in CHECK_NAMES if name in selected]
    results = tuple(
        CheckResult(name, *_CHECKS[name](k, graph, workers)) for name in selected
    )
    return VerificationReport(graph_name=graph.name, k=k, results=results)


def _check_sumfree(k: int, graph: ConstructedGraph, workers: int) -> tuple[bool, dict]:
    classes_ok = [verify_sumfree(cls) for cls in PARTITION]
    members = [x for cls in PARTITION for x in cls]
    covers = sorted(members) == list(range(1, 8))
    return all(classes_ok) and covers, {
        "classes_sumfree": classes_ok,
        "partition_covers_nonzero": covers,
    }


def _check_degrees(k: int, graph: ConstructedGraph, workers: int) -> tuple[bool, dict]:
    expected = {port: 2 + k * len(PARTITION[port]) for port in (0, 1, 2)}
    return degree_audit(graph), {"expected_by_port": expected}


def _check_connectivity(k: int, graph: ConstructedGraph, workers: int) -> tuple[bool, dict]:
    report = vertex_connectivity(graph)
    expected = 2 * k + 2
    detail = report.to_obj()
    detail["expected"] = expected
    return report.kappa == expected, detail


def _check_layers(k: int, graph: ConstructedGraph, workers: int) -> tuple[bool, dict]:
    values = {r: layer_connectivity(graph, r) for r in range(1, graph.k + 1)}
    return all(v == 4 for v in values.values()), {
        "per_layer": {str(r): v for r, v in values.items()},
        "expected": 4,
    }


def _check_obstructions(k: int, graph: ConstructedGraph, workers: int) -> tuple[bool, dict]:
    report = no_pancyclic_edge(graph)
    return report.ok and report.pattern_ok, report.to_obj()


def _check_pancyclic(k: int, graph: ConstructedGraph, workers: int) -> tuple[bool, dict]:
    result = certify_vertex_pancyclic(k, graph=graph, workers=workers)
    return result.ok, result.to_obj()


_CHECKS = {
    "sumfree": _check_sumfree,
    "degrees": _check_degrees,
    "connectivity": _check_connectivity,
    "layers": _check_layers,
    "obstructions": _check_obstructions,
    "pancyclic": _check_pancyclic,
}
