"""Acceptance gate: one printed pass/fail line per criterion, all exact."""

from itertools import chain

from pancert import cli
from pancert.connectivity import is_connected, layer_connectivity, vertex_connectivity
from pancert.construction import PortedVertex, build_graph
from pancert.cycles import decompose, lift, path_template, proper_cycle
from pancert.group import PARTITION, classify, verify_sumfree
from pancert.oracle import cross_check
from pancert.verify import (
    certify_vertex_pancyclic,
    no_pancyclic_edge,
    validate_certificate,
)


def _report(num: int, name: str, ok: bool) -> None:
    print(f"criterion {num} ({name}): {'PASS' if ok else 'FAIL'} [exact]")
    assert ok


def _brute_sumfree(subset: frozenset[int]) -> bool:
    return all((a ^ b) not in subset for a in subset for b in subset)


def test_criterion_1_partition_is_sumfree():
    ok = all(verify_sumfree(cls) for cls in PARTITION)
    ok = ok and sorted(chain.from_iterable(PARTITION)) == list(range(1, 8))
    for bits in range(256):
        subset = frozenset(x for x in range(8) if bits >> x & 1)
        ok = ok and verify_sumfree(subset) == _brute_sumfree(subset)
    _report(1, "sum-free partition", ok)


def test_criterion_2_order_and_size():
    ok = True
    for k in range(1, 7):
        g = build_graph(k)
        degrees = [g.degree(v) for v in range(g.n)]
        ok = ok and g.n == 24 * k
        ok = ok and len(g.edges) == 24 * k + 28 * k * k
        ok = ok and sum(degrees) == 2 * len(g.edges)
        ok = ok and sorted(set(degrees)) == [2 + 2 * k, 2 + 3 * k]
        ok = ok and degrees.count(2 + 3 * k) == 8 * k
    _report(2, "order and size", ok)


def test_criterion_3_connectivity():
    ok = True
    for k, expected in ((1, 4), (2, 6)):
        g = build_graph(k)
        report = vertex_connectivity(g)
        ok = ok and report.kappa == expected == 2 * k + 2
        ok = ok and report.kappa <= report.min_degree
        cut = frozenset(g.index_of(v) for v in report.separator)
        ok = ok and len(cut) == report.kappa
        ok = ok and not is_connected(g.adjacency, cut)
    for k in (1, 2, 3):
        g = build_graph(k)
        ok = ok and all(layer_connectivity(g, r) == 4 for r in range(1, k + 1))
    _report(3, "connectivity and layers", ok)


def test_criterion_4_no_pancyclic_edge():
    ok = True
    for k in range(1, 5):
        g = build_graph(k)
        report = no_pancyclic_edge(g)
        ok = ok and report.ok and report.pattern_ok
        ok = ok and len(report.records) == len(g.edges)
        for rec in report.records:
            if rec.kind == "internal":
                ok = ok and rec.in_triangle and not rec.in_4cycle
            else:
                ok = ok and rec.in_4cycle and not rec.in_triangle
    _report(4, "no pancyclic edge", ok)


def test_criterion_5_vertex_pancyclicity():
    ok = True
    for k in (1, 2, 3):
        g = build_graph(k)
        result = certify_vertex_pancyclic(k, graph=g)
        ok = ok and result.ok
        ok = ok and result.total == 24 * k * (24 * k - 2)
        ok = ok and len(result.certificates) == result.total
        ok = ok and all(validate_certificate(g, c) for c in result.certificates)
    _report(5, "vertex pancyclicity", ok)


def test_criterion_6_oracle_equivalence():
    ok = cross_check(1).ok and cross_check(2).ok
    _report(6, "oracle equivalence", ok)


def test_criterion_7_templates_and_lifting():
    ok = True
    for length in range(3, 9):
        t = path_template(length)
        ok = ok and len(set(t.labels)) == length and t.labels[0] == 0
        ok = ok and all(
            classify(t.labels[j] ^ t.labels[j + 1]) == t.colors[j]
            for j in range(length - 1)
        )
        ok = ok and all(t.colors[j] != t.colors[j + 1] for j in range(length - 2))
        ok = ok and t.colors[0] == 1
        ok = ok and classify(t.labels[-1]) == 2
        ok = ok and t.colors[-1] != 2
    for q in range(3, 201):
        parts = decompose(q)
        ok = ok and sum(parts) == q and len(parts) == -(-q // 8)
        ok = ok and all(3 <= p <= 8 for p in parts)
    for k in (1, 2):
        g = build_graph(k)
        for x in range(8):
            for r in range(1, k + 1):
                for q in range(3, 8 * k + 1):
                    cycle = proper_cycle(x, r, q, k)
                    ok = ok and cycle.q == q
                    ok = ok and all(
                        cycle.colors[j] != cycle.colors[(j + 1) % q] for j in range(q)
                    )
                    for i in range(3):
                        forced = i not in (cycle.colors[-1], cycle.colors[0])
                        for m in range(2 * q, 3 * q + 1):
                            if m == 2 * q and forced:
                                try:
                                    lift(cycle, i, m)
                                    ok = False
                                except ValueError:
                                    pass
                                continue
                            cert = lift(cycle, i, m)
                            ok = ok and cert.m == m
                            ok = ok and cert.target == PortedVertex(x, i, r)
                            ok = ok and validate_certificate(g, cert)
    _report(7, "templates and lifting", ok)


def test_criterion_8_deterministic_parallel_output(tmp_path):
    serial = tmp_path / "serial.jsonl"
    parallel = tmp_path / "parallel.jsonl"
    rc1 = cli.main(["certify", "--k", "1", "--workers", "1", "--out", str(serial)])
    rc2 = cli.main(["certify", "--k", "1", "--workers", "4", "--out", str(parallel)])
    ok = rc1 == 0 and rc2 == 0
    ok = ok and serial.read_bytes() == parallel.read_bytes()
    ok = ok and len(serial.read_bytes().splitlines()) == 528
    _report(8, "deterministic parallel output", ok)
