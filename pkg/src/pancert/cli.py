"""Command-line front end: build | verify | certify | oracle | export.

Every flag has an environment override with the PANCERT_ prefix (PANCERT_K,
PANCERT_CHECKS, PANCERT_OUT, PANCERT_FORMAT, PANCERT_ORACLE_GUARD,
PANCERT_WORKERS, PANCERT_SEED_GRAPH, PANCERT_SAMPLE_VERTICES,
PANCERT_SAMPLE_EDGES); explicit flags win. Exit codes: 0 all selected checks
pass, 1 a check failed (reports are still written), 2 usage or input errors.

Worker counts change wall time only: results are merged in canonical order, so
artifacts are byte-identical for any --workers value.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from pancert.construction import ConstructedGraph, build_graph
from pancert.oracle import DEFAULT_GUARD, cross_check
from pancert.serialize import certificate_line, export_bytes, from_json
from pancert.verify import CHECK_NAMES, certify_vertex_pancyclic, run_checks

ENV_PREFIX = "PANCERT_"


class UsageError(ValueError):
    """Bad flags, environment values or input files; maps to exit code 2."""


def _env(name: str) -> str | None:
    return os.environ.get(ENV_PREFIX + name)


def _env_int(name: str) -> int | None:
    raw = _env(name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}") from None


def import_graph(path: str | Path) -> ConstructedGraph:
    """Load a graph file, naming it after its origin."""
    text = Path(path).read_text(encoding="utf-8")
    return from_json(text, name=f"imported:{Path(path).name}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pancert",
        description="Build and certify the k-connected vertex-pancyclic family "
        "with no pancyclic edge.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    env_k = _env_int("K")
    env_out = _env("OUT")
    env_fmt = _env("FORMAT")
    env_seed = _env("SEED_GRAPH")
    env_workers = _env_int("WORKERS")
    env_guard = _env_int("ORACLE_GUARD")
    env_checks = _env("CHECKS")
    env_sv = _env_int("SAMPLE_VERTICES")
    env_se = _env_int("SAMPLE_EDGES")

    def add_k(p: argparse.ArgumentParser) -> None:
        p.add_argument("--k", type=int, default=env_k, help="family parameter (>= 1)")

    def add_out(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", default=env_out, help="output path")

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="fmt", default=env_fmt, help="dot or json")

    def add_seed(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--seed-graph", default=env_seed, help="import this graph file instead of building"
        )

    def add_workers(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--workers", type=int, default=env_workers or 1, help="parallel workers"
        )

    p = sub.add_parser("build", help="construct the graph and write it to a file")
    add_k(p)
    add_out(p)
    add_format(p)
    p.set_defaults(handler=_cmd_build)

    p = sub.add_parser("export", help="emit DOT or JSON for a built or imported graph")
    add_k(p)
    add_seed(p)
    add_out(p)
    add_format(p)
    p.set_defaults(handler=_cmd_export)

    p = sub.add_parser("verify", help="run property checks and write a report")
    add_k(p)
    add_seed(p)
    add_out(p)
    add_workers(p)
    p.add_argument(
        "--checks",
        default=env_checks,
        help=f"comma-separated subset of: {','.join(CHECK_NAMES)}",
    )
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("certify", help="emit one cycle certificate per vertex and length")
    add_k(p)
    add_seed(p)
    add_out(p)
    add_workers(p)
    p.set_defaults(handler=_cmd_certify)

    p = sub.add_parser("oracle", help="brute-force cross-check of cycles and obstructions")
    add_k(p)
    add_seed(p)
    add_out(p)
    p.add_argument(
        "--oracle-guard",
        type=int,
        default=env_guard if env_guard is not None else DEFAULT_GUARD,
        help=f"refuse graphs with more vertices than this (default {DEFAULT_GUARD})",
    )
    p.add_argument(
        "--sample-vertices", type=int, default=env_sv, help="check only this many vertex anchors"
    )
    p.add_argument(
        "--sample-edges", type=int, default=env_se, help="check only this many edge anchors"
    )
    p.set_defaults(handler=_cmd_oracle)

    return parser


def _require_k(args: argparse.Namespace) -> int:
    if args.k is None:
        raise UsageError("--k is required (or set PANCERT_K)")
    if args.k < 1:
        raise UsageError(f"k must be a positive integer, got {args.k}")
    return args.k


def _resolve_graph(args: argparse.Namespace) -> tuple[ConstructedGraph, int]:
    """Build G_k or import the seed graph; returns the graph and effective k."""
    seed = getattr(args, "seed_graph", None)
    if seed is not None:
        graph = import_graph(seed)
        if args.k is not None and args.k != graph.k:
            raise UsageError(f"--k {args.k} disagrees with seed graph k={graph.k}")
        return graph, graph.k
    return build_graph(_require_k(args)), args.k


def _resolve_format(args: argparse.Namespace, default: str) -> str:
    fmt = args.fmt if args.fmt is not None else default
    if fmt not in ("dot", "json"):
        raise UsageError(f"unknown format: {fmt!r} (expected dot or json)")
    return fmt


def _resolve_workers(args: argparse.Namespace) -> int:
    if args.workers < 1:
        raise UsageError(f"workers must be >= 1, got {args.workers}")
    return args.workers


def _parse_checks(raw: str | None) -> list[str] | None:
    if raw is None:
        return None
    names = [part.strip() for part in raw.split(",") if part.strip()]
    if not names:
        raise UsageError("empty --checks selection")
    for name in names:
        if name not in CHECK_NAMES:
            raise UsageError(f"unknown check: {name!r} (valid: {', '.join(CHECK_NAMES)})")
    return names


def _spread(total: int, count: int | None) -> list[int] | None:
    """Evenly spaced sample of list indices; None means take everything."""
    if count is None or count >= total:
        return None
    if count < 1:
        raise UsageError(f"sample size must be >= 1, got {count}")
    return sorted({(i * total) // count for i in range(count)})


def _write_bytes(path: str, data: bytes) -> None:
    Path(path).write_bytes(data)
    print(f"wrote {path}")


def _cmd_build(args: argparse.Namespace) -> int:
    k = _require_k(args)
    fmt = _resolve_format(args, "json")
    graph = build_graph(k)
    out = args.out or f"G_{k}.{fmt}"
    _write_bytes(out, export_bytes(graph, fmt))
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    graph, _ = _resolve_graph(args)
    fmt = _resolve_format(args, "dot")
    data = export_bytes(graph, fmt)
    if args.out:
        _write_bytes(args.out, data)
    else:
        sys.stdout.write(data.decode())
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    graph, k = _resolve_graph(args)
    names = _parse_checks(args.checks)
    report = run_checks(k, names=names, graph=graph, workers=_resolve_workers(args))
    for result in report.results:
        print(f"check {result.name}: {'pass' if result.ok else 'FAIL'}")
    if args.out:
        _write_bytes(args.out, _report_bytes(report.to_obj()))
    print(f"verify {graph.name}: {'pass' if report.ok else 'FAIL'}")
    return 0 if report.ok else 1


def _cmd_certify(args: argparse.Namespace) -> int:
    graph, k = _resolve_graph(args)
    result = certify_vertex_pancyclic(k, graph=graph, workers=_resolve_workers(args))
    out = args.out or f"certificates_{graph.name}.jsonl"
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        for cert in result.certificates:
            fh.write(certificate_line(cert) + "\n")
    print(f"wrote {out}")
    summary = result.to_obj()
    del summary["failures"]  # keep the stdout summary small; failures go in reports
    summary["archive"] = out
    print(json.dumps(summary, sort_keys=True))
    if not result.ok:
        for target, m, reason in result.failures[:10]:
            print(f"failure: {target} m={m}: {reason}", file=sys.stderr)
    return 0 if result.ok else 1


def _cmd_oracle(args: argparse.Namespace) -> int:
    graph, k = _resolve_graph(args)
    report = cross_check(
        k,
        graph=graph,
        guard=args.oracle_guard,
        vertex_sample=_spread(graph.n, args.sample_vertices),
        edge_sample=_spread(len(graph.edges), args.sample_edges),
    )
    if args.out:
        _write_bytes(args.out, _report_bytes(report.to_obj()))
    print(
        f"oracle cross-check {graph.name}: {'ok' if report.ok else 'FAIL'} "
        f"({len(report.vertex_profiles)} vertex anchors, "
        f"{len(report.edge_profiles)} edge anchors)"
    )
    if not report.ok:
        for line in report.mismatches[:10]:
            print(f"mismatch: {line}", file=sys.stderr)
    return 0 if report.ok else 1


def _report_bytes(obj: dict) -> bytes:
    return (json.dumps(obj, indent=2, sort_keys=True) + "\n").encode()


def main(argv: list[str] | None = None) -> int:
    try:
        parser = _build_parser()
        args = parser.parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
