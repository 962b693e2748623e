"""Command-line interface.

    vison ingest [--catalog F] [--schema F] --snapshot OUT
    vison query "EXPR" --snapshot S [--format json|table]
    vison facets|metrics|check|export-graph|export-sankey --snapshot S
    vison serve --snapshot S [--bind HOST:PORT]

The snapshot path falls back to the VISON_SNAPSHOT environment variable.
Exit codes: 0 success, 1 validation/query errors, 2 I/O and usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import seed
from .catalog import errors_only, load_records
from .consistency import check_consistency
from .errors import (
    QuerySyntaxError,
    SnapshotError,
    TypeMismatchError,
    UnknownReferenceError,
    VisonError,
)
from .exports import export_graph, export_sankey, facet_inventory
from .metrics import compute_metrics
from .queries import QueryResult, parse_query, evaluate
from .schema import build_ontology, compile_schema, parse_schema
from .snapshot import Snapshot, load, save

ENV_SNAPSHOT = "VISON_SNAPSHOT"
ENV_BIND = "VISON_BIND"
DEFAULT_BIND = "127.0.0.1:8470"


def _emit(payload: dict, fmt: str, table: str | None = None) -> None:
    if fmt == "json" or table is None:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(table)


def _load_snapshot(args) -> Snapshot:
    path = args.snapshot or os.environ.get(ENV_SNAPSHOT)
    if not path:
        raise SnapshotError("no snapshot given (use --snapshot or VISON_SNAPSHOT)")
    return load(path)


def query_payload(snap: Snapshot, result: QueryResult) -> dict:
    """Shared by the CLI and the HTTP API so both answer identically."""
    rows = []
    for slug in result.matches:
        if slug in snap.by_slug:
            record = snap.by_slug[slug]
            rows.append(
                {
                    "slug": slug,
                    "name": record.name,
                    "year": record.year,
                    "aspect": record.aspect,
                    "media": sorted(record.media),
                    "url": record.url,
                }
            )
        else:
            ind = snap.ontology.individuals[slug]
            rows.append({"slug": slug, "name": ind.label})
    return {
        "query": result.expression,
        "universe_size": result.universe_size,
        "count": len(result.matches),
        "matches": rows,
    }


def _query_table(payload: dict) -> str:
    lines = [f"query: {payload['query']}", f"matches: {payload['count']}"]
    for row in payload["matches"]:
        year = row.get("year", "")
        aspect = row.get("aspect", "")
        media = "/".join(row.get("media", []))
        url = row.get("url", "")
        lines.append(f"  {row['name']:<28} {year:<5} {aspect:<10} {media:<8} {url}")
    return "\n".join(lines)


# -- subcommands -----------------------------------------------------------------

def cmd_ingest(args) -> int:
    catalog_bytes = (
        Path(args.catalog).read_bytes() if args.catalog else seed.seed_catalog_bytes()
    )
    schema_bytes = (
        Path(args.schema).read_bytes() if args.schema else seed.seed_schema_bytes()
    )
    records, issues = load_records(catalog_bytes)
    for issue in issues:
        print(f"{issue.severity}: row {issue.row}: {issue.message}", file=sys.stderr)
    if errors_only(issues):
        print(f"ingest failed: {len(errors_only(issues))} error(s)", file=sys.stderr)
        return 1
    onto = build_ontology(records, compile_schema(parse_schema(schema_bytes)))
    report = check_consistency(onto)
    if not report.ok:
        for violation in report.violations:
            print(f"error: {violation.kind}: {violation.message}", file=sys.stderr)
        return 1
    snap = Snapshot(ontology=onto, records=records)
    out = args.snapshot or os.environ.get(ENV_SNAPSHOT)
    if not out:
        print("ingest: no --snapshot output path given", file=sys.stderr)
        return 2
    save(snap, out)
    metrics = compute_metrics(onto)
    print(f"tools: {len(records)}")
    print(f"classes: {metrics.class_count}")
    print(f"individuals: {metrics.individual_count}")
    print(f"axioms: {metrics.axiom_count}")
    print(f"snapshot: {out}")
    return 0


def cmd_query(args) -> int:
    snap = _load_snapshot(args)
    try:
        expr = parse_query(args.expression)
        result = evaluate(expr, snap.ontology)
    except QuerySyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        print(f"  {args.expression}", file=sys.stderr)
        print(f"  {' ' * exc.position}^", file=sys.stderr)
        return 1
    except (UnknownReferenceError, TypeMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    payload = query_payload(snap, result)
    _emit(payload, args.format, _query_table(payload))
    return 0


def cmd_facets(args) -> int:
    snap = _load_snapshot(args)
    payload = facet_inventory(snap.records)
    lines = []
    for dimension, values in payload.items():
        lines.append(f"{dimension}:")
        for entry in values:
            lines.append(f"  {entry['value']:<28} {entry['count']}")
    _emit(payload, args.format, "\n".join(lines))
    return 0


def cmd_metrics(args) -> int:
    snap = _load_snapshot(args)
    payload = compute_metrics(snap.ontology).to_json()
    lines = [f"{key}: {value}" for key, value in payload.items()]
    _emit(payload, args.format, "\n".join(lines))
    return 0


def cmd_check(args) -> int:
    snap = _load_snapshot(args)
    report = check_consistency(snap.ontology)
    _emit(
        report.to_json(),
        args.format,
        "consistent"
        if report.ok
        else "\n".join(f"{v.kind}: {v.message}" for v in report.violations),
    )
    return 0 if report.ok else 1


def cmd_export_graph(args) -> int:
    snap = _load_snapshot(args)
    try:
        graph = export_graph(snap.ontology, root=args.root, depth=args.depth)
    except UnknownReferenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(graph.to_json(), "json")
    return 0


def cmd_export_sankey(args) -> int:
    snap = _load_snapshot(args)
    _emit(export_sankey(snap.records).to_json(), "json")
    return 0


def cmd_serve(args) -> int:
    from .server import serve

    snap_path = args.snapshot or os.environ.get(ENV_SNAPSHOT)
    if not snap_path:
        print("serve: no snapshot given", file=sys.stderr)
        return 2
    bind = args.bind or os.environ.get(ENV_BIND, DEFAULT_BIND)
    host, _, port_text = bind.rpartition(":")
    try:
        port = int(port_text)
    except ValueError:
        print(f"serve: bad bind address {bind!r}", file=sys.stderr)
        return 2
    try:
        serve(snap_path, host or "127.0.0.1", port)
    except OSError as exc:
        print(f"serve: cannot bind {bind}: {exc}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vison",
        description="Discover software visualization tools through an ontology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--snapshot", help=f"snapshot file (or ${ENV_SNAPSHOT})")
        p.add_argument(
            "--format", choices=("json", "table"), default="table",
            help="output format (default: table)",
        )

    p = sub.add_parser("ingest", help="compile a catalog + schema into a snapshot")
    p.add_argument("--catalog", help="catalog CSV (default: bundled 70-tool seed)")
    p.add_argument("--schema", help="schema CSV (default: bundled schema)")
    common(p)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("query", help="evaluate a class expression")
    p.add_argument("expression")
    common(p)
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("facets", help="facet inventory with tool counts")
    common(p)
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("metrics", help="axiom and declaration counts")
    common(p)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("check", help="consistency report")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("export-graph", help="concept/instance neighborhood as JSON")
    p.add_argument("--root", default="thing")
    p.add_argument("--depth", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_export_graph)

    p = sub.add_parser("export-sankey", help="year/aspect/evaluation/tool flows")
    common(p)
    p.set_defaults(func=cmd_export_sankey)

    p = sub.add_parser("serve", help="run the read-only HTTP JSON API")
    p.add_argument("--bind", help=f"host:port (default {DEFAULT_BIND}, or $VISON_BIND)")
    common(p)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SnapshotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VisonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
