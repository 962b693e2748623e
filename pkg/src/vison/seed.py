"""Bundled seed data: the 70-tool catalog and the fixed schema."""

from __future__ import annotations

from importlib.resources import files

from .catalog import CatalogIssue, ToolRecord, errors_only, load_records
from .schema import build_ontology, compile_schema, parse_schema
from .snapshot import Snapshot


def seed_catalog_bytes() -> bytes:
    return files("vison.data").joinpath("tools.csv").read_bytes()


def seed_schema_bytes() -> bytes:
    return files("vison.data").joinpath("schema.csv").read_bytes()


def load_seed_records() -> tuple[list[ToolRecord], list[CatalogIssue]]:
    return load_records(seed_catalog_bytes())


def build_seed_snapshot() -> Snapshot:
    records, issues = load_seed_records()
    bad = errors_only(issues)
    if bad:
        raise RuntimeError(f"bundled catalog failed validation: {bad}")
    schema = compile_schema(parse_schema(seed_schema_bytes()))
    return Snapshot(ontology=build_ontology(records, schema), records=records)
