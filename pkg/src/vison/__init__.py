"""VISON: a knowledge base and discovery service for software visualization tools."""

from .catalog import CatalogIssue, ToolRecord
from .consistency import ConsistencyReport, Violation, check_consistency
from .metrics import MetricsReport, compute_metrics
from .model import Individual, ClassDef, Ontology, PropertyDef, slugify
from .queries import QueryResult, evaluate, parse_query, print_expression, run_query
from .schema import build_ontology, compile_schema, parse_schema
from .seed import build_seed_snapshot, load_seed_records
from .snapshot import Snapshot

__version__ = "0.1.0"

__all__ = [
    "CatalogIssue",
    "ClassDef",
    "ConsistencyReport",
    "Individual",
    "MetricsReport",
    "Ontology",
    "PropertyDef",
    "QueryResult",
    "Snapshot",
    "ToolRecord",
    "Violation",
    "build_ontology",
    "build_seed_snapshot",
    "check_consistency",
    "compile_schema",
    "compute_metrics",
    "evaluate",
    "load_seed_records",
    "parse_query",
    "parse_schema",
    "print_expression",
    "run_query",
    "slugify",
]
