"""Declarative schema files and compilation of catalog records into an ontology.

A schema file is a CSV with header `kind,id,label,arg1,arg2,arg3,arg4`; the
args are interpreted per row kind:

    class      id, label, arg1=parents (";"-separated, empty means top level)
    property   id, label, arg1=object|integer, arg2=domain, arg3=range, arg4=super
    disjoint   id=group name, arg1=member classes (";"-separated)
    individual id, label, arg1=classes (";"-separated)
    assertion  id=subject, arg1=property, arg2=target, arg3=polarity (default positive)

Rows are processed top to bottom, so referenced things must be declared first.
Ids are taken literally (they may start with a digit, e.g. dimensionality
values); ids derived from catalog values go through slugify instead.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .catalog import MEDIA, ToolRecord
from .errors import CatalogFormatError
from .model import INTEGER, Ontology, slugify, valid_id

SCHEMA_HEADER = ("kind", "id", "label", "arg1", "arg2", "arg3", "arg4")

ASPECT_CLASS = {
    "Behavior": "behavior-tool",
    "Structure": "structure-tool",
    "Evolution": "evolution-tool",
    "Combined": "combined-aspect-tool",
}
ASPECT_INDIVIDUAL = {
    "Behavior": "behavior",
    "Structure": "structure",
    "Evolution": "evolution",
    "Combined": "combined",
}
# Aspects stand in for the data a tool visualizes: behavior tools read the
# runtime, structure tools the source code, evolution tools the history, and
# combined frameworks all three.
ASPECT_DATA_SOURCES = {
    "Behavior": ("runtime",),
    "Structure": ("source-code",),
    "Evolution": ("version-history",),
    "Combined": ("runtime", "source-code", "version-history"),
}

# Tools displayed on both media also get this combined-medium individual
# (slug "scs-and-i3d"), keeping the dual-display value directly queryable.
DUAL_MEDIUM_LABEL = "SCS and I3D"


@dataclass(frozen=True)
class SchemaRow:
    line: int
    kind: str
    id: str
    label: str
    args: tuple[str, str, str, str]


def parse_schema(data: bytes | str) -> list[SchemaRow]:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise CatalogFormatError("empty schema file", line=1) from None
    if tuple(header) != SCHEMA_HEADER:
        raise CatalogFormatError(
            f"bad schema header {','.join(header)!r}", line=1
        )
    rows = []
    for line_no, fields in enumerate(reader, start=2):
        if not fields or not any(f.strip() for f in fields):
            continue
        if len(fields) != len(SCHEMA_HEADER):
            raise CatalogFormatError(
                f"expected {len(SCHEMA_HEADER)} fields, found {len(fields)}",
                line=line_no,
            )
        kind, ident, label, *args = [f.strip() for f in fields]
        if kind not in ("class", "property", "disjoint", "individual", "assertion"):
            raise CatalogFormatError(f"unknown row kind {kind!r}", line=line_no)
        if not ident:
            raise CatalogFormatError("row has no id", line=line_no)
        if kind != "disjoint" and not valid_id(ident):
            raise CatalogFormatError(f"bad id {ident!r}", line=line_no)
        rows.append(
            SchemaRow(line=line_no, kind=kind, id=ident, label=label, args=tuple(args))
        )
    return rows


def _multi(cell: str) -> list[str]:
    return [part.strip() for part in cell.split(";") if part.strip()]


def compile_schema(rows: list[SchemaRow]) -> Ontology:
    """Build the fixed part of the ontology (no catalog individuals yet)."""
    onto = Ontology()
    for row in rows:
        if row.kind == "class":
            onto.declare_class(row.id, row.label or row.id, _multi(row.args[0]))
        elif row.kind == "property":
            kind, domain, range_, super_ = row.args
            onto.declare_property(
                row.id,
                row.label or row.id,
                kind=kind or "object",
                domain=domain or None,
                range=range_ or None,
                super_property=super_ or None,
            )
        elif row.kind == "disjoint":
            onto.assert_disjoint(*_multi(row.args[0]))
        elif row.kind == "individual":
            onto.declare_individual(row.id, row.label or row.id)
            for cid in _multi(row.args[0]):
                onto.assert_membership(row.id, cid)
        elif row.kind == "assertion":
            prop, target, polarity = row.args[0], row.args[1], row.args[2]
            pdef = onto.properties.get(prop)
            value: str | int = target
            if pdef is not None and pdef.kind == INTEGER:
                value = int(target)
            onto.assert_property_value(
                row.id, prop, value, polarity=polarity or "positive"
            )
    return onto


def _ensure_facet(
    onto: Ontology, class_id: str, label: str, ident: str | None = None
) -> str:
    """Materialize one facet-value individual, merging on id collision.

    Values from different dimensions can share an id (the environment "Java"
    and the concern keyword "java", or a tool whose name appears inside a
    concern); the individual is shared and simply carries every membership.
    The first declaration wins the label.
    """
    slug = ident if ident is not None else slugify(label)
    if slug not in onto.individuals:
        onto.declare_individual(slug, label)
    onto.assert_membership(slug, class_id)
    return slug


def _declare_tool(onto: Ontology, record: ToolRecord) -> str:
    """Declare the tool individual, adopting an earlier facet individual if a
    concern keyword already claimed the slug. Two tools on one slug is an
    error; record validation catches it first for same-catalog collisions."""
    tool = record.slug
    existing = onto.individuals.get(tool)
    if existing is None:
        onto.declare_individual(tool, record.name)
    else:
        if existing.asserted_classes & set(ASPECT_CLASS.values()):
            raise ValueError(f"tool slug {tool!r} is already used by another tool")
        if existing.label == existing.id:  # bare keyword token, upgrade to the name
            existing.label = record.name
    return tool


def build_ontology(records: list[ToolRecord], schema: Ontology) -> Ontology:
    """Populate a compiled schema with one tool individual per record.

    The schema ontology is not modified; the result is frozen.
    """
    onto = schema.copy()
    for record in records:
        tool = _declare_tool(onto, record)
        onto.assert_membership(tool, ASPECT_CLASS[record.aspect])
        onto.assert_property_value(tool, "lastupdate", record.year)
        onto.assert_property_value(tool, "aspectis", ASPECT_INDIVIDUAL[record.aspect])
        for source in ASPECT_DATA_SOURCES[record.aspect]:
            onto.assert_property_value(tool, "hasdatasource", source)
        for medium in sorted(record.media):
            onto.assert_property_value(
                tool, "hasmedium", _ensure_facet(onto, "medium", medium)
            )
        if record.media == frozenset(MEDIA):
            onto.assert_property_value(
                tool,
                "hasmedium",
                _ensure_facet(onto, "medium", DUAL_MEDIUM_LABEL),
            )
        for technique in sorted(record.techniques):
            onto.assert_property_value(
                tool, "usestechnique", _ensure_facet(onto, "technique", technique)
            )
        for environment in sorted(record.environments):
            onto.assert_property_value(
                tool, "runsin", _ensure_facet(onto, "environment", environment)
            )
        for evaluation in sorted(record.evaluations):
            onto.assert_property_value(
                tool, "evaluatedby", _ensure_facet(onto, "evaluation", evaluation)
            )
        for keyword in sorted(record.concern_keywords):
            # Keyword tokens are already lowercase alphanumerics; using them
            # as ids verbatim keeps the token recoverable from the assertion.
            onto.assert_property_value(
                tool,
                "addressesconcernkeyword",
                _ensure_facet(onto, "concern-keyword", keyword, ident=keyword),
            )
        if record.license:
            onto.assert_property_value(
                tool, "haslicense", _ensure_facet(onto, "license", record.license)
            )
    return onto.freeze()


def facet_values_of(onto: Ontology, tool: str) -> dict[str, object]:
    """Recover a tool's facet values from its assertions (round-trip check).

    Media come back as the two base media; the dual-medium individual is
    derived data and ignored here.
    """
    ind = onto.individuals[tool]

    def labels(prop: str) -> frozenset[str]:
        return frozenset(
            onto.individuals[t].label
            for p, t in ind.property_assertions
            if p == prop and isinstance(t, str)
        )

    media = frozenset(
        {"scs": "SCS", "i3d": "I3D"}[t]
        for p, t in ind.property_assertions
        if p == "hasmedium" and t in ("scs", "i3d")
    )
    # Keyword ids are the tokens themselves; labels can have been claimed by
    # a tool name, so recover from ids.
    keywords = frozenset(
        t
        for p, t in ind.property_assertions
        if p == "addressesconcernkeyword" and isinstance(t, str)
    )
    aspects = [
        onto.individuals[t].label
        for p, t in ind.property_assertions
        if p == "aspectis" and isinstance(t, str)
    ]
    years = [t for p, t in ind.property_assertions if p == "lastupdate"]
    return {
        "aspect": aspects[0] if aspects else None,
        "year": years[0] if years else None,
        "media": media,
        "techniques": labels("usestechnique"),
        "environments": labels("runsin"),
        "evaluations": labels("evaluatedby"),
        "concern_keywords": keywords,
        "license": next(iter(labels("haslicense")), None),
    }
