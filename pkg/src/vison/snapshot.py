"""Self-contained snapshot files: schema + individuals + catalog records.

A snapshot is one JSON document, sorted and separator-stable so identical
inputs produce byte-identical files. Loading does not revalidate; run the
consistency checker on anything you did not write yourself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .catalog import ToolRecord, record_from_json
from .errors import SnapshotError
from .model import ClassDef, Individual, Ontology, PropertyDef

FORMAT_TAG = "vison-snapshot/1"


@dataclass
class Snapshot:
    ontology: Ontology
    records: list[ToolRecord] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.by_slug = {record.slug: record for record in self.records}

    def tool_json(self, slug: str) -> dict:
        return self.by_slug[slug].to_json()


def _assertion_json(pair: tuple[str, "str | int"]) -> list:
    prop, target = pair
    return [prop, target]


def dumps(snapshot: Snapshot) -> str:
    onto = snapshot.ontology
    doc = {
        "format": FORMAT_TAG,
        "schema": {
            "classes": [
                {
                    "id": c.id,
                    "label": c.label,
                    "parents": sorted(c.parents),
                    "disjoint_with": sorted(c.disjoint_with),
                }
                for c in sorted(onto.classes.values(), key=lambda c: c.id)
            ],
            "properties": [
                {
                    "id": p.id,
                    "label": p.label,
                    "kind": p.kind,
                    "domain": p.domain,
                    "range": p.range,
                    "super_property": p.super_property,
                }
                for p in sorted(onto.properties.values(), key=lambda p: p.id)
            ],
            "disjoint_groups": sorted(sorted(g) for g in onto.disjoint_groups),
        },
        "individuals": [
            {
                "id": i.id,
                "label": i.label,
                "classes": sorted(i.asserted_classes),
                "assertions": sorted(
                    (_assertion_json(a) for a in i.property_assertions), key=str
                ),
                "negative_assertions": sorted(
                    _assertion_json(a) for a in i.negative_assertions
                ),
            }
            for i in sorted(onto.individuals.values(), key=lambda i: i.id)
        ],
        "tools": [r.to_json() for r in snapshot.records],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str | bytes) -> Snapshot:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SnapshotError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_TAG:
        raise SnapshotError(f"unsupported snapshot format {doc.get('format')!r}")
    onto = Ontology()
    schema = doc.get("schema", {})
    for c in schema.get("classes", []):
        onto.classes[c["id"]] = ClassDef(
            id=c["id"],
            label=c["label"],
            parents=frozenset(c["parents"]),
            disjoint_with=set(c.get("disjoint_with", [])),
        )
    for p in schema.get("properties", []):
        onto.properties[p["id"]] = PropertyDef(
            id=p["id"],
            label=p["label"],
            kind=p["kind"],
            domain=p.get("domain"),
            range=p.get("range"),
            super_property=p.get("super_property"),
        )
    onto.disjoint_groups = [frozenset(g) for g in schema.get("disjoint_groups", [])]
    for i in doc.get("individuals", []):
        onto.individuals[i["id"]] = Individual(
            id=i["id"],
            label=i["label"],
            asserted_classes=set(i["classes"]),
            property_assertions={(p, t) for p, t in i["assertions"]},
            negative_assertions={(p, t) for p, t in i.get("negative_assertions", [])},
        )
    onto.freeze()
    records = [record_from_json(r) for r in doc.get("tools", [])]
    return Snapshot(ontology=onto, records=records)


def save(snapshot: Snapshot, path: str | Path) -> None:
    Path(path).write_text(dumps(snapshot), encoding="utf-8")


def load(path: str | Path) -> Snapshot:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SnapshotError(f"cannot read snapshot {path}: {exc}") from None
    return loads(text)
