"""Axiom counting in the style of ontology-editor metrics panes.

Counting rules:
  * declarations: one per class, property, and individual; the implicit root
    is not a declaration.
  * SubClassOf: one per (class, parent) edge; edges to the implicit root are
    not stored, so top-level classes contribute nothing.
  * DisjointClasses: one per declared group, however many classes it spans.
  * assertions: one per distinct (subject, property, target) triple; integer-
    valued triples count as property assertions too (there is no separate
    data-assertion bucket).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .model import Ontology


@dataclass(frozen=True)
class MetricsReport:
    axiom_count: int
    logical_axiom_count: int
    declaration_axiom_count: int
    class_count: int
    property_count: int
    individual_count: int
    subclassof_count: int
    disjointclasses_count: int
    subobjectpropertyof_count: int
    objectpropertydomain_count: int
    objectpropertyrange_count: int
    classassertion_count: int
    objectpropertyassertion_count: int
    negativeobjectpropertyassertion_count: int

    def logical_parts(self) -> tuple[int, ...]:
        return (
            self.subclassof_count,
            self.disjointclasses_count,
            self.subobjectpropertyof_count,
            self.objectpropertydomain_count,
            self.objectpropertyrange_count,
            self.classassertion_count,
            self.objectpropertyassertion_count,
            self.negativeobjectpropertyassertion_count,
        )

    def is_additive(self) -> bool:
        """The three identities every report must satisfy."""
        return (
            self.axiom_count == self.logical_axiom_count + self.declaration_axiom_count
            and self.logical_axiom_count == sum(self.logical_parts())
            and self.declaration_axiom_count
            == self.class_count + self.property_count + self.individual_count
            and all(v >= 0 for v in asdict(self).values())
        )

    def to_json(self) -> dict:
        return asdict(self)


def compute_metrics(onto: Ontology) -> MetricsReport:
    subclassof = sum(len(c.parents) for c in onto.classes.values())
    disjoint = len(onto.disjoint_groups)
    subprop = sum(1 for p in onto.properties.values() if p.super_property)
    domains = sum(1 for p in onto.properties.values() if p.domain)
    ranges = sum(1 for p in onto.properties.values() if p.range)
    clsassert = sum(len(i.asserted_classes) for i in onto.individuals.values())
    propassert = sum(len(i.property_assertions) for i in onto.individuals.values())
    negassert = sum(len(i.negative_assertions) for i in onto.individuals.values())

    logical = (
        subclassof + disjoint + subprop + domains + ranges
        + clsassert + propassert + negassert
    )
    declarations = len(onto.classes) + len(onto.properties) + len(onto.individuals)
    return MetricsReport(
        axiom_count=logical + declarations,
        logical_axiom_count=logical,
        declaration_axiom_count=declarations,
        class_count=len(onto.classes),
        property_count=len(onto.properties),
        individual_count=len(onto.individuals),
        subclassof_count=subclassof,
        disjointclasses_count=disjoint,
        subobjectpropertyof_count=subprop,
        objectpropertydomain_count=domains,
        objectpropertyrange_count=ranges,
        classassertion_count=clsassert,
        objectpropertyassertion_count=propassert,
        negativeobjectpropertyassertion_count=negassert,
    )
