"""Whole-ontology validation producing a deterministic violation report.

The builder API in model.py rejects most problems at mutation time; this
module re-checks everything so ontologies loaded straight from snapshot files
(where nothing was validated) get the same guarantees. Problems are report
entries, never exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import INTEGER, THING, Ontology

HIERARCHY_CYCLE = "hierarchy-cycle"
DISJOINTNESS_CONFLICT = "disjointness-conflict"
ASSERTION_CONTRADICTION = "assertion-contradiction"
DOMAIN_VIOLATION = "domain-violation"
RANGE_VIOLATION = "range-violation"
DANGLING_REFERENCE = "dangling-reference"


@dataclass(frozen=True)
class Violation:
    kind: str
    subjects: tuple[str, ...]
    message: str


@dataclass(frozen=True)
class ConsistencyReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def of_kind(self, kind: str) -> list[Violation]:
        return [v for v in self.violations if v.kind == kind]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"kind": v.kind, "subjects": list(v.subjects), "message": v.message}
                for v in self.violations
            ],
        }


def check_consistency(onto: Ontology) -> ConsistencyReport:
    violations: list[Violation] = []
    violations += _dangling(onto)
    violations += _cycles(onto)
    violations += _disjointness(onto)
    violations += _contradictions(onto)
    violations += _domain_range(onto)
    violations.sort(key=lambda v: (v.kind, v.subjects))
    return ConsistencyReport(violations=tuple(violations))


def _class_exists(onto: Ontology, cid: str) -> bool:
    return cid == THING or cid in onto.classes


def _dangling(onto: Ontology) -> list[Violation]:
    found = []

    def missing(kind: str, owner: str, ref: str, role: str) -> None:
        found.append(
            Violation(
                kind=DANGLING_REFERENCE,
                subjects=(owner, ref),
                message=f"{kind} {owner!r} references unknown {role} {ref!r}",
            )
        )

    for cdef in onto.classes.values():
        for parent in sorted(cdef.parents):
            if not _class_exists(onto, parent):
                missing("class", cdef.id, parent, "parent class")
        for other in sorted(cdef.disjoint_with):
            if not _class_exists(onto, other):
                missing("class", cdef.id, other, "disjoint class")
    for pdef in onto.properties.values():
        if pdef.domain and not _class_exists(onto, pdef.domain):
            missing("property", pdef.id, pdef.domain, "domain class")
        if pdef.range and not _class_exists(onto, pdef.range):
            missing("property", pdef.id, pdef.range, "range class")
        if pdef.super_property and pdef.super_property not in onto.properties:
            missing("property", pdef.id, pdef.super_property, "super-property")
    for ind in onto.individuals.values():
        for cid in sorted(ind.asserted_classes):
            if not _class_exists(onto, cid):
                missing("individual", ind.id, cid, "class")
        for prop, target in sorted(ind.property_assertions, key=str):
            if prop not in onto.properties:
                missing("individual", ind.id, prop, "property")
            elif isinstance(target, str) and target not in onto.individuals:
                missing("individual", ind.id, target, "assertion target")
        for prop, target in sorted(ind.negative_assertions):
            if prop not in onto.properties:
                missing("individual", ind.id, prop, "property")
            elif target not in onto.individuals:
                missing("individual", ind.id, target, "assertion target")
    return found


def _cycles(onto: Ontology) -> list[Violation]:
    """One violation per cycle in the subclass graph or super-property chain."""
    found = []
    for label, edges in (
        ("subclass", {c.id: sorted(c.parents) for c in onto.classes.values()}),
        (
            "super-property",
            {
                p.id: [p.super_property] if p.super_property else []
                for p in onto.properties.values()
            },
        ),
    ):
        for cycle in _find_cycles(edges):
            found.append(
                Violation(
                    kind=HIERARCHY_CYCLE,
                    subjects=tuple(cycle),
                    message=f"{label} cycle: {' -> '.join(cycle + (cycle[0],))}",
                )
            )
    return found


def _find_cycles(edges: dict[str, list[str]]) -> list[tuple[str, ...]]:
    """Strongly connected components of size > 1, plus self-loops.

    Iterative Tarjan so deep hierarchies cannot blow the recursion limit.
    """
    index: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    counter = 0
    cycles: list[tuple[str, ...]] = []

    for root in sorted(edges):
        if root in index:
            continue
        work = [(root, iter(edges.get(root, ())))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for succ in it:
                if succ not in edges:
                    continue
                if succ not in index:
                    index[succ] = lowlink[succ] = counter
                    counter += 1
                    stack.append(succ)
                    on_stack.add(succ)
                    work.append((succ, iter(edges.get(succ, ()))))
                    advanced = True
                    break
                if succ in on_stack:
                    lowlink[node] = min(lowlink[node], index[succ])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                if len(component) > 1 or node in edges.get(node, ()):
                    cycles.append(tuple(sorted(component)))
    cycles.sort()
    return cycles


def _disjointness(onto: Ontology) -> list[Violation]:
    pairs: set[frozenset[str]] = set()
    for group in onto.disjoint_groups:
        members = sorted(group)
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                pairs.add(frozenset((a, b)))
    found = []
    for ind in onto.individuals.values():
        try:
            closure = onto.classes_of(ind.id)
        except Exception:
            continue  # dangling memberships already reported
        for pair in pairs:
            if pair <= closure:
                a, b = sorted(pair)
                found.append(
                    Violation(
                        kind=DISJOINTNESS_CONFLICT,
                        subjects=(ind.id, a, b),
                        message=(
                            f"individual {ind.id!r} belongs to disjoint classes"
                            f" {a!r} and {b!r}"
                        ),
                    )
                )
    return found


def _contradictions(onto: Ontology) -> list[Violation]:
    found = []
    for ind in onto.individuals.values():
        both = {
            (p, t)
            for p, t in ind.property_assertions
            if isinstance(t, str) and (p, t) in ind.negative_assertions
        }
        for prop, target in sorted(both):
            found.append(
                Violation(
                    kind=ASSERTION_CONTRADICTION,
                    subjects=(ind.id, prop, target),
                    message=(
                        f"({ind.id!r}, {prop!r}, {target!r}) is asserted both"
                        " positively and negatively"
                    ),
                )
            )
    return found


def _domain_range(onto: Ontology) -> list[Violation]:
    found = []
    for ind in onto.individuals.values():
        for prop, target in sorted(ind.property_assertions, key=str):
            pdef = onto.properties.get(prop)
            if pdef is None:
                continue
            if pdef.domain and pdef.domain != THING:
                if pdef.domain not in onto.classes_of(ind.id):
                    found.append(
                        Violation(
                            kind=DOMAIN_VIOLATION,
                            subjects=(ind.id, prop),
                            message=(
                                f"subject {ind.id!r} of {prop!r} is not an instance"
                                f" of domain {pdef.domain!r}"
                            ),
                        )
                    )
            if (
                pdef.range
                and pdef.range != THING
                and pdef.kind != INTEGER
                and isinstance(target, str)
                and target in onto.individuals
            ):
                if pdef.range not in onto.classes_of(target):
                    found.append(
                        Violation(
                            kind=RANGE_VIOLATION,
                            subjects=(ind.id, prop, target),
                            message=(
                                f"target {target!r} of {prop!r} is not an instance"
                                f" of range {pdef.range!r}"
                            ),
                        )
                    )
    return found
