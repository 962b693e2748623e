"""In-memory ontology model: classes, properties, individuals, assertions.

The ontology is built single-threaded through the declare_*/assert_* methods,
which validate preconditions eagerly (unknown references, duplicate ids,
hierarchy cycles), then frozen with `freeze()`. A frozen ontology is immutable
and safe to share across threads; deriving a changed ontology means copying,
mutating the copy, and swapping it in.

`check_consistency` (see consistency.py) revalidates everything from scratch,
which matters for ontologies loaded from untrusted snapshot files where the
mutation-time checks never ran.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    CycleError,
    DuplicateIdError,
    FrozenOntologyError,
    KindMismatchError,
    SelfDisjointnessError,
    UnknownReferenceError,
)

# Universal root class. It is implicit: never stored in Ontology.classes,
# always an ancestor of every declared class, excluded from metrics.
THING = "thing"

OBJECT = "object"
INTEGER = "integer"
PROPERTY_KINDS = (OBJECT, INTEGER)

_NON_ALNUM_RUNS = re.compile(r"[^a-z0-9]+")


def slugify(label: str) -> str:
    """Derive a stable slug from a display label.

    Lowercase, non-alphanumeric runs collapse to single hyphens. The result is
    guaranteed to be usable as a NAME in the query grammar, which requires a
    leading letter, so slugs that would start with a digit get an "x" prefix
    ("3D UML" -> "x3d-uml").
    """
    slug = _NON_ALNUM_RUNS.sub("-", label.lower()).strip("-")
    if not slug:
        raise ValueError(f"label {label!r} produces an empty slug")
    if not slug[0].isalpha():
        slug = "x" + slug
    return slug


def valid_id(identifier: str) -> bool:
    """Ids given explicitly (e.g. in schema files) may start with a digit."""
    return bool(re.fullmatch(r"[a-z0-9][a-z0-9_-]*", identifier))


@dataclass
class ClassDef:
    """A named concept. `parents` never includes the implicit root."""

    id: str
    label: str
    parents: frozenset[str] = frozenset()
    disjoint_with: set[str] = field(default_factory=set)


@dataclass
class PropertyDef:
    id: str
    label: str
    kind: str = OBJECT
    domain: str | None = None
    range: str | None = None
    super_property: str | None = None


@dataclass
class Individual:
    id: str
    label: str
    asserted_classes: set[str] = field(default_factory=set)
    # (property id, individual id or integer) for positive assertions;
    # negatives are object-valued only, so targets there are always ids.
    property_assertions: set[tuple[str, "str | int"]] = field(default_factory=set)
    negative_assertions: set[tuple[str, str]] = field(default_factory=set)

    def targets(self, prop: str) -> set["str | int"]:
        return {t for p, t in self.property_assertions if p == prop}


class Ontology:
    """Mutable while building, immutable after `freeze()`."""

    def __init__(self) -> None:
        self.classes: dict[str, ClassDef] = {}
        self.properties: dict[str, PropertyDef] = {}
        self.individuals: dict[str, Individual] = {}
        # Declared disjointness groups, in declaration order. A group of n
        # classes constrains all C(n,2) pairs but counts as one axiom.
        self.disjoint_groups: list[frozenset[str]] = []
        self.frozen = False

    # -- guards ------------------------------------------------------------

    def _mutating(self) -> None:
        if self.frozen:
            raise FrozenOntologyError("ontology is frozen; copy() it to derive a new one")

    def _require_class(self, class_id: str) -> ClassDef:
        if class_id == THING or class_id not in self.classes:
            if class_id == THING:
                raise UnknownReferenceError(
                    "the implicit root cannot be used here", THING
                )
            raise UnknownReferenceError(f"unknown class {class_id!r}", class_id)
        return self.classes[class_id]

    def _require_property(self, prop_id: str) -> PropertyDef:
        if prop_id not in self.properties:
            raise UnknownReferenceError(f"unknown property {prop_id!r}", prop_id)
        return self.properties[prop_id]

    def _require_individual(self, ind_id: str) -> Individual:
        if ind_id not in self.individuals:
            raise UnknownReferenceError(f"unknown individual {ind_id!r}", ind_id)
        return self.individuals[ind_id]

    # -- declarations ------------------------------------------------------

    def declare_class(self, class_id: str, label: str, parents=()) -> ClassDef:
        self._mutating()
        if class_id == THING:
            raise DuplicateIdError(f"{THING!r} is the implicit root class")
        if class_id in self.classes:
            raise DuplicateIdError(f"class {class_id!r} already declared")
        kept = []
        for parent in parents:
            if parent == THING:
                continue
            if parent == class_id:
                raise CycleError(f"class {class_id!r} cannot be its own parent")
            if parent not in self.classes:
                raise UnknownReferenceError(f"unknown parent class {parent!r}", parent)
            kept.append(parent)
        # Parents exist and the new class has no children yet, so no cycle
        # can form here; add_parent is where cycles get rejected.
        cdef = ClassDef(id=class_id, label=label, parents=frozenset(kept))
        self.classes[class_id] = cdef
        return cdef

    def add_parent(self, class_id: str, parent_id: str) -> ClassDef:
        """Add a subclass edge to an existing class, rejecting cycles."""
        self._mutating()
        cdef = self._require_class(class_id)
        if parent_id == THING:
            return cdef
        self._require_class(parent_id)
        if class_id == parent_id or class_id in self.ancestors(parent_id):
            raise CycleError(
                f"making {parent_id!r} a parent of {class_id!r} would create a cycle"
            )
        cdef.parents = cdef.parents | {parent_id}
        return cdef

    def assert_disjoint(self, *class_ids: str) -> frozenset[str]:
        """Declare a group of pairwise disjoint classes (two or more)."""
        self._mutating()
        if len(class_ids) < 2:
            raise SelfDisjointnessError("a disjointness group needs at least two classes")
        group = frozenset(class_ids)
        if len(group) != len(class_ids):
            raise SelfDisjointnessError("a class cannot be disjoint with itself")
        for cid in group:
            self._require_class(cid)
        if group not in self.disjoint_groups:
            self.disjoint_groups.append(group)
            for cid in group:
                self.classes[cid].disjoint_with |= group - {cid}
        return group

    def declare_property(
        self,
        prop_id: str,
        label: str,
        kind: str = OBJECT,
        domain: str | None = None,
        range: str | None = None,
        super_property: str | None = None,
    ) -> PropertyDef:
        self._mutating()
        if prop_id in self.properties:
            raise DuplicateIdError(f"property {prop_id!r} already declared")
        if kind not in PROPERTY_KINDS:
            raise KindMismatchError(f"property kind must be one of {PROPERTY_KINDS}")
        if domain is not None:
            self._require_class(domain)
        if range is not None:
            self._require_class(range)
        if super_property is not None:
            if super_property == prop_id:
                raise CycleError(f"property {prop_id!r} cannot be its own super-property")
            self._require_property(super_property)
        pdef = PropertyDef(
            id=prop_id,
            label=label,
            kind=kind,
            domain=domain,
            range=range,
            super_property=super_property,
        )
        self.properties[prop_id] = pdef
        return pdef

    def declare_individual(self, ind_id: str, label: str) -> Individual:
        self._mutating()
        if ind_id in self.individuals:
            raise DuplicateIdError(f"individual {ind_id!r} already declared")
        ind = Individual(id=ind_id, label=label)
        self.individuals[ind_id] = ind
        return ind

    # -- assertions ----------------------------------------------------------

    def assert_membership(self, ind_id: str, class_id: str) -> Individual:
        """Idempotent: re-asserting an existing membership is a no-op."""
        self._mutating()
        ind = self._require_individual(ind_id)
        self._require_class(class_id)
        ind.asserted_classes.add(class_id)
        return ind

    def assert_property_value(
        self, ind_id: str, prop_id: str, target, polarity: str = "positive"
    ) -> Individual:
        """Record a (subject, property, target) assertion.

        A positive/negative contradiction on the same triple is stored, not
        rejected; check_consistency reports it.
        """
        self._mutating()
        ind = self._require_individual(ind_id)
        prop = self._require_property(prop_id)
        if polarity not in ("positive", "negative"):
            raise ValueError(f"polarity must be positive or negative, got {polarity!r}")
        if prop.kind == INTEGER:
            if not isinstance(target, int) or isinstance(target, bool):
                raise KindMismatchError(
                    f"property {prop_id!r} takes an integer, got {target!r}"
                )
            if polarity == "negative":
                raise KindMismatchError(
                    "negative assertions apply to object-valued properties only"
                )
        else:
            if not isinstance(target, str):
                raise KindMismatchError(
                    f"property {prop_id!r} takes an individual id, got {target!r}"
                )
            self._require_individual(target)
        if polarity == "positive":
            ind.property_assertions.add((prop_id, target))
        else:
            ind.negative_assertions.add((prop_id, target))
        return ind

    # -- closure queries -----------------------------------------------------

    def ancestors(self, class_id: str) -> frozenset[str]:
        """Transitive closure of parent links, excluding the class itself.

        Always contains "thing" for declared classes; ancestors of the root
        are empty. Cycle-safe so it stays usable on ontologies loaded from
        broken snapshots.
        """
        if class_id == THING:
            return frozenset()
        self._require_class(class_id)
        seen: set[str] = set()
        frontier = list(self.classes[class_id].parents)
        while frontier:
            current = frontier.pop()
            if current in seen:
                continue
            seen.add(current)
            if current in self.classes:
                frontier.extend(self.classes[current].parents)
        seen.discard(class_id)
        seen.add(THING)
        return frozenset(seen)

    def descendants(self, class_id: str) -> frozenset[str]:
        if class_id == THING:
            return frozenset(self.classes)
        self._require_class(class_id)
        children: dict[str, set[str]] = {}
        for cdef in self.classes.values():
            for parent in cdef.parents:
                children.setdefault(parent, set()).add(cdef.id)
        seen: set[str] = set()
        frontier = list(children.get(class_id, ()))
        while frontier:
            current = frontier.pop()
            if current in seen:
                continue
            seen.add(current)
            frontier.extend(children.get(current, ()))
        seen.discard(class_id)
        return frozenset(seen)

    def direct_subclasses(self, class_id: str) -> frozenset[str]:
        if class_id == THING:
            return frozenset(c.id for c in self.classes.values() if not c.parents)
        self._require_class(class_id)
        return frozenset(
            c.id for c in self.classes.values() if class_id in c.parents
        )

    def instances_of(self, class_id: str) -> frozenset[str]:
        """All individuals asserted into the class or any of its descendants."""
        if class_id == THING:
            return frozenset(self.individuals)
        scope = self.descendants(class_id) | {class_id}
        return frozenset(
            ind.id for ind in self.individuals.values() if ind.asserted_classes & scope
        )

    def direct_instances(self, class_id: str) -> frozenset[str]:
        return frozenset(
            ind.id
            for ind in self.individuals.values()
            if class_id in ind.asserted_classes
        )

    def classes_of(self, ind_id: str) -> frozenset[str]:
        """Asserted classes plus all their ancestors (minus the root)."""
        ind = self._require_individual(ind_id)
        result: set[str] = set()
        for cid in ind.asserted_classes:
            result.add(cid)
            if cid in self.classes:
                result |= self.ancestors(cid)
        result.discard(THING)
        return frozenset(result)

    def sub_properties(self, prop_id: str) -> frozenset[str]:
        """The property itself plus everything declared below it."""
        self._require_property(prop_id)
        children: dict[str, set[str]] = {}
        for pdef in self.properties.values():
            if pdef.super_property:
                children.setdefault(pdef.super_property, set()).add(pdef.id)
        seen = {prop_id}
        frontier = list(children.get(prop_id, ()))
        while frontier:
            current = frontier.pop()
            if current in seen:
                continue
            seen.add(current)
            frontier.extend(children.get(current, ()))
        return frozenset(seen)

    # -- lifecycle -----------------------------------------------------------

    def freeze(self) -> "Ontology":
        self.frozen = True
        return self

    def copy(self) -> "Ontology":
        """Unfrozen deep copy; the rebuild half of rebuild-and-swap."""
        dup = Ontology()
        for cdef in self.classes.values():
            dup.classes[cdef.id] = ClassDef(
                id=cdef.id,
                label=cdef.label,
                parents=cdef.parents,
                disjoint_with=set(cdef.disjoint_with),
            )
        for pdef in self.properties.values():
            dup.properties[pdef.id] = PropertyDef(
                id=pdef.id,
                label=pdef.label,
                kind=pdef.kind,
                domain=pdef.domain,
                range=pdef.range,
                super_property=pdef.super_property,
            )
        for ind in self.individuals.values():
            dup.individuals[ind.id] = Individual(
                id=ind.id,
                label=ind.label,
                asserted_classes=set(ind.asserted_classes),
                property_assertions=set(ind.property_assertions),
                negative_assertions=set(ind.negative_assertions),
            )
        dup.disjoint_groups = list(self.disjoint_groups)
        return dup
