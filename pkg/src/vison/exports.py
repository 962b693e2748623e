"""Exploration exports: concept graph, classification Sankey, facet inventory."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .catalog import ToolRecord
from .errors import UnknownReferenceError
from .model import THING, Ontology, slugify

SUBCLASS = "subclass"
INSTANCE = "instance"
PROPERTY = "property"


@dataclass(frozen=True)
class GraphNode:
    id: str
    label: str
    kind: str  # "class" | "individual"


@dataclass(frozen=True)
class GraphEdge:
    source: str
    target: str
    kind: str  # SUBCLASS | INSTANCE | PROPERTY


@dataclass(frozen=True)
class GraphExport:
    root: str
    depth: int
    nodes: tuple[GraphNode, ...]
    edges: tuple[GraphEdge, ...]

    def to_json(self) -> dict:
        return {
            "root": self.root,
            "depth": self.depth,
            "nodes": [
                {"id": n.id, "label": n.label, "kind": n.kind} for n in self.nodes
            ],
            "edges": [
                {"from": e.source, "to": e.target, "kind": e.kind} for e in self.edges
            ],
        }


def class_node_id(cid: str) -> str:
    return f"class:{cid}"


def individual_node_id(iid: str) -> str:
    return f"ind:{iid}"


def export_graph(onto: Ontology, root: str = THING, depth: int = 1) -> GraphExport:
    """Breadth-limited neighborhood of a class.

    Expansion goes downward: classes reach their direct subclasses and direct
    instances, individuals reach the targets of their positive object
    assertions. Subclass edges point child -> parent, instance edges
    individual -> class, matching the exploration view where specializations
    hang off concepts.

    Node ids carry a "class:"/"ind:" prefix: classes and individuals live in
    separate namespaces and can share a bare id (the concept "aspect" vs. the
    concern keyword "aspect"), but edge endpoints must be unambiguous.
    """
    if root != THING and root not in onto.classes:
        raise UnknownReferenceError(f"unknown class {root!r}", root)
    if depth < 0:
        raise ValueError("depth must be >= 0")

    nodes: dict[str, GraphNode] = {}
    edges: set[GraphEdge] = set()

    def class_label(cid: str) -> str:
        return "Thing" if cid == THING else onto.classes[cid].label

    def add_class(cid: str) -> str:
        node_id = class_node_id(cid)
        nodes.setdefault(
            node_id, GraphNode(id=node_id, label=class_label(cid), kind="class")
        )
        return node_id

    def add_individual(iid: str) -> str:
        node_id = individual_node_id(iid)
        nodes.setdefault(
            node_id,
            GraphNode(id=node_id, label=onto.individuals[iid].label, kind="individual"),
        )
        return node_id

    add_class(root)
    frontier: list[tuple[str, str, int]] = [(root, "class", 0)]
    seen = {(root, "class")}
    while frontier:
        node, kind, dist = frontier.pop(0)
        if dist >= depth:
            continue
        if kind == "class":
            for child in sorted(onto.direct_subclasses(node)):
                edges.add(
                    GraphEdge(
                        source=add_class(child), target=class_node_id(node),
                        kind=SUBCLASS,
                    )
                )
                if (child, "class") not in seen:
                    seen.add((child, "class"))
                    frontier.append((child, "class", dist + 1))
            for inst in sorted(onto.direct_instances(node)):
                edges.add(
                    GraphEdge(
                        source=add_individual(inst), target=class_node_id(node),
                        kind=INSTANCE,
                    )
                )
                if (inst, "individual") not in seen:
                    seen.add((inst, "individual"))
                    frontier.append((inst, "individual", dist + 1))
        else:
            ind = onto.individuals[node]
            for prop, target in sorted(ind.property_assertions, key=str):
                if not isinstance(target, str) or target not in onto.individuals:
                    continue
                edges.add(
                    GraphEdge(
                        source=individual_node_id(node),
                        target=add_individual(target),
                        kind=PROPERTY,
                    )
                )
                if (target, "individual") not in seen:
                    seen.add((target, "individual"))
                    frontier.append((target, "individual", dist + 1))

    return GraphExport(
        root=root,
        depth=depth,
        nodes=tuple(sorted(nodes.values(), key=lambda n: (n.kind, n.id))),
        edges=tuple(sorted(edges, key=lambda e: (e.kind, e.source, e.target))),
    )


# -- Sankey -----------------------------------------------------------------

SANKEY_STAGES = ("year", "aspect", "evaluation", "tool")


@dataclass(frozen=True)
class SankeyLink:
    source: str
    target: str
    weight: int


@dataclass(frozen=True)
class SankeyExport:
    stages: tuple[str, ...]
    links: tuple[SankeyLink, ...]

    def to_json(self) -> dict:
        return {
            "stages": list(self.stages),
            "links": [
                {"source": l.source, "target": l.target, "weight": l.weight}
                for l in self.links
            ],
        }


def export_sankey(records: list[ToolRecord]) -> SankeyExport:
    """Classify every tool along year -> aspect -> evaluation -> name.

    Each tool carries one unit of flow down a single path; a tool evaluated
    several ways flows through the combined evaluation node ("Experiment+
    Survey") rather than splitting, which keeps weights integral and
    conservation exact at every intermediate node.
    """
    year_aspect: Counter = Counter()
    aspect_eval: Counter = Counter()
    eval_tool: Counter = Counter()
    for record in records:
        year = f"year:{record.year}"
        aspect = f"aspect:{record.aspect}"
        evaluation = "evaluation:" + "+".join(sorted(record.evaluations))
        tool = f"tool:{record.slug}"
        year_aspect[(year, aspect)] += 1
        aspect_eval[(aspect, evaluation)] += 1
        eval_tool[(evaluation, tool)] += 1
    links = [
        SankeyLink(source=s, target=t, weight=w)
        for counter in (year_aspect, aspect_eval, eval_tool)
        for (s, t), w in sorted(counter.items())
    ]
    return SankeyExport(stages=SANKEY_STAGES, links=tuple(links))


# -- facets -----------------------------------------------------------------

FACET_DIMENSIONS = (
    "aspect", "medium", "technique", "environment",
    "evaluation", "concern_keyword", "year",
)

# keyword tokens and years are their own identifiers; everything else slugifies
_RAW_SLUG_DIMENSIONS = ("concern_keyword", "year")


def facet_inventory(records: list[ToolRecord]) -> dict[str, list[dict]]:
    """Distinct values per dimension with tool counts, most common first.

    Each entry carries the query-language identifier for its value so clients
    can build `property value slug` atoms without re-deriving naming rules.
    """
    counters: dict[str, Counter] = {dim: Counter() for dim in FACET_DIMENSIONS}
    for record in records:
        counters["aspect"][record.aspect] += 1
        counters["year"][str(record.year)] += 1
        for medium in record.media:
            counters["medium"][medium] += 1
        for technique in record.techniques:
            counters["technique"][technique] += 1
        for environment in record.environments:
            counters["environment"][environment] += 1
        for evaluation in record.evaluations:
            counters["evaluation"][evaluation] += 1
        for keyword in record.concern_keywords:
            counters["concern_keyword"][keyword] += 1
    return {
        dim: [
            {
                "value": value,
                "slug": value if dim in _RAW_SLUG_DIMENSIONS else slugify(value),
                "count": count,
            }
            for value, count in sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))
        ]
        for dim, counter in counters.items()
    }
