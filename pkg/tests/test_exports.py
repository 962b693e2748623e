from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from vison.catalog import load_records
from vison.errors import UnknownReferenceError
from vison.exports import export_graph, export_sankey, facet_inventory


def facet_counts(inventory, dimension):
    return {entry["value"]: entry["count"] for entry in inventory[dimension]}


# -- graph -------------------------------------------------------------------

def test_root_thing_depth_one(seed_ontology):
    graph = export_graph(seed_ontology, root="thing", depth=1)
    kinds = {node.kind for node in graph.nodes}
    assert kinds == {"class"}  # top-level concepts only, no individuals
    subclass_targets = {edge.target for edge in graph.edges}
    assert subclass_targets == {"class:thing"}
    names = {node.id for node in graph.nodes}
    assert {"class:tool", "class:aspect", "class:medium", "class:technique", "class:evaluation"} <= names


def test_behavior_tool_neighborhood(seed_ontology):
    graph = export_graph(seed_ontology, root="behavior-tool", depth=1)
    instance_edges = [e for e in graph.edges if e.kind == "instance"]
    assert len(instance_edges) == 28
    assert all(e.target == "class:behavior-tool" for e in instance_edges)


def test_depth_zero(seed_ontology):
    graph = export_graph(seed_ontology, root="tool", depth=0)
    assert [n.id for n in graph.nodes] == ["class:tool"]
    assert graph.edges == ()


def test_unknown_root(seed_ontology):
    with pytest.raises(UnknownReferenceError):
        export_graph(seed_ontology, root="nope", depth=1)
    with pytest.raises(ValueError):
        export_graph(seed_ontology, root="tool", depth=-1)


def test_property_edges_reach_facets(seed_ontology):
    graph = export_graph(seed_ontology, root="behavior-tool", depth=2)
    property_edges = [e for e in graph.edges if e.kind == "property"]
    assert property_edges
    node_ids = {n.id for n in graph.nodes}
    assert "ind:scs" in node_ids


@settings(max_examples=60, deadline=None)
@given(
    root=st.sampled_from(
        ["thing", "tool", "behavior-tool", "medium", "concern-keyword", "framework"]
    ),
    depth=st.integers(min_value=0, max_value=3),
)
def test_graph_exports_are_closed(seed_ontology, root, depth):
    graph = export_graph(seed_ontology, root=root, depth=depth)
    node_ids = {n.id for n in graph.nodes}
    classes = {n.id for n in graph.nodes if n.kind == "class"}
    individuals = {n.id for n in graph.nodes if n.kind == "individual"}
    for edge in graph.edges:
        assert edge.source in node_ids and edge.target in node_ids
        if edge.kind == "subclass":
            assert edge.source in classes and edge.target in classes
        elif edge.kind == "instance":
            assert edge.source in individuals and edge.target in classes


# -- sankey -------------------------------------------------------------------

def links_by_stage(sankey):
    stages = {}
    for link in sankey.links:
        source_stage = link.source.split(":", 1)[0]
        stages.setdefault(source_stage, []).append(link)
    return stages


def test_sankey_stage_order(seed_records):
    sankey = export_sankey(list(seed_records))
    assert sankey.stages == ("year", "aspect", "evaluation", "tool")


def test_sankey_grand_total(seed_records):
    sankey = export_sankey(list(seed_records))
    per_stage = links_by_stage(sankey)
    assert sum(l.weight for l in per_stage["year"]) == 70
    assert sum(l.weight for l in per_stage["aspect"]) == 70
    assert sum(l.weight for l in per_stage["evaluation"]) == 70


def test_sankey_conservation(seed_records):
    sankey = export_sankey(list(seed_records))
    inbound: Counter = Counter()
    outbound: Counter = Counter()
    for link in sankey.links:
        outbound[link.source] += link.weight
        inbound[link.target] += link.weight
        assert link.weight > 0
    intermediates = {
        node for node in set(inbound) | set(outbound)
        if node.startswith(("aspect:", "evaluation:"))
    }
    for node in intermediates:
        assert inbound[node] == outbound[node], node


def test_2017_behavior_link(seed_records):
    sankey = export_sankey(list(seed_records))
    weight = next(
        l.weight
        for l in sankey.links
        if l.source == "year:2017" and l.target == "aspect:Behavior"
    )
    assert weight == 5


def test_single_row_chain():
    text = (
        "name,aspect,year,concern,environment,technique,medium,evaluation,url\n"
        "Solo,Behavior,2017,c,Java,Charts,SCS,N/A,http://solo\n"
    )
    records, _ = load_records(text)
    sankey = export_sankey(records)
    assert [(l.source, l.target, l.weight) for l in sankey.links] == [
        ("year:2017", "aspect:Behavior", 1),
        ("aspect:Behavior", "evaluation:None", 1),
        ("evaluation:None", "tool:solo", 1),
    ]


def test_multi_evaluation_flows_through_combined_node(seed_records):
    sankey = export_sankey(list(seed_records))
    combined = [l for l in sankey.links if "Experiment+Survey" in l.target]
    assert len(combined) == 1 and combined[0].weight == 1  # jGrasp


# -- facets -------------------------------------------------------------------

def test_aspect_facet(seed_records):
    counts = facet_counts(facet_inventory(list(seed_records)), "aspect")
    assert counts == {"Behavior": 28, "Structure": 22, "Evolution": 12, "Combined": 8}


def test_medium_facet_includes_i3d(seed_records):
    counts = facet_counts(facet_inventory(list(seed_records)), "medium")
    assert counts["I3D"] == 4
    assert counts["SCS"] == 68


def test_facets_sorted_by_count_then_name(seed_records):
    inventory = facet_inventory(list(seed_records))
    for values in inventory.values():
        keys = [(-entry["count"], entry["value"]) for entry in values]
        assert keys == sorted(keys)


def test_empty_inventory():
    inventory = facet_inventory([])
    assert all(values == [] for values in inventory.values())
