from collections import Counter

from vison.catalog import load_records
from vison.metrics import compute_metrics
from vison.schema import (
    ASPECT_CLASS,
    build_ontology,
    compile_schema,
    facet_values_of,
    parse_schema,
)
from vison.seed import build_seed_snapshot, seed_schema_bytes
from vison.snapshot import Snapshot, dumps

LICENSED = """name,aspect,year,concern,environment,technique,medium,evaluation,url,license
CodeCity,Structure,2015,Software quality based on code smells,Pharo,City,SCS,Usage Scen.,http://x,Free
Explora,Structure,2015,Software quality based on metric analysis,Pharo,Polymetric views,SCS,Usage Scen.,http://y,Commercial
ProfVis,Behavior,2011,Execution traces of Java programs,Java,Node-link,SCS,Experiment,http://z,Free
"""


def seed_schema():
    return compile_schema(parse_schema(seed_schema_bytes()))


def test_tool_counts(seed_ontology, seed_records):
    assert len(seed_records) == 70
    assert len(seed_ontology.instances_of("tool")) == 70
    assert len(seed_ontology.instances_of("evolution-tool")) == 12
    assert len(seed_ontology.instances_of("combined-aspect-tool")) == 8
    assert compute_metrics(seed_ontology).classassertion_count >= 70


def test_frameworks_are_the_combined_tools(seed_ontology):
    assert seed_ontology.instances_of("framework") == seed_ontology.instances_of(
        "combined-aspect-tool"
    )


def test_dimensionality_assertions(seed_ontology):
    assert seed_ontology.individuals["i3d"].targets("dimensionality") == {"3d"}
    assert seed_ontology.individuals["scs"].targets("dimensionality") == {"2d"}
    assert seed_ontology.individuals["scs-and-i3d"].targets("dimensionality") == {
        "2d",
        "3d",
    }


def test_data_sources_follow_aspect(seed_snapshot):
    onto = seed_snapshot.ontology
    assert onto.individuals["gzoltar"].targets("hasdatasource") == {"runtime"}
    assert onto.individuals["codecity"].targets("hasdatasource") == {"source-code"}
    assert onto.individuals["flaskdashboard"].targets("hasdatasource") == {
        "version-history"
    }
    assert onto.individuals["getaviz"].targets("hasdatasource") == {
        "runtime", "source-code", "version-history",
    }


def test_aspect_partition(seed_snapshot):
    aspect_classes = set(ASPECT_CLASS.values())
    for record in seed_snapshot.records:
        ind = seed_snapshot.ontology.individuals[record.slug]
        assert len(ind.asserted_classes & aspect_classes) == 1
    assert compute_metrics(seed_snapshot.ontology).disjointclasses_count == 1


def test_count_conservation(seed_snapshot):
    tool_individuals = {
        i.id
        for i in seed_snapshot.ontology.individuals.values()
        if i.asserted_classes & set(ASPECT_CLASS.values())
    }
    assert len(tool_individuals) == len(seed_snapshot.records)


def test_lossless_facet_round_trip(seed_snapshot):
    onto = seed_snapshot.ontology
    for record in seed_snapshot.records:
        recovered = facet_values_of(onto, record.slug)
        assert recovered["aspect"] == record.aspect
        assert recovered["year"] == record.year
        assert recovered["media"] == record.media
        assert recovered["techniques"] == record.techniques
        assert recovered["environments"] == record.environments
        assert recovered["evaluations"] == record.evaluations
        assert recovered["concern_keywords"] == record.concern_keywords
        assert recovered["license"] == record.license


def test_facet_multisets_survive(seed_snapshot):
    onto = seed_snapshot.ontology
    from_records = Counter(
        technique for r in seed_snapshot.records for technique in r.techniques
    )
    from_ontology = Counter(
        technique
        for r in seed_snapshot.records
        for technique in facet_values_of(onto, r.slug)["techniques"]
    )
    assert from_records == from_ontology


def test_deterministic_build():
    first = dumps(build_seed_snapshot())
    second = dumps(build_seed_snapshot())
    assert first == second


def test_shared_individual_for_keyword_and_tool(seed_ontology):
    # "graph" is both the Graph tool and a concern keyword of GraphWorks
    ind = seed_ontology.individuals["graph"]
    assert ind.label == "Graph"
    assert "combined-aspect-tool" in ind.asserted_classes
    assert "concern-keyword" in ind.asserted_classes
    assert "graphworks" in seed_ontology.instances_of("tool")


def test_keyword_environment_share(seed_ontology):
    # the environment "Java" and the concern keyword "java" merge
    ind = seed_ontology.individuals["java"]
    assert {"environment", "concern-keyword"} <= ind.asserted_classes


def test_licensed_fixture_builds():
    records, issues = load_records(LICENSED)
    assert not [i for i in issues if i.severity == "error"]
    onto = build_ontology(records, seed_schema())
    assert onto.individuals["codecity"].targets("haslicense") == {"free"}
    assert onto.individuals["explora"].targets("haslicense") == {"commercial"}
    snap = Snapshot(ontology=onto, records=records)
    assert snap.by_slug["profvis"].license == "Free"


def test_single_row_catalog_builds():
    text = (
        "name,aspect,year,concern,environment,technique,medium,evaluation,url\n"
        "Solo,Behavior,2017,One concern,Java,Charts,SCS,N/A,http://solo\n"
    )
    records, issues = load_records(text)
    assert not [i for i in issues if i.severity == "error"]
    onto = build_ontology(records, seed_schema())
    assert onto.instances_of("tool") == {"solo"}


def test_individual_assertions_from_catalog_rows(seed_ontology):
    assert seed_ontology.individuals["gzoltar"].targets("lastupdate") == {2017}
    assert "i3d" in seed_ontology.individuals["cityvr"].targets("hasmedium")
    assert seed_ontology.individuals["explorviz"].targets("hasmedium") == {
        "scs", "i3d", "scs-and-i3d",
    }
