import random

from vison.metrics import MetricsReport, compute_metrics
from vison.model import Ontology


def test_empty_ontology_all_logical_zero():
    report = compute_metrics(Ontology())
    assert report.logical_axiom_count == 0
    assert report.logical_parts() == (0,) * 8
    assert report.axiom_count == 0
    assert report.is_additive()


def test_root_children_add_no_subclass_axioms():
    onto = Ontology()
    onto.declare_class("tool", "Tool", ["thing"])
    assert compute_metrics(onto).subclassof_count == 0


def test_hand_counted_fixture():
    # 2 classes, 1 subclass axiom, 1 individual, 1 class assertion
    onto = Ontology()
    onto.declare_class("a", "A")
    onto.declare_class("b", "B", ["a"])
    onto.declare_individual("x", "X")
    onto.assert_membership("x", "b")
    report = compute_metrics(onto)
    assert report.class_count == 2
    assert report.subclassof_count == 1
    assert report.classassertion_count == 1
    assert report.declaration_axiom_count == 3
    assert report.individual_count == 1
    assert report.logical_axiom_count == 2
    assert report.axiom_count == 5
    assert report.is_additive()


def test_published_report_instance_is_additive():
    # A full-size report whose totals decompose exactly: 3290 = 2428 + 862.
    report = MetricsReport(
        axiom_count=3290,
        logical_axiom_count=2428,
        declaration_axiom_count=862,
        class_count=150,
        property_count=20,
        individual_count=692,
        subclassof_count=143,
        disjointclasses_count=32,
        subobjectpropertyof_count=1,
        objectpropertydomain_count=2,
        objectpropertyrange_count=3,
        classassertion_count=696,
        objectpropertyassertion_count=1547,
        negativeobjectpropertyassertion_count=4,
    )
    assert report.is_additive()


def test_seed_metrics(seed_ontology):
    report = compute_metrics(seed_ontology)
    assert report.is_additive()
    assert report.individual_count >= 70
    assert report.classassertion_count >= 70
    assert report.disjointclasses_count == 1
    assert report.subobjectpropertyof_count == 1


def random_mutation(onto: Ontology, rng: random.Random, step: int) -> None:
    classes = sorted(onto.classes)
    individuals = sorted(onto.individuals)
    properties = sorted(onto.properties)
    choice = rng.randrange(6)
    if choice == 0 or not classes:
        parents = rng.sample(classes, k=min(len(classes), rng.randrange(3)))
        onto.declare_class(f"mut-class-{step}", f"M{step}", parents)
    elif choice == 1:
        onto.declare_individual(f"mut-ind-{step}", f"I{step}")
    elif choice == 2 and individuals:
        onto.assert_membership(rng.choice(individuals), rng.choice(classes))
    elif choice == 3 and len(classes) >= 2:
        a, b = rng.sample(classes, 2)
        onto.assert_disjoint(a, b)
    elif choice == 4:
        onto.declare_property(
            f"mut-prop-{step}",
            f"P{step}",
            kind=rng.choice(["object", "integer"]),
            domain=rng.choice(classes) if classes and rng.random() < 0.5 else None,
            range=rng.choice(classes) if classes and rng.random() < 0.5 else None,
        )
    elif individuals and properties:
        prop = rng.choice(properties)
        if onto.properties[prop].kind == "integer":
            onto.assert_property_value(
                rng.choice(individuals), prop, rng.randrange(1990, 2030)
            )
        else:
            onto.assert_property_value(
                rng.choice(individuals),
                prop,
                rng.choice(individuals),
                polarity=rng.choice(["positive", "positive", "negative"]),
            )


def test_additivity_under_random_mutations(seed_ontology):
    rng = random.Random(20180207)
    onto = seed_ontology.copy()
    for step in range(200):
        random_mutation(onto, rng, step)
        assert compute_metrics(onto).is_additive()
