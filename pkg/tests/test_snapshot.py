import pytest

from vison.errors import SnapshotError
from vison.snapshot import Snapshot, dumps, load, loads, save


def test_round_trip_preserves_everything(seed_snapshot):
    restored = loads(dumps(seed_snapshot))
    onto, back = seed_snapshot.ontology, restored.ontology
    assert set(back.classes) == set(onto.classes)
    assert set(back.properties) == set(onto.properties)
    assert set(back.individuals) == set(onto.individuals)
    assert back.disjoint_groups == onto.disjoint_groups
    for ind_id, ind in onto.individuals.items():
        mirror = back.individuals[ind_id]
        assert mirror.asserted_classes == ind.asserted_classes
        assert mirror.property_assertions == ind.property_assertions
        assert mirror.negative_assertions == ind.negative_assertions
    assert restored.records == seed_snapshot.records
    assert back.frozen


def test_serialization_is_byte_stable(seed_snapshot):
    assert dumps(seed_snapshot) == dumps(loads(dumps(seed_snapshot)))


def test_file_round_trip(tmp_path, seed_snapshot):
    path = tmp_path / "snap.json"
    save(seed_snapshot, path)
    assert dumps(load(path)) == dumps(seed_snapshot)


def test_bad_json():
    with pytest.raises(SnapshotError):
        loads("{not json")


def test_wrong_format_tag():
    with pytest.raises(SnapshotError):
        loads('{"format": "something-else/9"}')


def test_missing_file():
    with pytest.raises(SnapshotError):
        load("/nonexistent/path.json")


def test_empty_snapshot_loads():
    from vison.model import Ontology

    empty = Snapshot(ontology=Ontology().freeze(), records=[])
    restored = loads(dumps(empty))
    assert restored.records == []
    assert restored.ontology.classes == {}
