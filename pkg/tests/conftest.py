import pytest

from vison.seed import build_seed_snapshot, seed_catalog_bytes


@pytest.fixture(scope="session")
def seed_snapshot():
    return build_seed_snapshot()


@pytest.fixture(scope="session")
def seed_ontology(seed_snapshot):
    return seed_snapshot.ontology


@pytest.fixture(scope="session")
def seed_records(seed_snapshot):
    return seed_snapshot.records


@pytest.fixture(scope="session")
def seed_csv_text():
    return seed_catalog_bytes().decode("utf-8")


@pytest.fixture(scope="session")
def snapshot_path(tmp_path_factory, seed_snapshot):
    from vison.snapshot import save

    path = tmp_path_factory.mktemp("snap") / "seed.json"
    save(seed_snapshot, path)
    return path
