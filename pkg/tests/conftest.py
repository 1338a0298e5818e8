"""Shared fixtures: the synthetic dataset, ingested splits, a trained model."""

from __future__ import annotations

import pytest

from ddxkit.corpus import build_splits, load_catalogs, load_patients, load_templates
from ddxkit.model import TrainConfig, train_model
from ddxkit.synth import write_fixture

FIXTURE_SEED = 13
SPLIT_SEED = 7
TEST_DIM = 1024
TEST_HIDDEN = 64


@pytest.fixture(scope="session")
def fixture_dir(tmp_path_factory):
    return write_fixture(tmp_path_factory.mktemp("fixture"), seed=FIXTURE_SEED)


@pytest.fixture(scope="session")
def catalogs(fixture_dir):
    return load_catalogs(
        fixture_dir / "release_evidences.json", fixture_dir / "release_conditions.json"
    )


@pytest.fixture(scope="session")
def templates(fixture_dir):
    return load_templates(fixture_dir / "templates.jsonl")


@pytest.fixture(scope="session")
def patients_by_split(fixture_dir, catalogs):
    paths = {
        "train": "release_train_patients.csv",
        "validation": "release_validate_patients.csv",
        "test": "release_test_patients.csv",
    }
    return {
        split: load_patients(fixture_dir / name, catalogs, id_prefix=split)
        for split, name in paths.items()
    }


@pytest.fixture(scope="session")
def splits(patients_by_split, templates, catalogs):
    evidences, conditions = catalogs
    return build_splits(
        patients_by_split,
        {"train": 100, "validation": 20, "test": 20},
        SPLIT_SEED,
        templates,
        evidences,
        conditions,
    )


@pytest.fixture(scope="session")
def train_corpus(splits):
    return splits[0].reports


@pytest.fixture(scope="session")
def test_corpus(splits):
    return splits[2].reports


@pytest.fixture(scope="session")
def trained(train_corpus):
    config = TrainConfig(epochs=30, batch_size=16, learning_rate=1e-3, seed=SPLIT_SEED)
    return train_model(train_corpus, config, dim=TEST_DIM, hidden=TEST_HIDDEN)
