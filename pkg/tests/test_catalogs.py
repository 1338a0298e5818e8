import json

import pytest

from ddxkit.corpus import EvidenceKind, load_catalogs, load_conditions, load_evidences
from ddxkit.errors import DuplicateCode, MalformedCatalog, MissingFile


def test_fixture_catalogs(fixture_dir):
    evidences, conditions = load_catalogs(
        fixture_dir / "release_evidences.json", fixture_dir / "release_conditions.json"
    )
    assert len(evidences) == 24
    assert len(conditions) == 8
    kinds = {e.kind for e in evidences}
    assert kinds == {EvidenceKind.BINARY, EvidenceKind.CATEGORICAL, EvidenceKind.MULTICHOICE}


def test_label_index_is_bijection_by_code_order(fixture_dir):
    conditions = load_conditions(fixture_dir / "release_conditions.json")
    codes = [c.code for c in conditions]
    assert codes == sorted(codes)
    assert [c.label_index for c in conditions] == list(range(len(conditions)))


def test_small_catalog_ordering(tmp_path):
    """label_index follows ascending code regardless of file order."""
    path = tmp_path / "conditions.json"
    path.write_text(json.dumps(
        {"Zoster": {"condition_name": "Zoster"}, "Angina": {"condition_name": "Angina"}}
    ))
    conditions = load_conditions(path)
    assert [(c.code, c.label_index) for c in conditions] == [("Angina", 0), ("Zoster", 1)]


def test_missing_file():
    with pytest.raises(MissingFile):
        load_evidences("/nonexistent/evidences.json")


def test_empty_condition_file(tmp_path):
    path = tmp_path / "conditions.json"
    path.write_text("{}")
    with pytest.raises(MalformedCatalog):
        load_conditions(path)


def test_duplicate_code(tmp_path):
    path = tmp_path / "evidences.json"
    path.write_text(json.dumps(
        [
            {"name": "E_1", "question_en": "Q?", "data_type": "B"},
            {"name": "E_1", "question_en": "Q again?", "data_type": "B"},
        ]
    ))
    with pytest.raises(DuplicateCode):
        load_evidences(path)


def test_categorical_needs_domain(tmp_path):
    path = tmp_path / "evidences.json"
    path.write_text(json.dumps(
        {"E_1": {"name": "E_1", "question_en": "Where?", "data_type": "C",
                 "possible-values": []}}
    ))
    with pytest.raises(MalformedCatalog):
        load_evidences(path)


def test_row_identified_in_error(tmp_path):
    path = tmp_path / "evidences.json"
    path.write_text(json.dumps([{"question_en": "Q?", "data_type": "B"}]))
    with pytest.raises(MalformedCatalog, match="entry 0"):
        load_evidences(path)
