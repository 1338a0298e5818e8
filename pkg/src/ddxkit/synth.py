"""Synthetic fixture dataset in the DDXPlus release layout.

Generates a small but learnable benchmark: 8 conditions in two clusters
(respiratory / gastric), 24 evidences with condition-specific signatures, and
a deterministic differential rule (a condition joins the differential when the
patient shows at least two of its core evidences). Because labels are a pure
function of the evidence pattern, a text classifier can fit them, while the
per-patient evidence sampling keeps differentials varied.

Everything is a pure function of the seed. The files land in the official
DDXPlus shapes, so ingestion exercises the exact production code paths.
"""

from __future__ import annotations

import argparse
import csv
from pathlib import Path

from .jsonutil import write_json, write_jsonl
from .rng import derive_rng

CONDITIONS = {
    "Asthma": "asthma",
    "Bronchitis": "acute bronchitis",
    "GERD": "gastroesophageal reflux disease",
    "Gastritis": "gastritis",
    "Influenza": "influenza",
    "Peptic ulcer": "peptic ulcer disease",
    "Pneumonia": "pneumonia",
    "URTI": "upper respiratory tract infection",
}

# (code, question, kind, antecedent, first-person sentence template)
EVIDENCES = [
    ("E_01", "Do you have a fever?", "B", False, "I have a fever."),
    ("E_02", "Do you have a dry cough?", "B", False, "I have a dry cough."),
    ("E_03", "Do you have a cough that brings up phlegm?", "B", False,
     "I have a cough that brings up phlegm."),
    ("E_04", "Do you have wheezing when you breathe?", "B", False,
     "I hear wheezing when I breathe."),
    ("E_05", "Do you feel short of breath?", "B", False, "I feel short of breath."),
    ("E_06", "Do you have a sore throat?", "B", False, "I have a sore throat."),
    ("E_07", "Do you have a runny nose?", "B", False, "I have a runny nose."),
    ("E_08", "Are you sneezing a lot?", "B", False, "I am sneezing a lot."),
    ("E_09", "Do you have heartburn?", "B", False, "I have heartburn."),
    ("E_10", "Do you have acid coming back up your throat?", "B", False,
     "I have acid coming back up my throat."),
    ("E_11", "Do you feel nauseous?", "B", False, "I feel nauseous."),
    ("E_12", "Do you feel bloated after eating?", "B", False, "I feel bloated after eating."),
    ("E_13", "Do you have chills?", "B", False, "I have chills."),
    ("E_14", "Do you feel more tired than usual?", "B", False, "I feel more tired than usual."),
    ("E_15", "Do you feel a tightness in your chest?", "B", False,
     "I feel a tightness in my chest."),
    ("E_16", "Do you smoke cigarettes?", "B", True, "I smoke cigarettes."),
    ("E_17", "Have you been diagnosed with asthma in the past?", "B", True,
     "I was diagnosed with asthma in the past."),
    ("E_18", "Do you suffer from seasonal allergies?", "B", True,
     "I suffer from seasonal allergies."),
    ("E_19", "Do you have a history of acid reflux?", "B", True,
     "I have a history of acid reflux."),
    ("E_20", "Have you been in contact with someone sick recently?", "B", True,
     "I was in contact with someone sick recently."),
    ("E_21", "Do you regularly take anti-inflammatory painkillers?", "B", True,
     "I regularly take anti-inflammatory painkillers."),
    ("E_22", "Where do you feel pain?", "C", False, "I feel pain in my {value}."),
    ("E_23", "How intense is your pain, from zero to ten?", "C", False,
     "On a scale of zero to ten, my pain intensity is {value}."),
    ("E_24", "What makes your symptoms worse?", "M", False,
     "My symptoms get worse with {value}."),
]

PAIN_LOCATIONS = ["forehead", "throat", "chest", "epigastric", "hypochondrium(R)", "temple(R)"]
PAIN_INTENSITIES = ["1", "3", "5", "7", "9"]
TRIGGERS = ["exercise", "lying down", "cold air", "large meals"]

# condition -> (core binaries, occasional binaries, pain locations, triggers);
# cluster members share two core evidences so differentials have real overlap
PROFILES = {
    "Asthma": (["E_04", "E_05", "E_15", "E_17"], ["E_02", "E_18"],
               ["chest"], ["exercise", "cold air"]),
    "Bronchitis": (["E_03", "E_05", "E_15", "E_14"], ["E_01", "E_16"],
                   ["chest"], ["cold air"]),
    "GERD": (["E_09", "E_10", "E_19"], ["E_06", "E_11"],
             ["epigastric", "chest"], ["lying down", "large meals"]),
    "Gastritis": (["E_09", "E_11", "E_12"], ["E_21"],
                  ["epigastric", "hypochondrium(R)"], ["large meals"]),
    "Influenza": (["E_01", "E_13", "E_14", "E_06"], ["E_02", "E_07", "E_20"],
                  ["forehead", "temple(R)"], []),
    "Peptic ulcer": (["E_11", "E_12", "E_21"], ["E_09", "E_19"],
                     ["epigastric", "hypochondrium(R)"], ["large meals"]),
    "Pneumonia": (["E_01", "E_03", "E_05", "E_13"], ["E_15", "E_20"],
                  ["chest"], []),
    "URTI": (["E_06", "E_07", "E_08"], ["E_01", "E_02", "E_20"],
             ["throat", "forehead"], []),
}

# rows available per pathology, mimicking the real dataset's rare diseases
SPLIT_COUNTS = {
    "train": {
        "Asthma": 150, "Bronchitis": 150, "GERD": 150, "Gastritis": 150,
        "Influenza": 150, "Peptic ulcer": 150, "Pneumonia": 80, "URTI": 60,
    },
    "validation": {
        "Asthma": 40, "Bronchitis": 40, "GERD": 40, "Gastritis": 40,
        "Influenza": 40, "Peptic ulcer": 40, "Pneumonia": 15, "URTI": 10,
    },
    "test": {
        "Asthma": 40, "Bronchitis": 40, "GERD": 40, "Gastritis": 40,
        "Influenza": 40, "Peptic ulcer": 40, "Pneumonia": 20, "URTI": 9,
    },
}

_CORE_P = 0.9
_OCCASIONAL_P = 0.35


def _evidence_rows(pathology: str, rng) -> list[str]:
    core, occasional, locations, triggers = PROFILES[pathology]
    active: list[str] = [e for e in core if rng.random() < _CORE_P]
    if len(active) < 2:  # a presentation needs enough signal to be diagnosable
        active = core[:2]
    active += [e for e in occasional if rng.random() < _OCCASIONAL_P]
    rows = sorted(active)
    if rng.random() < 0.7:
        rows.append(f"E_22_@_{locations[int(rng.integers(len(locations)))]}")
    if rng.random() < 0.5:
        rows.append(f"E_23_@_{PAIN_INTENSITIES[int(rng.integers(len(PAIN_INTENSITIES)))]}")
    if triggers and rng.random() < 0.6:
        rows.append(f"E_24_@_{triggers[int(rng.integers(len(triggers)))]}")
    return rows


def _differential(pathology: str, evidence_rows: list[str]) -> list[list]:
    active_binary = {e for e in evidence_rows if "_@_" not in e}
    weights: dict[str, int] = {}
    for condition, (core, _, _, _) in PROFILES.items():
        overlap = len(active_binary & set(core))
        if condition == pathology:
            weights[condition] = overlap + 2
        elif overlap >= 2:
            weights[condition] = overlap
    total = sum(weights.values())
    ordered = sorted(weights.items(), key=lambda kv: (-kv[1], kv[0]))
    return [[name, round(w / total, 6)] for name, w in ordered]


def generate_split(split: str, seed: int) -> list[dict]:
    rows: list[dict] = []
    for pathology in sorted(SPLIT_COUNTS[split]):
        count = SPLIT_COUNTS[split][pathology]
        for i in range(count):
            rng = derive_rng(seed, "patient", split, pathology, i)
            evidences = _evidence_rows(pathology, rng)
            rows.append(
                {
                    "AGE": int(rng.integers(1, 90)),
                    "SEX": "M" if rng.random() < 0.5 else "F",
                    "PATHOLOGY": pathology,
                    "EVIDENCES": repr(evidences),
                    "INITIAL_EVIDENCE": evidences[0].split("_@_")[0],
                    "DIFFERENTIAL_DIAGNOSIS": repr(_differential(pathology, evidences)),
                }
            )
    return rows


def write_catalogs(out_dir: Path) -> None:
    evidences = {}
    for code, question, kind, antecedent, _ in EVIDENCES:
        entry = {
            "name": code,
            "question_en": question,
            "data_type": kind,
            "is_antecedent": antecedent,
            "default_value": "NA" if kind != "B" else "0",
            "possible-values": [],
        }
        if code == "E_22":
            entry["possible-values"] = PAIN_LOCATIONS
        elif code == "E_23":
            entry["possible-values"] = PAIN_INTENSITIES
        elif code == "E_24":
            entry["possible-values"] = TRIGGERS
        evidences[code] = entry
    write_json(out_dir / "release_evidences.json", evidences)

    conditions = {
        name: {"condition_name": name, "cond-name-eng": eng}
        for name, eng in CONDITIONS.items()
    }
    write_json(out_dir / "release_conditions.json", conditions)


def write_templates(out_dir: Path) -> None:
    rows = []
    for code, _, _, antecedent, sentence in EVIDENCES:
        rows.append(
            {
                "evidence_code": code,
                "value_matcher": "*",
                "section": "history" if antecedent else "symptom",
                "sentence_template": sentence,
            }
        )
    write_jsonl(out_dir / "templates.jsonl", rows)


_THIRD_PERSON = {
    "E_01": "a fever", "E_02": "a dry cough", "E_03": "a productive cough",
    "E_04": "audible wheezing", "E_05": "shortness of breath", "E_06": "a sore throat",
    "E_07": "a runny nose", "E_08": "frequent sneezing", "E_09": "heartburn",
    "E_10": "acid regurgitation", "E_11": "nausea", "E_12": "bloating after meals",
    "E_13": "chills", "E_14": "unusual fatigue", "E_15": "chest tightness",
    "E_16": "a smoking habit", "E_17": "previously diagnosed asthma",
    "E_18": "seasonal allergies", "E_19": "longstanding acid reflux",
    "E_20": "recent contact with a sick person",
    "E_21": "regular use of anti-inflammatory painkillers",
}


def make_custom_testset(seed: int, n: int = 100) -> list[dict]:
    """Third-person paragraph samples, at least two per pathology."""
    condition_order = sorted(CONDITIONS)
    pathologies = []
    for name in condition_order:
        pathologies.extend([name, name])
    rng = derive_rng(seed, "custom-pathologies")
    while len(pathologies) < n:
        pathologies.append(condition_order[int(rng.integers(len(condition_order)))])
    pathologies = pathologies[:n]

    samples = []
    for i, pathology in enumerate(pathologies):
        rng = derive_rng(seed, "custom", i)
        evidences = _evidence_rows(pathology, rng)
        diff = _differential(pathology, evidences)
        age = int(rng.integers(18, 85))
        sex_word = "man" if rng.random() < 0.5 else "woman"
        pronoun = "He" if sex_word == "man" else "She"
        complaints = [_THIRD_PERSON[e] for e in evidences if "_@_" not in e]
        phrases = ", ".join(complaints[:-1]) + (" and " + complaints[-1] if len(complaints) > 1 else complaints[0] if complaints else "")
        pain = [e.split("_@_")[1] for e in evidences if e.startswith("E_22_@_")]
        text = f"The patient is a {age}-year-old {sex_word}. {pronoun} reports {phrases}."
        if pain:
            text += f" {pronoun} localizes the pain to the {pain[0]}."
        labels = [name for name, _ in diff]
        samples.append(
            {
                "id": f"custom-{i:04d}",
                "text": text,
                "labels": labels,
                "gt_index": pathology,
            }
        )
    return samples


def write_fixture(out_dir: str | Path, seed: int = 13) -> Path:
    """Write the full fixture dataset; returns the directory."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_catalogs(out_dir)
    write_templates(out_dir)
    for split, filename in (
        ("train", "release_train_patients.csv"),
        ("validation", "release_validate_patients.csv"),
        ("test", "release_test_patients.csv"),
    ):
        rows = generate_split(split, seed)
        with open(out_dir / filename, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(
                fh,
                fieldnames=[
                    "AGE", "SEX", "PATHOLOGY", "EVIDENCES",
                    "INITIAL_EVIDENCE", "DIFFERENTIAL_DIAGNOSIS",
                ],
            )
            writer.writeheader()
            writer.writerows(rows)
    write_jsonl(out_dir / "custom_testset.jsonl", make_custom_testset(seed))
    return out_dir


def main() -> None:
    parser = argparse.ArgumentParser(description="generate the synthetic fixture dataset")
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument("--seed", type=int, default=13)
    args = parser.parse_args()
    out = write_fixture(args.out, args.seed)
    print(f"fixture dataset written to {out}")


if __name__ == "__main__":
    main()
