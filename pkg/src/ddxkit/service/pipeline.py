"""End-to-end pipeline: ingest -> augment -> train -> behave -> eval.

Each stage consumes the previous stage's artifacts from the run directory and
writes its own subdirectory plus a stage manifest. All writers are
deterministic, so a rerun with the same config and seeds reproduces corpus and
metrics artifacts byte-for-byte. The first failing stage raises StageFailure
with earlier artifacts left on disk.
"""

from __future__ import annotations

from pathlib import Path

import yaml

from ..augment import AugmentPlan, RuleBasedParaphraser, augment_corpus, load_term_map
from ..augment.paraphrase import RemoteParaphraser
from ..behave import (
    ExclusionConfig,
    TypoConfig,
    exclude_history_corpus,
    insert_typos_corpus,
)
from ..corpus import (
    build_splits,
    load_catalogs,
    load_patients,
    load_templates,
    read_corpus,
    write_corpus,
)
from ..corpus.templates import validate_coverage
from ..errors import MissingFile, StageFailure
from ..evaluate import EvalConfig, evaluate_run, write_metrics_report
from ..jsonutil import read_json, sha256_file, write_json
from ..model import (
    HASH_SALT,
    TrainConfig,
    load_checkpoint,
    predict,
    save_checkpoint,
    train_model,
)
from ..model.encoder import DEFAULT_DIM
from ..model.external import export_predictions
from ..model.train import DEFAULT_HIDDEN

STAGES = ("ingest", "augment", "train", "behave", "eval")


def load_config(path: str | Path) -> dict:
    path = Path(path)
    if not path.is_file():
        raise MissingFile(f"pipeline config not found: {path}")
    if path.suffix in (".yaml", ".yml"):
        return yaml.safe_load(path.read_text(encoding="utf-8"))
    return read_json(path)


def ingest_stage(cfg: dict, out_dir: Path, seed: int) -> dict:
    out_dir.mkdir(parents=True, exist_ok=True)
    evidences, conditions = load_catalogs(cfg["evidences"], cfg["conditions"])
    templates = load_templates(cfg["templates"])
    validate_coverage(templates, evidences)

    patients = {}
    for split, path in cfg["patients"].items():
        patients[split] = load_patients(path, (evidences, conditions), id_prefix=split)

    targets = dict(zip(("train", "validation", "test"), cfg["targets"]))
    splits = build_splits(patients, targets, seed, templates, evidences, conditions)

    counts = {}
    for split in splits:
        write_corpus(out_dir / f"{split.name}.jsonl", split.reports)
        counts[split.name] = {
            "total": len(split.reports),
            "per_pathology": split.per_pathology_counts,
        }
    write_json(
        out_dir / "manifest.json",
        {
            "seed": seed,
            "targets": targets,
            "counts": counts,
            "catalog_hashes": {
                "evidences": sha256_file(cfg["evidences"]),
                "conditions": sha256_file(cfg["conditions"]),
                "templates": sha256_file(cfg["templates"]),
            },
        },
    )
    return counts


def augment_stage(cfg: dict, out_dir: Path, ingest_dir: Path, seed: int) -> dict:
    out_dir.mkdir(parents=True, exist_ok=True)
    corpus = read_corpus(ingest_dir / "train.jsonl")
    plan = AugmentPlan(
        sp_fraction=cfg.get("sp", 0.15),
        mtd_fraction=cfg.get("mtd", 0.15),
        sp_sentence_fraction=cfg.get("sp_sentences", 0.40),
        seed=seed,
    )
    term_map = load_term_map(cfg.get("term_map"))
    if cfg.get("provider", "fallback") == "remote":
        provider = RemoteParaphraser()
    else:
        provider = RuleBasedParaphraser(seed=seed)
    modified, manifest = augment_corpus(corpus, plan, term_map, provider)
    write_corpus(out_dir / "train_augmented.jsonl", modified)
    manifest.save(out_dir / "manifest.json")
    return {"edits": len(manifest.edits), **manifest.meta}


def train_stage(cfg: dict, out_dir: Path, corpus_path: Path, labels: list[str]) -> dict:
    out_dir.mkdir(parents=True, exist_ok=True)
    corpus = read_corpus(corpus_path)
    config = TrainConfig(
        epochs=cfg.get("epochs", 10),
        batch_size=cfg.get("batch", 16),
        learning_rate=cfg.get("lr", 1e-3),
        weight_decay=cfg.get("wd", 0.01),
        seed=cfg.get("seed", 0),
        optimizer=cfg.get("optimizer", "adamw_style"),
    )
    result = train_model(
        corpus, config, dim=cfg.get("dim", DEFAULT_DIM), hidden=cfg.get("hidden", DEFAULT_HIDDEN)
    )
    model_id = save_checkpoint(
        out_dir / "model.ckpt.npz", result.params, labels, HASH_SALT, result.log
    )
    write_json(out_dir / "train_log.json", {**result.log, "model_id": model_id})
    return {"model_id": model_id, "final_loss": result.log["epoch_loss"][-1]}


def behave_stage(cfg: dict, out_dir: Path, test_corpus_path: Path, seed: int) -> dict:
    out_dir.mkdir(parents=True, exist_ok=True)
    corpus = read_corpus(test_corpus_path)
    info = {}
    if "typos" in cfg:
        config = TypoConfig(
            sentence_fraction=cfg["typos"].get("fraction", 0.5),
            long_sentence_word_threshold=cfg["typos"].get("word_threshold", 10),
            seed=seed,
        )
        modified, manifest = insert_typos_corpus(corpus, config)
        write_corpus(out_dir / "typos.jsonl", modified)
        manifest.save(out_dir / "typos_manifest.json")
        info["typos_edits"] = len(manifest.edits)
    if "exclude_history" in cfg:
        config = ExclusionConfig(seed=seed)
        modified, manifest = exclude_history_corpus(corpus, config)
        write_corpus(out_dir / "exclude_history.jsonl", modified)
        manifest.save(out_dir / "exclude_history_manifest.json")
        info["exclusion_edits"] = len(manifest.edits)
    return info


def eval_stage(cfg: dict, out_dir: Path, model_path: Path, corpora: dict[str, Path]) -> dict:
    out_dir.mkdir(parents=True, exist_ok=True)
    model = load_checkpoint(model_path)
    config = EvalConfig(
        t_conf=cfg.get("t_conf", 0.5),
        extra_thresholds=tuple(cfg.get("thresholds", (0.2, 0.95))),
        top_k=cfg.get("top_k", 5),
    )
    summary = {}
    for name, corpus_path in corpora.items():
        corpus = read_corpus(corpus_path)
        preds = predict(
            [r.text for r in corpus], model.params, model.dim, model.salt,
            ids=[r.id for r in corpus],
        )
        export_predictions(out_dir / f"{name}_preds.jsonl", preds)
        report = evaluate_run(preds, corpus, config)
        report.provenance = {
            "corpus": sha256_file(corpus_path),
            "model_id": model.model_id,
            "config": {
                "t_conf": config.t_conf,
                "extra_thresholds": list(config.extra_thresholds),
                "top_k": config.top_k,
            },
        }
        write_metrics_report(out_dir / f"{name}_report.json", report)
        summary[name] = {"f1": report.f1, "hamming_loss": report.hamming_loss}
    return summary


def run_pipeline(config_path: str | Path) -> dict:
    """Execute the declared stages; returns a summary per executed stage."""
    config = load_config(config_path)
    base = Path(config_path).parent
    out_root = (base / config["out"]).resolve() if not Path(config["out"]).is_absolute() else Path(config["out"])
    out_root.mkdir(parents=True, exist_ok=True)
    seed = config.get("seed", 0)
    summary: dict[str, dict] = {}

    def _resolve(stage_cfg: dict, keys: tuple[str, ...]) -> dict:
        resolved = dict(stage_cfg)
        for key in keys:
            if key == "patients" and isinstance(resolved.get(key), dict):
                resolved[key] = {
                    split: str((base / p)) for split, p in resolved[key].items()
                }
            elif resolved.get(key):
                resolved[key] = str(base / resolved[key])
        return resolved

    if "ingest" in config:
        try:
            cfg = _resolve(config["ingest"], ("patients", "evidences", "conditions", "templates"))
            summary["ingest"] = ingest_stage(cfg, out_root / "ingest", seed)
        except Exception as exc:
            raise StageFailure("ingest", exc) from exc

    train_corpus = out_root / "ingest" / "train.jsonl"
    if "augment" in config:
        try:
            cfg = _resolve(config["augment"], ("term_map",))
            summary["augment"] = augment_stage(cfg, out_root / "augment", out_root / "ingest", seed)
            train_corpus = out_root / "augment" / "train_augmented.jsonl"
        except Exception as exc:
            raise StageFailure("augment", exc) from exc

    if "train" in config:
        try:
            cfg = dict(config["train"])
            cfg.setdefault("seed", seed)
            _, conditions = load_catalogs(
                (base / config["ingest"]["evidences"]),
                (base / config["ingest"]["conditions"]),
            )
            labels = [c.display_name for c in conditions]
            summary["train"] = train_stage(cfg, out_root / "train", train_corpus, labels)
        except Exception as exc:
            raise StageFailure("train", exc) from exc

    if "behave" in config:
        try:
            summary["behave"] = behave_stage(
                config["behave"], out_root / "behave", out_root / "ingest" / "test.jsonl", seed
            )
        except Exception as exc:
            raise StageFailure("behave", exc) from exc

    if "eval" in config:
        try:
            corpora = {"test": out_root / "ingest" / "test.jsonl"}
            for name in ("typos", "exclude_history"):
                path = out_root / "behave" / f"{name}.jsonl"
                if path.is_file():
                    corpora[name] = path
            summary["eval"] = eval_stage(
                config["eval"], out_root / "eval", out_root / "train" / "model.ckpt.npz", corpora
            )
        except Exception as exc:
            raise StageFailure("eval", exc) from exc

    write_json(out_root / "pipeline_summary.json", summary)
    return summary
