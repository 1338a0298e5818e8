"""ddxkit command-line interface."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import __version__
from .errors import DdxkitError


@click.group()
@click.version_option(__version__)
def main() -> None:
    """Differential-diagnosis corpus, model, and evaluation toolkit."""


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


@main.command()
@click.option("--patients", required=True,
              help="comma-separated train,validation,test CSV paths")
@click.option("--evidences", required=True, type=click.Path(exists=True))
@click.option("--conditions", required=True, type=click.Path(exists=True))
@click.option("--templates", required=True, type=click.Path(exists=True))
@click.option("--targets", default="1000,100,100", show_default=True,
              help="per-pathology sample targets for train,validation,test")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", required=True, type=click.Path())
def ingest(patients, evidences, conditions, templates, targets, seed, out):
    """Build balanced splits of synthesized patient reports."""
    from .service.pipeline import ingest_stage

    patient_paths = patients.split(",")
    if len(patient_paths) != 3:
        _fail(DdxkitError(
            "--patients needs the three official split files: train,validation,test"
        ))
    target_values = [int(v) for v in targets.split(",")]
    if len(target_values) != 3:
        _fail(DdxkitError("--targets needs three integers: train,validation,test"))
    cfg = {
        "patients": dict(zip(("train", "validation", "test"), patient_paths)),
        "evidences": evidences,
        "conditions": conditions,
        "templates": templates,
        "targets": target_values,
    }
    try:
        counts = ingest_stage(cfg, Path(out), seed)
    except DdxkitError as exc:
        _fail(exc)
    for split, info in counts.items():
        click.echo(f"{split}: {info['total']} reports")


@main.command()
@click.option("--in", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--term-map", type=click.Path(exists=True), default=None,
              help="term map JSON (default: bundled map)")
@click.option("--sp", type=float, default=0.15, show_default=True)
@click.option("--mtd", type=float, default=0.15, show_default=True)
@click.option("--sp-sentences", type=float, default=0.40, show_default=True,
              help="fraction of sentences paraphrased within an SP sample")
@click.option("--provider", type=click.Choice(["fallback", "remote"]), default="fallback",
              show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", required=True, type=click.Path())
def augment(corpus_path, term_map, sp, mtd, sp_sentences, provider, seed, out):
    """Apply sequence paraphrasing and medical term diversification."""
    from .augment import AugmentPlan, RuleBasedParaphraser, augment_corpus, load_term_map
    from .augment.paraphrase import RemoteParaphraser
    from .corpus import read_corpus, write_corpus

    try:
        corpus = read_corpus(corpus_path)
        plan = AugmentPlan(sp_fraction=sp, mtd_fraction=mtd,
                           sp_sentence_fraction=sp_sentences, seed=seed)
        terms = load_term_map(term_map)
        chosen = RemoteParaphraser() if provider == "remote" else RuleBasedParaphraser(seed=seed)
        modified, manifest = augment_corpus(corpus, plan, terms, chosen)
    except DdxkitError as exc:
        _fail(exc)
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_corpus(out_dir / "corpus.jsonl", modified)
    manifest.save(out_dir / "manifest.json")
    click.echo(f"{len(manifest.edits)} edits over {len(corpus)} reports -> {out_dir}")


@main.group()
def behave() -> None:
    """Behavioral test-set generators."""


@behave.command()
@click.option("--in", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--fraction", type=float, default=0.5, show_default=True)
@click.option("--word-threshold", type=int, default=10, show_default=True,
              help="word count above which a sentence gets multiple typos")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", required=True, type=click.Path())
def typos(corpus_path, fraction, word_threshold, seed, out):
    """Insert keyboard typos into a corpus."""
    from .behave import TypoConfig, insert_typos_corpus
    from .corpus import read_corpus, write_corpus

    try:
        corpus = read_corpus(corpus_path)
        config = TypoConfig(sentence_fraction=fraction,
                            long_sentence_word_threshold=word_threshold, seed=seed)
        modified, manifest = insert_typos_corpus(corpus, config)
    except DdxkitError as exc:
        _fail(exc)
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_corpus(out_dir / "corpus.jsonl", modified)
    manifest.save(out_dir / "manifest.json")
    click.echo(f"{len(manifest.edits)} typos -> {out_dir}")


@behave.command("exclude-history")
@click.option("--in", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", required=True, type=click.Path())
def exclude_history_cmd(corpus_path, seed, out):
    """Randomly drop a share of each report's medical-history sentences."""
    from .behave import ExclusionConfig, exclude_history_corpus
    from .corpus import read_corpus, write_corpus

    try:
        corpus = read_corpus(corpus_path)
        modified, manifest = exclude_history_corpus(corpus, ExclusionConfig(seed=seed))
    except DdxkitError as exc:
        _fail(exc)
    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_corpus(out_dir / "corpus.jsonl", modified)
    manifest.save(out_dir / "manifest.json")
    click.echo(f"{len(manifest.edits)} sentences removed -> {out_dir}")


@behave.command("validate-custom")
@click.option("--in", "path", required=True, type=click.Path(exists=True))
@click.option("--conditions", required=True, type=click.Path(exists=True))
def validate_custom(path, conditions):
    """Validate a custom test set file and print per-pathology counts."""
    from .behave import load_custom_testset, per_pathology_counts
    from .corpus import load_conditions

    try:
        catalog = load_conditions(conditions)
        samples = load_custom_testset(path, catalog)
    except DdxkitError as exc:
        _fail(exc)
    counts = per_pathology_counts(samples, catalog)
    click.echo(f"{len(samples)} samples, {len(counts)} pathologies")
    for code, count in counts.items():
        click.echo(f"  {code}: {count}")


@main.command()
@click.option("--in", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--conditions", required=True, type=click.Path(exists=True),
              help="condition catalog (label names for the checkpoint)")
@click.option("--epochs", type=int, default=10, show_default=True)
@click.option("--batch", type=int, default=16, show_default=True)
@click.option("--lr", type=float, default=1e-3, show_default=True)
@click.option("--wd", type=float, default=0.01, show_default=True)
@click.option("--dim", type=int, default=4096, show_default=True)
@click.option("--hidden", type=int, default=256, show_default=True)
@click.option("--optimizer", type=click.Choice(["adamw_style", "sgd"]),
              default="adamw_style", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", required=True, type=click.Path())
def train(corpus_path, conditions, epochs, batch, lr, wd, dim, hidden, optimizer, seed, out):
    """Train the desk-scale classifier on a report corpus."""
    from .corpus import load_conditions, read_corpus
    from .model import HASH_SALT, TrainConfig, save_checkpoint, train_model

    try:
        corpus = read_corpus(corpus_path)
        catalog = load_conditions(conditions)
        config = TrainConfig(epochs=epochs, batch_size=batch, learning_rate=lr,
                             weight_decay=wd, seed=seed, optimizer=optimizer)
        result = train_model(corpus, config, dim=dim, hidden=hidden)
        model_id = save_checkpoint(out, result.params,
                                   [c.display_name for c in catalog], HASH_SALT, result.log)
    except DdxkitError as exc:
        _fail(exc)
    click.echo(f"model {model_id[:12]} (final loss {result.log['epoch_loss'][-1]:.6f}) -> {out}")


@main.command()
@click.option("--model", "model_path", required=True, type=click.Path(exists=True))
@click.option("--in", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--out", required=True, type=click.Path())
def predict(model_path, corpus_path, out):
    """Write logits for every sample of a corpus."""
    from .corpus import read_scored_samples
    from .model import load_checkpoint
    from .model import predict as run_predict
    from .model.external import export_predictions

    try:
        model = load_checkpoint(model_path)
        samples = read_scored_samples(corpus_path)
        preds = run_predict([s.text for s in samples], model.params, model.dim,
                            model.salt, ids=[s.id for s in samples])
    except DdxkitError as exc:
        _fail(exc)
    export_predictions(out, preds)
    click.echo(f"{len(samples)} predictions -> {out}")


@main.command("eval")
@click.option("--preds", required=True, type=click.Path(exists=True))
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True))
@click.option("--t-conf", type=float, default=0.5, show_default=True)
@click.option("--thresholds", default="0.2,0.95", show_default=True,
              help="comma-separated extra GTD thresholds")
@click.option("--top-k", type=int, default=5, show_default=True)
@click.option("--out", required=True, type=click.Path())
def eval_cmd(preds, corpus_path, t_conf, thresholds, top_k, out):
    """Score a predictions file against a corpus."""
    from .corpus import read_scored_samples
    from .evaluate import EvalConfig, evaluate_run, write_metrics_report
    from .jsonutil import sha256_file
    from .model.external import import_external_predictions

    try:
        samples = read_scored_samples(corpus_path)
        prediction_set = import_external_predictions(preds, samples)
        config = EvalConfig(
            t_conf=t_conf,
            extra_thresholds=tuple(float(t) for t in thresholds.split(",") if t),
            top_k=top_k,
        )
        report = evaluate_run(prediction_set, samples, config)
    except DdxkitError as exc:
        _fail(exc)
    report.provenance = {
        "corpus": sha256_file(corpus_path),
        "predictions": sha256_file(preds),
        "config": {"t_conf": t_conf, "extra_thresholds": list(config.extra_thresholds),
                   "top_k": top_k},
    }
    write_metrics_report(out, report)
    click.echo(
        f"HL {report.hamming_loss:.4f}  P {report.precision:.4f}  R {report.recall:.4f}  "
        f"F1 {report.f1:.4f}  GTD@{t_conf:g} {report.gtd[format(t_conf, 'g')]:.4f}"
    )


@main.command()
@click.option("--model", "model_path", required=True, type=click.Path(exists=True))
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--cors-origin", multiple=True,
              help="allowed CORS origins (default: all)")
def serve(model_path, host, port, cors_origin):
    """Serve the inference API for a checkpoint."""
    import uvicorn

    from .service.app import create_app

    try:
        app = create_app(model_path, list(cors_origin) or None)
    except DdxkitError as exc:
        _fail(exc)
    uvicorn.run(app, host=host, port=port, log_level="info")


@main.command()
@click.option("--config", required=True, type=click.Path(exists=True))
def pipeline(config):
    """Run the declared stages of a pipeline config (YAML or JSON)."""
    from .errors import StageFailure
    from .service.pipeline import run_pipeline

    try:
        summary = run_pipeline(config)
    except StageFailure as exc:
        _fail(exc)
    for stage, info in summary.items():
        click.echo(f"{stage}: {info}")


@main.command()
@click.option("--evidences", required=True, type=click.Path(exists=True))
@click.option("--out", required=True, type=click.Path())
def templates(evidences, out):
    """Derive a starter response-template file from an evidence catalog."""
    from .corpus import load_evidences
    from .corpus.templates import derive_templates, save_templates
    from .jsonutil import read_json

    try:
        catalog = load_evidences(evidences)
    except DdxkitError as exc:
        _fail(exc)
    raw = read_json(evidences)
    meanings = {}
    entries = raw.values() if isinstance(raw, dict) else raw
    for entry in entries:
        vm = entry.get("value_meaning") or {}
        code = entry.get("name") or entry.get("code")
        if vm and code:
            meanings[code] = {
                value: (text.get("en", value) if isinstance(text, dict) else str(text))
                for value, text in vm.items()
            }
    rows = derive_templates(catalog, meanings)
    save_templates(out, rows)
    click.echo(f"{len(rows)} templates -> {out} (hand-edit before production use)")


if __name__ == "__main__":
    main()
