"""framescore command line: score, bleu, correlate, validate, serve.

Exit codes: 0 on success, 1 for validation/scoring failures (unreadable or
invalid inputs), 2 for usage errors (argparse's own convention).  Identical
invocations on identical inputs print byte-identical reports.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from .annotations import AnnotatedDocument, ParseError, SchemaError, parse_document, validate_document
from .bleu import (
    SMOOTH_ADD_ONE_HI,
    TOKENIZE_PER_CHARACTER,
    TOKENIZE_WHITESPACE,
    BleuConfig,
    bleu_from_texts,
)
from .correlation import correlate_metrics
from .overlays import load_overlay
from .reports import (
    bleu_report_dict,
    correlation_report_dict,
    render_bleu_table,
    render_correlation_table,
    render_score_csv,
    render_score_table,
    score_report_dict,
)
from .scoring import score_document

DATA_DIR_ENV = "FRAMESCORE_DATA_DIR"

# Metric keys recognized in per-sentence report entries, mapped to the
# metric names used in correlation output.
REPORT_METRIC_KEYS = {"f_mine": "mine", "f_maxe": "maxe", "bleu": "bleu"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framescore",
        description="Frame-semantic interpreting quality scoring (MinE/MaxE), "
                    "BLEU baseline, and correlation with human judgments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_score = sub.add_parser("score", help="score a document's MinE/MaxE per sentence")
    p_score.add_argument("document", help="annotated document JSON file")
    p_score.add_argument("--overlay", help="adjudication overlay JSON file")
    p_score.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_score.set_defaults(func=run_score)

    p_bleu = sub.add_parser("bleu", help="sentence-level BLEU of a candidate against a reference")
    p_bleu.add_argument("candidate", help="candidate document JSON file")
    p_bleu.add_argument("reference", help="reference document JSON file (target_text is the reference)")
    p_bleu.add_argument("--tokenize", choices=("whitespace", "char"), default="whitespace")
    p_bleu.add_argument("--format", choices=("table", "json"), default="table")
    p_bleu.set_defaults(func=run_bleu)

    p_corr = sub.add_parser("correlate",
                            help="Spearman correlation of metric rankings vs human judgments")
    p_corr.add_argument("reports", nargs="+", help="metric report JSON files (score or bleu output)")
    p_corr.add_argument("--human", required=True,
                        help="CSV of human judgments: sentence_id,system_id,score")
    p_corr.add_argument("--format", choices=("table", "json"), default="table")
    p_corr.set_defaults(func=run_correlate)

    p_val = sub.add_parser("validate", help="validate a document file")
    p_val.add_argument("document", help="annotated document JSON file")
    p_val.set_defaults(func=run_validate)

    p_serve = sub.add_parser("serve", help="run the adjudication HTTP service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--data", help=f"data directory (default: ${DATA_DIR_ENV} or ./corpus)")
    p_serve.add_argument("--ui", help="directory of built UI assets to serve at /")
    p_serve.set_defaults(func=run_serve)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


def _fail(message: str) -> int:
    print(f"framescore: error: {message}", file=sys.stderr)
    return 1


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _emit_json(report: dict) -> None:
    _emit(json.dumps(report, ensure_ascii=False, indent=2) + "\n")


def _load_document(path: str) -> AnnotatedDocument:
    """Read and parse a document or raise ValueError with a path-bearing message."""
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return parse_document(data)
    except (ParseError, SchemaError) as exc:
        raise ValueError(f"{path}: {exc}") from exc


def run_score(args) -> int:
    try:
        doc = _load_document(args.document)
    except ValueError as exc:
        return _fail(str(exc))

    overlay = None
    if args.overlay:
        try:
            overlay = load_overlay(args.overlay, expected_doc_id=doc.doc_id)
        except (OSError, ParseError, SchemaError) as exc:
            return _fail(f"{args.overlay}: {exc}")

    report = validate_document(doc, overlay)
    if not report.ok:
        for issue in report.errors:
            print(f"framescore: {args.document}: sentence {issue.sentence_id}: "
                  f"{issue.path}: {issue.message}", file=sys.stderr)
        return 1

    scores = score_document(doc, overlay)
    if args.format == "json":
        _emit_json(score_report_dict(scores))
    elif args.format == "csv":
        _emit(render_score_csv(scores))
    else:
        _emit(render_score_table(scores))
    return 0


def run_bleu(args) -> int:
    try:
        candidate = _load_document(args.candidate)
        reference = _load_document(args.reference)
    except ValueError as exc:
        return _fail(str(exc))

    reference_by_id = {s.id: s for s in reference.sentences}
    missing = [s.id for s in candidate.sentences if s.id not in reference_by_id]
    if missing:
        return _fail(f"reference {args.reference} is missing sentence ids: "
                     f"{', '.join(str(i) for i in missing)}")

    tokenization = (TOKENIZE_PER_CHARACTER if args.tokenize == "char"
                    else TOKENIZE_WHITESPACE)
    cfg = BleuConfig(max_n=4, smoothing=SMOOTH_ADD_ONE_HI, tokenization=tokenization)
    per_sentence = {
        s.id: bleu_from_texts(s.target_text, [reference_by_id[s.id].target_text], cfg)
        for s in candidate.sentences
    }
    report = bleu_report_dict(candidate.doc_id, candidate.system_id, per_sentence,
                              tokenization, cfg.max_n)
    if args.format == "json":
        _emit_json(report)
    else:
        _emit(render_bleu_table(report))
    return 0


def _read_human_csv(path: str) -> dict[int, dict[str, float]]:
    try:
        handle = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror or exc}") from exc
    human: dict[int, dict[str, float]] = {}
    with handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != ["sentence_id", "system_id", "score"]:
            raise ValueError(f"{path}: line 1: expected header 'sentence_id,system_id,score'")
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 3:
                raise ValueError(f"{path}: line {line_no}: expected 3 fields, got {len(row)}")
            try:
                sentence_id = int(row[0])
                score = float(row[2])
            except ValueError:
                raise ValueError(f"{path}: line {line_no}: malformed row {row!r}") from None
            system_id = row[1].strip()
            if not system_id:
                raise ValueError(f"{path}: line {line_no}: empty system_id")
            if system_id in human.get(sentence_id, {}):
                raise ValueError(f"{path}: line {line_no}: duplicate score for "
                                 f"sentence {sentence_id}, system {system_id!r}")
            human.setdefault(sentence_id, {})[system_id] = score
    return human


def _read_metric_reports(paths) -> dict[str, dict[int, dict[str, float]]]:
    metric_scores: dict[str, dict[int, dict[str, float]]] = {}
    for path in paths:
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise ValueError(f"cannot read {path}: {exc.strerror or exc}") from exc
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON: {exc}") from exc
        system_id = raw.get("system_id")
        if not system_id:
            raise ValueError(f"{path}: report has no system_id")
        per_sentence = raw.get("per_sentence")
        if not isinstance(per_sentence, dict):
            raise ValueError(f"{path}: report has no per_sentence map")
        for sentence_key, entry in per_sentence.items():
            try:
                sentence_id = int(sentence_key)
            except ValueError:
                raise ValueError(f"{path}: bad sentence id {sentence_key!r}") from None
            for key, metric in REPORT_METRIC_KEYS.items():
                value = entry.get(key)
                if value is None:
                    continue
                sentences = metric_scores.setdefault(metric, {})
                systems = sentences.setdefault(sentence_id, {})
                if system_id in systems:
                    raise ValueError(f"{path}: duplicate {metric} score for sentence "
                                     f"{sentence_id}, system {system_id!r}")
                systems[system_id] = float(value)
    if not metric_scores:
        raise ValueError("no metric values found in the given reports "
                         f"(looked for {', '.join(sorted(REPORT_METRIC_KEYS))})")
    return metric_scores


def run_correlate(args) -> int:
    try:
        metric_scores = _read_metric_reports(args.reports)
        human = _read_human_csv(args.human)
    except ValueError as exc:
        return _fail(str(exc))

    report_systems = {system
                      for sentences in metric_scores.values()
                      for systems in sentences.values()
                      for system in systems}
    human_systems = {system for systems in human.values() for system in systems}
    missing = sorted(report_systems - human_systems)
    if missing:
        return _fail(f"{args.human}: no human scores for system(s): {', '.join(missing)}")

    try:
        results = correlate_metrics(metric_scores, human)
    except ValueError as exc:
        return _fail(str(exc))

    if args.format == "json":
        _emit_json(correlation_report_dict(results))
    else:
        _emit(render_correlation_table(results))
    return 0


def run_validate(args) -> int:
    try:
        doc = _load_document(args.document)
    except ValueError as exc:
        return _fail(str(exc))
    report = validate_document(doc)
    for issue in report.warnings:
        print(f"warning: sentence {issue.sentence_id}: {issue.path}: {issue.message}")
    if report.ok:
        print(f"{args.document}: OK ({len(doc.sentences)} sentence(s))")
        return 0
    for issue in report.errors:
        print(f"error: sentence {issue.sentence_id}: {issue.path}: {issue.message}")
    print(f"{args.document}: {len(report.errors)} error(s)")
    return 1


def run_serve(args) -> int:
    import uvicorn

    from .service import create_app

    data_dir = args.data or os.environ.get(DATA_DIR_ENV) or "corpus"
    if not Path(data_dir).is_dir():
        return _fail(f"data directory not found: {data_dir}")
    ui_dir = args.ui or _default_ui_dir()
    app = create_app(data_dir, ui_dir=ui_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def _default_ui_dir() -> str | None:
    candidate = Path("frontend") / "dist"
    return str(candidate) if candidate.is_dir() else None


if __name__ == "__main__":
    sys.exit(main())
