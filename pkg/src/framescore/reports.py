"""Report rendering: JSON dicts at full precision, text tables at 2 decimals.

Human-facing tables round half-up to two decimals to mirror published score
tables; the JSON forms keep full float precision for machine consumers.
Rendering is deterministic: same input, byte-identical output.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal
from typing import Mapping

from .bleu import BleuScore
from .correlation import MetricCorrelation
from .scoring import DocumentScores, SentenceScores

SCORE_ROW_LABELS = ("P_MinE", "R_MinE", "F_MinE", "P_MaxE", "R_MaxE", "F_MaxE")

# Display order and labels for correlation tables.
METRIC_LABELS = {"mine": "MinE", "maxe": "MaxE", "bleu": "BLEU"}


def round2(value: float | None) -> str:
    """Half-up rounding to 2 decimals; '-' for unscoreable."""
    if value is None:
        return "-"
    return str(Decimal(repr(value)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _score_values(scores: SentenceScores) -> tuple[float | None, ...]:
    return (scores.p_mine, scores.r_mine, scores.f_mine,
            scores.p_maxe, scores.r_maxe, scores.f_maxe)


def score_report_dict(doc_scores: DocumentScores) -> dict:
    per_sentence = {}
    for sentence_id in sorted(doc_scores.per_sentence):
        s = doc_scores.per_sentence[sentence_id]
        per_sentence[str(sentence_id)] = {
            "p_mine": s.p_mine, "r_mine": s.r_mine, "f_mine": s.f_mine,
            "p_maxe": s.p_maxe, "r_maxe": s.r_maxe, "f_maxe": s.f_maxe,
        }
    return {
        "doc_id": doc_scores.doc_id,
        "system_id": doc_scores.system_id,
        "per_sentence": per_sentence,
        "avg_f_mine": doc_scores.avg_f_mine,
        "avg_f_maxe": doc_scores.avg_f_maxe,
        "n_scored_mine": doc_scores.n_scored_mine,
        "n_scored_maxe": doc_scores.n_scored_maxe,
    }


def render_score_table(doc_scores: DocumentScores) -> str:
    """Per-sentence score table (metric rows, sentence columns) plus averages."""
    sentence_ids = sorted(doc_scores.per_sentence)
    headers = ["sentence"] + [str(i) for i in sentence_ids]
    rows = []
    for label_idx, label in enumerate(SCORE_ROW_LABELS):
        row = [label]
        for sentence_id in sentence_ids:
            values = _score_values(doc_scores.per_sentence[sentence_id])
            row.append(round2(values[label_idx]))
        rows.append(row)

    widths = [max(len(str(cell)) for cell in column) for column in zip(headers, *rows)]
    lines = [f"document: {doc_scores.doc_id}  system: {doc_scores.system_id}"]
    lines.append("  ".join(h.rjust(w) for h, w in zip(headers, widths)))
    for row in rows:
        lines.append("  ".join(str(c).rjust(w) for c, w in zip(row, widths)))
    lines.append("")
    lines.append(f"average F_MinE  {round2(doc_scores.avg_f_mine)}  "
                 f"(sentences scored: {doc_scores.n_scored_mine})")
    lines.append(f"average F_MaxE  {round2(doc_scores.avg_f_maxe)}  "
                 f"(sentences scored: {doc_scores.n_scored_maxe})")
    return "\n".join(lines) + "\n"


def render_score_csv(doc_scores: DocumentScores) -> str:
    lines = ["sentence_id,p_mine,r_mine,f_mine,p_maxe,r_maxe,f_maxe"]
    for sentence_id in sorted(doc_scores.per_sentence):
        values = _score_values(doc_scores.per_sentence[sentence_id])
        cells = [str(sentence_id)] + ["" if v is None else repr(v) for v in values]
        lines.append(",".join(cells))
    avg_mine = "" if doc_scores.avg_f_mine is None else repr(doc_scores.avg_f_mine)
    avg_maxe = "" if doc_scores.avg_f_maxe is None else repr(doc_scores.avg_f_maxe)
    lines.append(f"average,,,{avg_mine},,,{avg_maxe}")
    return "\n".join(lines) + "\n"


def bleu_report_dict(doc_id: str, system_id: str, per_sentence: Mapping[int, BleuScore],
                     tokenization: str, max_n: int) -> dict:
    sentences = {}
    for sentence_id in sorted(per_sentence):
        b = per_sentence[sentence_id]
        sentences[str(sentence_id)] = {
            "bleu": b.score,
            "brevity_penalty": b.brevity_penalty,
            "ngram_precisions": list(b.ngram_precisions),
        }
    scores = [b.score for b in per_sentence.values()]
    return {
        "doc_id": doc_id,
        "system_id": system_id,
        "tokenization": tokenization,
        "max_n": max_n,
        "per_sentence": sentences,
        "avg_bleu": sum(scores) / len(scores) if scores else None,
        "n_sentences": len(scores),
    }


def render_bleu_table(report: dict) -> str:
    lines = [f"document: {report['doc_id']}  system: {report['system_id']}  "
             f"(tokenization: {report['tokenization']}, max_n: {report['max_n']})"]
    lines.append("sentence  BLEU")
    for sentence_id, entry in report["per_sentence"].items():
        lines.append(f"{sentence_id.rjust(8)}  {round2(entry['bleu'])}")
    lines.append(f" average  {round2(report['avg_bleu'])}")
    return "\n".join(lines) + "\n"


def correlation_report_dict(results: Mapping[str, MetricCorrelation]) -> dict:
    per_metric = {metric: results[metric].average_rho
                  for metric in _metric_order(results)}
    used = {results[m].sentences_used for m in results}
    skipped = {results[m].sentences_skipped for m in results}
    report: dict = {"per_metric": per_metric}
    report["n_sentences_used"] = (used.pop() if len(used) == 1 else
                                  {m: results[m].sentences_used for m in _metric_order(results)})
    report["n_sentences_skipped"] = (skipped.pop() if len(skipped) == 1 else
                                     {m: results[m].sentences_skipped
                                      for m in _metric_order(results)})
    return report


def render_correlation_table(results: Mapping[str, MetricCorrelation]) -> str:
    lines = ["metric  correlation_with_human"]
    for metric in _metric_order(results):
        label = METRIC_LABELS.get(metric, metric)
        lines.append(f"{label:<6}  {round2(results[metric].average_rho)}")
    used = ", ".join(f"{METRIC_LABELS.get(m, m)}: {results[m].sentences_used}"
                     for m in _metric_order(results))
    lines.append(f"(sentences used - {used})")
    return "\n".join(lines) + "\n"


def _metric_order(results: Mapping[str, MetricCorrelation]) -> list[str]:
    known = [m for m in ("mine", "maxe", "bleu") if m in results]
    extra = sorted(m for m in results if m not in METRIC_LABELS)
    return known + extra
