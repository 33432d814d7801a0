"""MinE/MaxE precision, recall, and F per sentence, plus document averages.

MinE is the frame-level metric: precision divides matched frames by the
target's frame total, recall by the source's.  MaxE is the FE-level metric
over matched frames, with the raw FE totals of each whole side as
denominators.  F is the harmonic mean, defined as 0 when p + r = 0.

A sentence with no frames on either side is unscoreable for MinE (and, with
no FEs anywhere, for MaxE) and is excluded from document averages rather than
rewarded for empty output; when only one side is empty, the corresponding
ratio is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .alignment import SentenceAlignment, align_sentence
from .annotations import AnnotatedDocument, OverrideError
from .overlays import DocumentOverlay


@dataclass(frozen=True)
class SentenceScores:
    """Six per-sentence ratios; None marks a metric unscoreable on this sentence."""

    p_mine: float | None
    r_mine: float | None
    f_mine: float | None
    p_maxe: float | None
    r_maxe: float | None
    f_maxe: float | None

    @property
    def mine_scoreable(self) -> bool:
        return self.f_mine is not None

    @property
    def maxe_scoreable(self) -> bool:
        return self.f_maxe is not None

    @property
    def scoreable(self) -> bool:
        return self.mine_scoreable or self.maxe_scoreable


@dataclass(frozen=True)
class DocumentScores:
    doc_id: str
    system_id: str
    per_sentence: Mapping[int, SentenceScores]
    avg_f_mine: float | None
    avg_f_maxe: float | None
    n_scored_mine: int
    n_scored_maxe: int


def f_score(p: float, r: float) -> float:
    return 0.0 if p + r == 0 else 2 * p * r / (p + r)


def _prf(matched: int, target_total: int, source_total: int) -> tuple[float | None, ...]:
    if target_total == 0 and source_total == 0:
        return (None, None, None)
    p = matched / target_total if target_total else 0.0
    r = matched / source_total if source_total else 0.0
    return (p, r, f_score(p, r))


def mine_scores(alignment: SentenceAlignment) -> tuple[float | None, ...]:
    """Frame-level (precision, recall, F) for one aligned sentence."""
    return _prf(alignment.matched_frame_count, alignment.target_frame_count,
                alignment.source_frame_count)


def maxe_scores(alignment: SentenceAlignment) -> tuple[float | None, ...]:
    """FE-level (precision, recall, F) for one aligned sentence."""
    return _prf(alignment.matched_element_count, alignment.target_element_count,
                alignment.source_element_count)


def sentence_scores(alignment: SentenceAlignment) -> SentenceScores:
    p_mine, r_mine, f_mine = mine_scores(alignment)
    p_maxe, r_maxe, f_maxe = maxe_scores(alignment)
    return SentenceScores(p_mine=p_mine, r_mine=r_mine, f_mine=f_mine,
                          p_maxe=p_maxe, r_maxe=r_maxe, f_maxe=f_maxe)


def score_document(doc: AnnotatedDocument, overlay: DocumentOverlay | None = None,
                   aliases: Mapping[str, str] | None = None) -> DocumentScores:
    """Align and score every sentence; average F over scoreable sentences.

    Averages are unweighted arithmetic means of sentence F-scores, computed
    independently for each metric over the sentences scoreable for it.
    """
    if overlay is not None and overlay.doc_id != doc.doc_id:
        raise OverrideError(
            f"overlay is for document {overlay.doc_id!r}, not {doc.doc_id!r}")
    per_sentence: dict[int, SentenceScores] = {}
    for pair in doc.sentences:
        sentence_overlay = overlay.for_sentence(pair.id) if overlay is not None else None
        try:
            alignment = align_sentence(pair, sentence_overlay, aliases)
        except OverrideError as exc:
            raise OverrideError(f"sentence {pair.id}: {exc}") from exc
        per_sentence[pair.id] = sentence_scores(alignment)

    mine_values = [s.f_mine for s in per_sentence.values() if s.f_mine is not None]
    maxe_values = [s.f_maxe for s in per_sentence.values() if s.f_maxe is not None]
    return DocumentScores(
        doc_id=doc.doc_id,
        system_id=doc.system_id,
        per_sentence=per_sentence,
        avg_f_mine=sum(mine_values) / len(mine_values) if mine_values else None,
        avg_f_maxe=sum(maxe_values) / len(maxe_values) if maxe_values else None,
        n_scored_mine=len(mine_values),
        n_scored_maxe=len(maxe_values),
    )
