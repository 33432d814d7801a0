"""Spearman rank correlation between metric rankings and human judgments.

Systems are ranked per sentence (rank 1 = best, ties averaged) and the rank
difference formula rho = 1 - 6*sum(d_i^2) / (n*(n^2 - 1)) is applied directly,
fractional tie ranks included; with ties this deviates slightly from
Pearson-on-ranks, which is accepted for the sake of keeping the stated
formula.  Sentence-level rhos are arithmetic-averaged per metric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence


@dataclass(frozen=True)
class RankVector:
    """Ranks with 1 = best; tied scores share the average of the ranks they span."""

    ranks: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.ranks)


@dataclass(frozen=True)
class CorrelationResult:
    rho: float
    rank_differences: tuple[float, ...]
    n: int


@dataclass(frozen=True)
class MetricCorrelation:
    average_rho: float
    sentences_used: int
    sentences_skipped: int


def rank(scores: Sequence[float], higher_is_better: bool = True) -> RankVector:
    """Rank scores 1..n (1 = best), averaging ranks over ties."""
    if not scores:
        raise ValueError("cannot rank an empty score list")
    for s in scores:
        if not math.isfinite(s):
            raise ValueError(f"scores must be finite, got {s!r}")
    keyed = sorted(range(len(scores)),
                   key=lambda i: -scores[i] if higher_is_better else scores[i])
    ranks = [0.0] * len(scores)
    position = 0
    while position < len(keyed):
        tied_end = position
        while (tied_end + 1 < len(keyed)
               and scores[keyed[tied_end + 1]] == scores[keyed[position]]):
            tied_end += 1
        average = (position + tied_end) / 2 + 1
        for idx in keyed[position:tied_end + 1]:
            ranks[idx] = average
        position = tied_end + 1
    return RankVector(ranks=tuple(ranks))


def spearman_rho(a: RankVector, b: RankVector) -> CorrelationResult:
    """Rank-difference correlation over two rank vectors of equal length (n >= 2)."""
    if a.n != b.n:
        raise ValueError(f"rank vectors differ in length: {a.n} vs {b.n}")
    if a.n < 2:
        raise ValueError("correlation needs at least 2 systems")
    differences = tuple(x - y for x, y in zip(a.ranks, b.ranks))
    n = a.n
    rho = 1.0 - 6.0 * sum(d * d for d in differences) / (n * (n * n - 1))
    return CorrelationResult(rho=rho, rank_differences=differences, n=n)


def correlate_metrics(
    metric_scores: Mapping[str, Mapping[int, Mapping[str, float]]],
    human: Mapping[int, Mapping[str, float]],
) -> dict[str, MetricCorrelation]:
    """Average per-sentence rho of each metric's ranking against the human ranking.

    For each sentence, only systems scored by both the metric and the human
    enter the ranking; sentences with fewer than 2 such systems are skipped
    and counted.  A metric with no eligible sentence at all is an error.
    """
    results: dict[str, MetricCorrelation] = {}
    for metric, per_sentence in metric_scores.items():
        rhos: list[float] = []
        skipped = 0
        for sentence_id in sorted(per_sentence):
            systems = sorted(set(per_sentence[sentence_id]) & set(human.get(sentence_id, {})))
            if len(systems) < 2:
                skipped += 1
                continue
            metric_ranks = rank([per_sentence[sentence_id][s] for s in systems])
            human_ranks = rank([human[sentence_id][s] for s in systems])
            rhos.append(spearman_rho(metric_ranks, human_ranks).rho)
        if not rhos:
            raise ValueError(
                f"metric {metric!r}: no sentence has >= 2 systems scored by both "
                "the metric and the human judge")
        results[metric] = MetricCorrelation(
            average_rho=sum(rhos) / len(rhos),
            sentences_used=len(rhos),
            sentences_skipped=skipped,
        )
    return results
