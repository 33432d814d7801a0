#!/usr/bin/env python3
"""Rank the three bundled systems per metric and correlate with the human judge.

Reproduces the example-sentence rank exercise: MinE and MaxE order the systems
exactly as the human does (rho = 1.0) while BLEU swaps the lower two
(rho = 0.5).
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

from framescore import correlate_metrics, rank
from framescore.reports import METRIC_LABELS, render_correlation_table

TABLE5 = Path(__file__).resolve().parent.parent / "corpus" / "table5"
SYSTEMS = ["Reference", "SI", "MT"]


def load_scores() -> dict[str, dict[int, dict[str, float]]]:
    metric_scores: dict[str, dict[int, dict[str, float]]] = {}
    for path in sorted(TABLE5.glob("*.json")):
        report = json.loads(path.read_text(encoding="utf-8"))
        for sentence_key, entry in report["per_sentence"].items():
            for key, metric in (("f_mine", "mine"), ("f_maxe", "maxe"), ("bleu", "bleu")):
                if key in entry:
                    metric_scores.setdefault(metric, {}).setdefault(
                        int(sentence_key), {})[report["system_id"]] = entry[key]
    return metric_scores


def load_human() -> dict[int, dict[str, float]]:
    human: dict[int, dict[str, float]] = {}
    with open(TABLE5 / "human_scores.csv", newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        for row in reader:
            human.setdefault(int(row["sentence_id"]), {})[row["system_id"]] = float(row["score"])
    return human


def main() -> None:
    metric_scores = load_scores()
    human = load_human()

    print("per-metric scores and ranks for sentence 20")
    print(f"{'metric':8}" + "".join(f"{s:>12}" for s in SYSTEMS))
    for metric in ("mine", "maxe", "bleu"):
        values = [metric_scores[metric][20][s] for s in SYSTEMS]
        ranks = rank(values).ranks
        cells = [f"{v:.2f} ({r:.0f})" for v, r in zip(values, ranks)]
        print(f"{METRIC_LABELS[metric]:8}" + "".join(f"{c:>12}" for c in cells))
    human_values = [human[20][s] for s in SYSTEMS]
    human_ranks = rank(human_values).ranks
    cells = [f"{v:.0f} ({r:.0f})" for v, r in zip(human_values, human_ranks)]
    print(f"{'Human':8}" + "".join(f"{c:>12}" for c in cells))

    print()
    print(render_correlation_table(correlate_metrics(metric_scores, human)), end="")


if __name__ == "__main__":
    main()
