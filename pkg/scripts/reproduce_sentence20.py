#!/usr/bin/env python3
"""Score the four bundled interpreting outputs of sentence 20 side by side.

Prints the six MinE/MaxE rows with one column per system, the sentence-level
alignment counts behind them, and the per-system document averages.
"""

from __future__ import annotations

from pathlib import Path

from framescore import align_sentence, parse_document, score_document
from framescore.reports import SCORE_ROW_LABELS, round2

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
SYSTEMS = ["si", "ji01", "ji02", "ji03"]


def main() -> None:
    docs = {slug: parse_document((CORPUS / f"sentence20_{slug}.json").read_bytes())
            for slug in SYSTEMS}
    scores = {slug: score_document(doc) for slug, doc in docs.items()}
    labels = [docs[slug].system_id for slug in SYSTEMS]

    print("sentence 20, scores per system")
    print(f"{'':8}" + "".join(f"{label:>8}" for label in labels))
    for row_index, row_label in enumerate(SCORE_ROW_LABELS):
        cells = []
        for slug in SYSTEMS:
            s = scores[slug].per_sentence[20]
            values = (s.p_mine, s.r_mine, s.f_mine, s.p_maxe, s.r_maxe, s.f_maxe)
            cells.append(round2(values[row_index]))
        print(f"{row_label:8}" + "".join(f"{cell:>8}" for cell in cells))

    print("\nalignment counts (matched/target/source frames; matched/target/source FEs)")
    for slug in SYSTEMS:
        a = align_sentence(docs[slug].sentences[0])
        print(f"{docs[slug].system_id:>6}:  frames {a.matched_frame_count}/"
              f"{a.target_frame_count}/{a.source_frame_count}   "
              f"FEs {a.matched_element_count}/{a.target_element_count}/"
              f"{a.source_element_count}")


if __name__ == "__main__":
    main()
