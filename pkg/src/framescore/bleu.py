"""Sentence-level BLEU baseline.

Standard modified n-gram precision with per-reference clipping, a geometric
mean over orders 1..max_n, and the exp(1 - r/c) brevity penalty against the
closest reference length.  The add-one smoothing variant adds 1 to numerator
and denominator for orders >= 2, so identical candidate/reference pairs score
exactly 1.0 even for very short sentences; unigram precision stays raw, so
candidates sharing no tokens with any reference score 0.

For Han-script text, per-character tokenization is the sensible mode; the
whitespace mode suits space-delimited languages.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

TOKENIZE_WHITESPACE = "whitespace"
TOKENIZE_PER_CHARACTER = "per_character"
SMOOTH_NONE = "none"
SMOOTH_ADD_ONE_HI = "add_one_hi"


@dataclass(frozen=True)
class BleuConfig:
    max_n: int = 4
    smoothing: str = SMOOTH_ADD_ONE_HI
    tokenization: str = TOKENIZE_WHITESPACE

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be >= 1")
        if self.smoothing not in (SMOOTH_NONE, SMOOTH_ADD_ONE_HI):
            raise ValueError(f"unknown smoothing {self.smoothing!r}")
        if self.tokenization not in (TOKENIZE_WHITESPACE, TOKENIZE_PER_CHARACTER):
            raise ValueError(f"unknown tokenization {self.tokenization!r}")


@dataclass(frozen=True)
class BleuScore:
    score: float
    ngram_precisions: tuple[float, ...]
    brevity_penalty: float


def tokenize(text: str, mode: str = TOKENIZE_WHITESPACE) -> list[str]:
    if mode == TOKENIZE_WHITESPACE:
        return text.split()
    if mode == TOKENIZE_PER_CHARACTER:
        return [ch for ch in text if not ch.isspace()]
    raise ValueError(f"unknown tokenization {mode!r}")


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def sentence_bleu(candidate: Sequence[str], references: Sequence[Sequence[str]],
                  cfg: BleuConfig = BleuConfig()) -> BleuScore:
    """Score one tokenized candidate against one or more tokenized references."""
    if not references:
        raise ValueError("at least one reference is required")
    if not candidate:
        return BleuScore(score=0.0, ngram_precisions=(0.0,) * cfg.max_n, brevity_penalty=0.0)

    precisions: list[float] = []
    for n in range(1, cfg.max_n + 1):
        cand_ngrams = _ngrams(candidate, n)
        total = sum(cand_ngrams.values())
        correct = 0
        if cand_ngrams:
            ref_counts = [_ngrams(ref, n) for ref in references]
            correct = sum(min(count, max(rc[gram] for rc in ref_counts))
                          for gram, count in cand_ngrams.items())
        if cfg.smoothing == SMOOTH_ADD_ONE_HI and n >= 2:
            correct += 1
            total += 1
        precisions.append(correct / total if total > 0 else 0.0)

    cand_len = len(candidate)
    ref_len = min((len(ref) for ref in references),
                  key=lambda rl: (abs(rl - cand_len), rl))
    brevity_penalty = 1.0 if cand_len >= ref_len else math.exp(1.0 - ref_len / cand_len)

    if min(precisions) > 0.0:
        score = brevity_penalty * math.exp(sum(math.log(p) for p in precisions) / cfg.max_n)
    else:
        score = 0.0
    return BleuScore(score=score, ngram_precisions=tuple(precisions),
                     brevity_penalty=brevity_penalty)


def bleu_from_texts(candidate_text: str, reference_texts: Sequence[str],
                    cfg: BleuConfig = BleuConfig()) -> BleuScore:
    candidate = tokenize(candidate_text, cfg.tokenization)
    references = [tokenize(ref, cfg.tokenization) for ref in reference_texts]
    return sentence_bleu(candidate, references, cfg)
