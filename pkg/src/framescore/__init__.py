"""Frame-semantic interpreting quality evaluation.

Semantic scoring of interpreted speech against its source: frame-level and
FE-level matching (MinE/MaxE precision, recall, F), a sentence-level BLEU
baseline, Spearman rank correlation with human judgments, and a
human-in-the-loop adjudication service for match overrides and keyword
mistranslation flags.
"""

from .alignment import (
    FEMatchResult,
    FramePair,
    FramePairing,
    PairElementMatches,
    SentenceAlignment,
    align_sentence,
    apply_keyword_penalties,
    match_frame_elements,
    match_frames,
    pair_frame_instances,
)
from .annotations import (
    AnnotatedDocument,
    FEInstance,
    FrameInstance,
    KeywordMention,
    OverrideError,
    ParseError,
    SchemaError,
    SentencePair,
    UnknownFieldWarning,
    ValidationIssue,
    ValidationReport,
    make_document,
    make_fe,
    make_frame,
    make_sentence,
    normalize_label,
    parse_document,
    serialize_document,
    validate_document,
)
from .bleu import BleuConfig, BleuScore, bleu_from_texts, sentence_bleu, tokenize
from .correlation import (
    CorrelationResult,
    MetricCorrelation,
    RankVector,
    correlate_metrics,
    rank,
    spearman_rho,
)
from .overlays import (
    DocumentOverlay,
    FramePairOverride,
    KeywordFlag,
    SentenceOverlay,
    load_overlay,
    parse_overlay,
    serialize_overlay,
)
from .scoring import (
    DocumentScores,
    SentenceScores,
    maxe_scores,
    mine_scores,
    score_document,
    sentence_scores,
)

__version__ = "0.1.0"
