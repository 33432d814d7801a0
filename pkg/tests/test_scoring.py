import pytest

from framescore import (
    DocumentOverlay,
    OverrideError,
    SentenceAlignment,
    align_sentence,
    make_document,
    make_fe,
    make_frame,
    make_sentence,
    maxe_scores,
    mine_scores,
    score_document,
    sentence_scores,
)
from framescore.alignment import FEMatchResult, FramePairing
from framescore.reports import round2


def alignment_with_counts(matched_frames, target_frames, source_frames,
                          matched_elements=0, target_elements=0, source_elements=0):
    return SentenceAlignment(
        matched_frame_count=matched_frames,
        target_frame_count=target_frames,
        source_frame_count=source_frames,
        matched_element_count=matched_elements,
        target_element_count=target_elements,
        source_element_count=source_elements,
        pairing=FramePairing(pairs=(), unmatched_source=(), unmatched_target=()),
        fe_result=FEMatchResult(per_pair=()),
    )


class TestMineScores:
    @pytest.mark.parametrize("counts, expected", [
        ((5, 6, 6), (0.83, 0.83, 0.83)),   # senior interpreter, sentence 20
        ((2, 5, 6), (0.40, 0.33, 0.36)),   # first junior
        ((5, 7, 6), (0.71, 0.83, 0.77)),   # third junior
        ((0, 3, 3), (0.0, 0.0, 0.0)),
    ])
    def test_published_values(self, counts, expected):
        p, r, f = mine_scores(alignment_with_counts(*counts))
        for got, want in zip((p, r, f), expected):
            assert got == pytest.approx(want, abs=0.01)

    def test_exact_ratios(self):
        p, r, f = mine_scores(alignment_with_counts(5, 6, 6))
        assert p == 5 / 6
        assert r == 5 / 6
        assert f == pytest.approx(5 / 6)


class TestMaxeScores:
    @pytest.mark.parametrize("counts, expected", [
        ((10, 12, 15), (0.83, 0.67, 0.74)),
        ((8, 10, 15), (0.80, 0.53, 0.64)),
        ((8, 12, 15), (0.67, 0.53, 0.59)),  # paper prints 8/12 truncated as 0.66
    ])
    def test_published_values(self, counts, expected):
        m, t, s = counts
        p, r, f = maxe_scores(alignment_with_counts(1, 1, 1, m, t, s))
        for got, want in zip((p, r, f), expected):
            assert got == pytest.approx(want, abs=0.01)

    @pytest.mark.parametrize("k", [1, 3, 12])
    def test_identity(self, k):
        p, r, f = maxe_scores(alignment_with_counts(1, 1, 1, k, k, k))
        assert (p, r, f) == (1.0, 1.0, 1.0)


class TestZeroDenominators:
    def test_both_sides_empty_is_unscoreable(self):
        scores = sentence_scores(alignment_with_counts(0, 0, 0))
        assert not scores.mine_scoreable
        assert not scores.maxe_scoreable
        assert not scores.scoreable
        assert scores.p_mine is None and scores.f_maxe is None

    def test_one_side_empty_scores_zero(self):
        # interpreter produced nothing: precision denominator empty
        scores = sentence_scores(alignment_with_counts(0, 0, 4, 0, 0, 7))
        assert scores.p_mine == 0.0
        assert scores.r_mine == 0.0
        assert scores.f_mine == 0.0
        assert scores.scoreable

    def test_frames_without_elements(self):
        # MinE scoreable, MaxE not
        scores = sentence_scores(alignment_with_counts(1, 1, 1, 0, 0, 0))
        assert scores.mine_scoreable
        assert not scores.maxe_scoreable
        assert scores.scoreable


class TestScoreDocument:
    def test_single_sentence_average_is_forced(self, si20_doc):
        scores = score_document(si20_doc)
        assert scores.avg_f_mine == pytest.approx(0.83, abs=0.01)
        assert scores.avg_f_maxe == pytest.approx(0.74, abs=0.01)
        assert scores.n_scored_mine == scores.n_scored_maxe == 1

    def test_two_sentence_arithmetic_mean(self):
        # sentence 1 aligns perfectly (F=1.0); sentence 2 matches one of two
        # frames with symmetric counts (F=0.5).
        full = make_frame("Supply", "equip", [make_fe("Recipient")])
        other = make_frame("Bringing", "bring", [make_fe("Theme")])
        miss = make_frame("Existence", "none", [make_fe("Entity")])
        doc = make_document("two", [
            make_sentence(1, "a", "b", [full], [full]),
            make_sentence(2, "a", "b", [full, other], [full, miss]),
        ])
        scores = score_document(doc)
        assert scores.per_sentence[1].f_mine == 1.0
        assert scores.per_sentence[2].f_mine == 0.5
        assert scores.avg_f_mine == pytest.approx(0.75)

    def test_self_aligned_document_scores_one(self, si20_doc):
        pair = si20_doc.sentences[0]
        doc = make_document("self", [make_sentence(
            20, pair.source_text, pair.source_text, pair.source_frames, pair.source_frames)])
        scores = score_document(doc)
        assert scores.avg_f_mine == 1.0
        assert scores.avg_f_maxe == 1.0

    def test_unscoreable_sentences_excluded_from_average(self):
        frame = make_frame("Supply", "equip", [make_fe("Recipient")])
        doc = make_document("gaps", [
            make_sentence(1, "a", "b", [frame], [frame]),
            make_sentence(2, "a", "b", [], []),
        ])
        scores = score_document(doc)
        assert scores.n_scored_mine == 1
        assert scores.avg_f_mine == 1.0
        assert not scores.per_sentence[2].scoreable

    def test_overlay_doc_id_mismatch(self, si20_doc):
        with pytest.raises(OverrideError, match="someone-else"):
            score_document(si20_doc, DocumentOverlay(doc_id="someone-else"))

    def test_scores_track_alignment(self, ji02_doc):
        a = align_sentence(ji02_doc.sentences[0])
        scores = sentence_scores(a)
        assert scores.p_maxe == a.matched_element_count / a.target_element_count


class TestRounding:
    @pytest.mark.parametrize("value, text", [
        (5 / 6, "0.83"),
        (2 / 3, "0.67"),
        (1 / 6, "0.17"),
        (0.005, "0.01"),   # half-up, not banker's
        (0.835, "0.84"),
        (1.0, "1.00"),
        (None, "-"),
    ])
    def test_round2(self, value, text):
        assert round2(value) == text
