import math
import random

import numpy as np
import pytest

from lecturemap.chaptermatch import (
    ChapterMatcher,
    GroundTruth,
    ScoreMatrix,
    best_chapter,
    chapter_features,
    evaluate,
    pair_feature,
    parse_groundtruth,
    phrase_feature,
    score_matrix,
)
from lecturemap.corpus import IndexPhrase
from lecturemap.errors import DataError
from lecturemap.indexer import PhraseMatcher
from lecturemap.pairs import PairExtractor, extract_pairs
from lecturemap.text import tokenize


def brute_force_scores(t_feats, c_feats):
    """Oracle: the log-sum written as an explicit double loop over keys."""
    rows = []
    for tf in t_feats:
        row = []
        for cf in c_feats:
            total = 0.0
            for key in set(tf) | set(cf):
                if tf.get(key, 0) > 0 and cf.get(key, 0) > 0:
                    total += math.log(cf[key])
            row.append(total)
        rows.append(row)
    return rows


class TestChapterFeatures:
    VOCAB = frozenset({"binary", "tree", "clock", "cpi"})

    def _phrases(self):
        return [IndexPhrase(("binary", "tree")), IndexPhrase(("clock",))]

    def test_phrase_counts(self):
        chapter = tokenize("a binary tree and a binary tree and one more binary tree").stemmed()
        feats = chapter_features(chapter, "phrases", self._phrases(), self.VOCAB)
        assert feats[phrase_feature(0)] == 3

    def test_pair_counts_match_windowed_enumeration(self):
        chapter = tokenize("clock x cpi y y y clock z z cpi").stemmed()
        feats = chapter_features(chapter, "pairs", self._phrases(), self.VOCAB, window=3)
        direct = extract_pairs(chapter, self.VOCAB, 3)
        assert feats == {pair_feature(*k): v for k, v in direct.items()}
        assert feats[pair_feature("clock", "cpi")] == 2

    def test_combined_space_is_disjoint_union(self):
        chapter = tokenize("binary tree clock cpi clock").stemmed()
        phrases_only = chapter_features(chapter, "phrases", self._phrases(), self.VOCAB)
        pairs_only = chapter_features(chapter, "pairs", self._phrases(), self.VOCAB)
        both = chapter_features(chapter, "phrases_and_pairs", self._phrases(), self.VOCAB)
        assert set(both) == set(phrases_only) | set(pairs_only)
        assert len(both) == len(phrases_only) + len(pairs_only)

    def test_empty_chapter_all_zero(self):
        feats = chapter_features(tokenize(""), "phrases_and_pairs", self._phrases(), self.VOCAB)
        assert feats == {}


class TestScoreMatrix:
    def test_worked_example(self):
        t = [{("p", 1): 1, ("p", 2): 1}]
        chapters = [{("p", 1): 3}, {("p", 1): 2, ("p", 2): 2}]
        rows = score_matrix(t, chapters)
        assert rows[0][0] == pytest.approx(math.log(3), abs=1e-12)
        assert rows[0][1] == pytest.approx(2 * math.log(2), abs=1e-12)
        assert best_chapter(rows[0], (1, 2)) == (2, False)

    def test_unit_counts_score_zero(self):
        rows = score_matrix([{("p", 1): 5, ("p", 2): 2}], [{("p", 1): 1, ("p", 2): 1}])
        assert rows[0][0] == 0.0

    def test_no_shared_features_zero_row(self):
        rows = score_matrix([{("p", 1): 4}], [{("p", 2): 3}, {}])
        assert rows[0] == [0.0, 0.0]

    def test_min_count_rule(self):
        rows = score_matrix([{("p", 1): 2}], [{("p", 1): 5}], count_rule="min")
        assert rows[0][0] == pytest.approx(math.log(2))

    def test_smoothing_uses_log1p(self):
        rows = score_matrix([{("p", 1): 1}], [{("p", 1): 1}], smooth=True)
        assert rows[0][0] == pytest.approx(math.log(2))

    def test_locality_adding_foreign_feature(self):
        t = [{("p", 1): 2}]
        chapters = [{("p", 1): 3}]
        base = score_matrix(t, chapters)
        chapters_extra = [{("p", 1): 3, ("p", 99): 7}]
        assert score_matrix(t, chapters_extra) == base

    def test_doubling_chapter_counts_adds_shared_log2(self):
        t = [{("p", 1): 1, ("p", 2): 1, ("p", 3): 1}]
        chapters = [{("p", 1): 2, ("p", 2): 5}]
        base = score_matrix(t, chapters)[0][0]
        doubled = score_matrix(t, [{k: 2 * v for k, v in chapters[0].items()}])[0][0]
        assert doubled == pytest.approx(base + 2 * math.log(2), abs=1e-12)

    def test_permutation_equivariance(self):
        t = [{("p", 1): 1, ("p", 2): 3}]
        chapters = [{("p", 1): 4}, {("p", 2): 2}, {("p", 1): 1, ("p", 2): 1}]
        rows = score_matrix(t, chapters)
        permuted = score_matrix(t, [chapters[2], chapters[0], chapters[1]])
        assert permuted[0] == [rows[0][2], rows[0][0], rows[0][1]]

    def test_scores_nonnegative_and_finite(self):
        rng = random.Random(5)
        for _ in range(50):
            t = [{("p", k): rng.randint(0, 3) for k in range(5)}]
            c = [{("p", k): rng.randint(0, 4) for k in range(5)} for _ in range(3)]
            for row in score_matrix(t, c):
                assert all(v >= 0 and math.isfinite(v) for v in row)

    def test_matches_brute_force_on_random_instances(self):
        rng = random.Random(17)
        keys = [("p", k) for k in range(5)]
        for _ in range(100):
            t = [
                {k: rng.randint(0, 3) for k in rng.sample(keys, rng.randint(0, 5))}
                for _ in range(rng.randint(1, 4))
            ]
            c = [
                {k: rng.randint(0, 4) for k in rng.sample(keys, rng.randint(0, 5))}
                for _ in range(rng.randint(1, 3))
            ]
            got = score_matrix(t, c)
            want = brute_force_scores(t, c)
            for grow, wrow in zip(got, want):
                assert grow == pytest.approx(wrow, abs=1e-12)


class TestBestChapter:
    def test_argmax(self):
        assert best_chapter([1.0986, 1.3863], (1, 2)) == (2, False)

    def test_all_zero_flags_no_signal(self):
        assert best_chapter([0.0, 0.0, 0.0], (1, 2, 3)) == (1, True)

    def test_tie_breaks_to_lowest_chapter_id(self):
        assert best_chapter([5.0, 5.0, 3.0], (1, 2, 3)) == (1, False)

    def test_empty_row_rejected(self):
        with pytest.raises(ValueError):
            best_chapter([], ())


class TestEvaluate:
    def _matrix(self, rows, chapters=(1, 2, 3)):
        return ScoreMatrix(rows, "phrases", 1, tuple(range(1, len(rows) + 1)), chapters)

    def test_perfect(self):
        m = self._matrix([[2.0, 1.0, 0.0], [0.0, 3.0, 1.0]])
        truth = GroundTruth({1: frozenset({1}), 2: frozenset({2})})
        assert evaluate(m, truth).accuracy == 1.0

    def test_three_of_four(self):
        m = self._matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 0]])
        truth = GroundTruth({i: frozenset({i if i < 4 else 2}) for i in range(1, 5)})
        report = evaluate(m, truth)
        assert report.accuracy == 0.75
        assert report.correct[4] is False

    def test_empty_truth_sets_excluded_from_denominator(self):
        m = self._matrix([[1, 0, 0], [0, 1, 0]])
        truth = GroundTruth({1: frozenset({1}), 2: frozenset()})
        report = evaluate(m, truth)
        assert report.n_evaluable == 1 and report.accuracy == 1.0

    def test_alternate_valid_chapter_counts(self):
        m = self._matrix([[0.0, 2.0, 0.0]])
        truth = GroundTruth({1: frozenset({2, 3})})
        assert evaluate(m, truth).accuracy == 1.0

    def test_no_evaluable_lectures_error(self):
        m = self._matrix([[1, 0, 0]])
        with pytest.raises(DataError):
            evaluate(m, GroundTruth({1: frozenset()}))

    def test_payload_degrades_when_truth_has_no_evaluable_lectures(self):
        m = self._matrix([[1, 0, 0]])
        payload = m.to_json_dict(GroundTruth({1: frozenset()}))
        assert payload["accuracy"] is None
        assert payload["groundtruth"] == [[]]
        assert "correct" not in payload


class TestGroundTruthParsing:
    def test_formats(self):
        truth = parse_groundtruth("lecture01: 3\nlecture02: 3,4\nlecture03: -\n", [3, 4])
        assert truth.valid == {1: frozenset({3}), 2: frozenset({3, 4}), 3: frozenset()}

    def test_bare_numbers_accepted(self):
        truth = parse_groundtruth("1: 2\n", [2])
        assert truth.valid == {1: frozenset({2})}

    def test_unknown_chapter_rejected(self):
        with pytest.raises(DataError, match="unknown chapter"):
            parse_groundtruth("lecture01: 9\n", [1, 2])

    def test_garbage_rejected(self):
        with pytest.raises(DataError):
            parse_groundtruth("lecture01 -> 3\n", [3])


class TestChapterMatcher:
    def _fit(self, mode="phrases_and_pairs", **kwargs):
        phrases = [IndexPhrase(("binary", "tree")), IndexPhrase(("pointer",)), IndexPhrase(("sort",))]
        transcripts = [
            tokenize("binary tree and a pointer into the binary tree").stemmed(),
            tokenize("sort then sort again with the pointer").stemmed(),
        ]
        chapters = [
            (1, tokenize("the binary tree chapter has a pointer diagram binary tree").stemmed()),
            (2, tokenize("sort sort sort pointer pointer").stemmed()),
        ]
        table = PhraseMatcher().fit(phrases).transform(transcripts)
        vocab = frozenset({"binary", "tree", "pointer", "sort"})
        pair_table = PairExtractor(window=10).fit(vocab).transform(transcripts)
        matcher = ChapterMatcher(mode=mode, **kwargs).fit(table, pair_table, chapters, vocab)
        return matcher

    def test_predict_diagonal(self):
        matcher = self._fit()
        assert matcher.predict(zoom=2) == {1: 1, 2: 2}

    def test_phrases_mode_without_pair_table(self):
        phrases = [IndexPhrase(("tree",))]
        transcripts = [tokenize("tree").stemmed()]
        table = PhraseMatcher().fit(phrases).transform(transcripts)
        matcher = ChapterMatcher(mode="phrases").fit(table, None, [(1, tokenize("tree tree"))])
        assert matcher.predict(zoom=1) == {1: 1}

    def test_combined_feature_space_is_union(self):
        m_phrases = self._fit(mode="phrases")
        m_pairs = self._fit(mode="pairs")
        m_both = self._fit(mode="phrases_and_pairs")
        for i in range(2):
            assert set(m_both.transcript_features_[i]) == set(m_phrases.transcript_features_[i]) | set(
                m_pairs.transcript_features_[i]
            )

    def test_zoom_filters_by_doc_freq(self):
        matcher = self._fit(mode="phrases")
        # "pointer" occurs in both lectures (doc_freq 2), the rest in one.
        pointer_key = phrase_feature(1)
        assert matcher.doc_freq_[pointer_key] == 2
        z1 = matcher.score_matrix(zoom=1)
        z2 = matcher.score_matrix(zoom=2)
        assert z1.scores != z2.scores

    def test_sweep_matches_direct_scoring(self):
        for mode in ("phrases", "pairs", "g2pairs", "phrases_and_pairs"):
            matcher = self._fit(mode=mode, g2_threshold=0.0)
            sweep = matcher.sweep_scores([1, 2])
            for z in (1, 2):
                direct = np.array(matcher.score_matrix(zoom=z).scores)
                assert np.allclose(sweep[z], direct, atol=1e-12)

    def test_mode_alias(self):
        matcher = self._fit(mode="combined")
        assert matcher.mode_ == "phrases_and_pairs"

    def test_requires_chapters(self):
        phrases = [IndexPhrase(("tree",))]
        table = PhraseMatcher().fit(phrases).transform([tokenize("tree")])
        with pytest.raises(DataError):
            ChapterMatcher(mode="phrases").fit(table, None, [])

    def test_chapter_pair_features_match_direct_extraction(self):
        matcher = self._fit(mode="pairs")
        vocab = frozenset({"binary", "tree", "pointer", "sort"})
        chapter_seq = tokenize("the binary tree chapter has a pointer diagram binary tree").stemmed()
        direct = extract_pairs(chapter_seq, vocab, 10)
        from lecturemap.chaptermatch import pair_feature

        assert matcher.chapter_features_[0] == {pair_feature(*k): v for k, v in direct.items()}
