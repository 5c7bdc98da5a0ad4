"""Scoring every (lecture, chapter) pairing and evaluating the assignment.

A lecture is matched to the chapter maximizing

    score(i, j) = sum over features k present in lecture i and chapter j
                  of ln(tf(k, j))

where a feature is an index phrase, a windowed word pair, or both combined,
and tf(k, j) is the feature's occurrence count in chapter j.  Features that
spread over more than ``zoom`` transcripts are dropped before scoring, which
keeps course-wide theme vocabulary from washing out the per-lecture signal.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .base import Estimator
from .config import normalize_mode
from .errors import DataError
from .indexer import OccurrenceTable, match_phrases
from .pairs import PairTable, extract_pairs, g2, pair_vocabulary
from .text import TokenSeq

FeatureKey = tuple  # ("p", phrase_id) or ("w", w1, w2)

DEFAULT_ZOOM = 15


def phrase_feature(phrase_id: int) -> FeatureKey:
    return ("p", phrase_id)


def pair_feature(w1: str, w2: str) -> FeatureKey:
    return ("w", w1, w2) if w1 <= w2 else ("w", w2, w1)


def chapter_features(
    chapter: TokenSeq,
    mode: str,
    phrases: Sequence,
    vocabulary: frozenset[str],
    window: int = 10,
    selected_pairs: "set | None" = None,
    longest_match_only: bool = False,
) -> dict[FeatureKey, int]:
    """Feature counts tf(k, j) for one chapter under the given mode.

    Phrase and pair features live in disjoint key namespaces, so the
    combined mode is a plain union.  ``selected_pairs`` restricts pair
    features to a collocation subset (the g2pairs mode).
    """
    mode = normalize_mode(mode)
    feats: dict[FeatureKey, int] = {}
    if mode in ("phrases", "phrases_and_pairs"):
        for pid, occ in match_phrases(chapter, phrases, longest_match_only=longest_match_only).items():
            feats[phrase_feature(pid)] = occ.count
    if mode in ("pairs", "g2pairs", "phrases_and_pairs"):
        for key, count in extract_pairs(chapter, vocabulary, window).items():
            if count > 0 and (selected_pairs is None or key in selected_pairs):
                feats[pair_feature(*key)] = count
    return feats


def score_matrix(
    transcript_features: Sequence[Mapping[FeatureKey, int]],
    chapter_features: Sequence[Mapping[FeatureKey, int]],
    *,
    count_rule: str = "chapter",
    smooth: bool = False,
) -> list[list[float]]:
    """Evaluate the log-sum score for every (transcript, chapter) pair.

    Features with a zero chapter count are skipped rather than contributing
    -inf; a transcript sharing nothing with a chapter scores 0.
    """
    if count_rule not in ("chapter", "min"):
        raise ValueError(f"count_rule must be 'chapter' or 'min', got {count_rule!r}")
    rows: list[list[float]] = []
    for t_feats in transcript_features:
        row = []
        for c_feats in chapter_features:
            total = 0.0
            for key, tf_i in t_feats.items():
                if tf_i <= 0:
                    continue
                tf_j = c_feats.get(key, 0)
                if tf_j <= 0:
                    continue
                count = min(tf_i, tf_j) if count_rule == "min" else tf_j
                total += math.log1p(count) if smooth else math.log(count)
            row.append(total)
        rows.append(row)
    return rows


def best_chapter(row: Sequence[float], chapter_ids: Sequence[int]) -> tuple[int, bool]:
    """Argmax chapter for one score row; ties go to the lowest chapter id.

    An all-zero row has no evidence at all, so it falls to the first chapter
    by the same tie rule and is flagged as no-signal.
    """
    if len(row) == 0 or len(row) != len(chapter_ids):
        raise ValueError("row and chapter_ids must be non-empty and equal length")
    best_idx = 0
    for idx in range(1, len(row)):
        if row[idx] > row[best_idx]:
            best_idx = idx
    no_signal = all(v == 0 for v in row)
    return chapter_ids[best_idx], no_signal


@dataclass
class ScoreMatrix:
    scores: list[list[float]]
    mode: str
    zoom: int
    lecture_ids: tuple[int, ...]
    chapter_ids: tuple[int, ...]

    def __post_init__(self) -> None:
        for row in self.scores:
            if len(row) != len(self.chapter_ids):
                raise ValueError("score rows must match the chapter list")
            if any(not math.isfinite(v) for v in row):
                raise ValueError("scores must be finite")

    def assignments(self) -> dict[int, tuple[int, bool]]:
        return {
            lid: best_chapter(row, self.chapter_ids)
            for lid, row in zip(self.lecture_ids, self.scores)
        }

    def to_json_dict(self, truth: "GroundTruth | None" = None) -> dict:
        assigned = self.assignments()
        payload = {
            "mode": self.mode,
            "zoom": self.zoom,
            "lectures": list(self.lecture_ids),
            "chapters": list(self.chapter_ids),
            "scores": [list(row) for row in self.scores],
            "assignments": [assigned[lid][0] for lid in self.lecture_ids],
            "no_signal": [assigned[lid][1] for lid in self.lecture_ids],
            "accuracy": None,
        }
        if truth is not None:
            payload["groundtruth"] = [
                sorted(truth.valid.get(lid, frozenset())) for lid in self.lecture_ids
            ]
            if truth.evaluable():
                report = evaluate(self, truth)
                payload["accuracy"] = report.accuracy
                payload["correct"] = [report.correct.get(lid) for lid in self.lecture_ids]
        return payload


@dataclass
class GroundTruth:
    """lecture_id -> the set of chapters accepted as a correct match."""

    valid: dict[int, frozenset[int]]

    def evaluable(self) -> list[int]:
        return sorted(lid for lid, chapters in self.valid.items() if chapters)


_GT_LINE = re.compile(r"^\s*(?:lecture)?0*(\d+)\s*:\s*(.+?)\s*$", re.IGNORECASE)


def parse_groundtruth(text: str, chapter_ids: Sequence[int]) -> GroundTruth:
    valid_chapters = set(chapter_ids)
    mapping: dict[int, frozenset[int]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = _GT_LINE.match(line)
        if not m:
            raise DataError(f"ground truth line {lineno}: cannot parse {line!r}")
        lecture = int(m.group(1))
        spec = m.group(2)
        if spec == "-":
            mapping[lecture] = frozenset()
            continue
        try:
            chapters = frozenset(int(c.strip()) for c in spec.split(","))
        except ValueError as exc:
            raise DataError(f"ground truth line {lineno}: bad chapter list {spec!r}") from exc
        unknown = chapters - valid_chapters
        if unknown:
            raise DataError(
                f"ground truth line {lineno}: unknown chapter ids {sorted(unknown)}"
            )
        mapping[lecture] = chapters
    return GroundTruth(mapping)


def load_groundtruth(path: "str | Path", chapter_ids: Sequence[int]) -> GroundTruth:
    return parse_groundtruth(Path(path).read_text("utf-8"), chapter_ids)


@dataclass
class MatchReport:
    assignments: dict[int, int]
    no_signal: set[int]
    correct: dict[int, bool] = field(default_factory=dict)
    accuracy: float = 0.0
    n_evaluable: int = 0


def evaluate(matrix: ScoreMatrix, truth: GroundTruth) -> MatchReport:
    """Accuracy of the argmax assignment against ground truth.

    Lectures whose truth set is empty (no matching chapter exists) are
    excluded from the denominator.
    """
    assigned = matrix.assignments()
    report = MatchReport(
        assignments={lid: cid for lid, (cid, _) in assigned.items()},
        no_signal={lid for lid, (_, flag) in assigned.items() if flag},
    )
    n_correct = 0
    for lid in matrix.lecture_ids:
        chapters = truth.valid.get(lid, frozenset())
        if not chapters:
            continue
        ok = report.assignments[lid] in chapters
        report.correct[lid] = ok
        report.n_evaluable += 1
        n_correct += ok
    if report.n_evaluable == 0:
        raise DataError("ground truth has no evaluable lectures")
    report.accuracy = n_correct / report.n_evaluable
    return report


class ChapterMatcher(Estimator):
    """Fits course features once, then scores or sweeps at any zoom."""

    def __init__(
        self,
        mode: str = "phrases_and_pairs",
        zoom: int | None = None,
        count_rule: str = "chapter",
        smooth: bool = False,
        window: int = 10,
        g2_threshold: float = 3.841,
        longest_match_only: bool = False,
    ):
        self.mode = mode
        self.zoom = zoom
        self.count_rule = count_rule
        self.smooth = smooth
        self.window = window
        self.g2_threshold = g2_threshold
        self.longest_match_only = longest_match_only

    def fit(
        self,
        table: OccurrenceTable,
        pair_table: PairTable | None,
        chapters: Sequence[tuple[int, TokenSeq]],
        vocabulary: frozenset[str] | None = None,
    ) -> "ChapterMatcher":
        mode = normalize_mode(self.mode)
        if not chapters:
            raise DataError("chapter matching needs at least one chapter")
        if mode != "phrases" and pair_table is None:
            raise ValueError(f"mode {mode!r} requires a pair table")
        self.mode_ = mode
        self.lecture_ids_ = table.lecture_ids
        self.chapter_ids_ = tuple(cid for cid, _ in chapters)

        use_phrases = mode in ("phrases", "phrases_and_pairs")
        use_pairs = mode in ("pairs", "g2pairs", "phrases_and_pairs")

        if vocabulary is None:
            vocabulary = pair_vocabulary(table.phrases)

        selected_pairs = None
        if mode == "g2pairs":
            selected_pairs = {
                key
                for key, count in pair_table.totals.items()
                if count > 0 and g2(*pair_table.contingency(key)) >= self.g2_threshold
            }

        t_feats: list[dict[FeatureKey, int]] = []
        for lid in self.lecture_ids_:
            feats: dict[FeatureKey, int] = {}
            if use_phrases:
                for pid, per_lecture in table.entries.items():
                    occ = per_lecture.get(lid)
                    if occ:
                        feats[phrase_feature(pid)] = occ.count
            if use_pairs:
                for key, count in pair_table.per_transcript.get(lid, {}).items():
                    if count > 0 and (selected_pairs is None or key in selected_pairs):
                        feats[pair_feature(*key)] = count
            t_feats.append(feats)

        c_feats = [
            chapter_features(
                seq,
                mode,
                table.phrases,
                vocabulary,
                window=self.window,
                selected_pairs=selected_pairs,
                longest_match_only=self.longest_match_only,
            )
            for _, seq in chapters
        ]

        self.transcript_features_ = t_feats
        self.chapter_features_ = c_feats
        self.doc_freq_ = {}
        for feats in t_feats:
            for key in feats:
                self.doc_freq_[key] = self.doc_freq_.get(key, 0) + 1
        return self

    def _resolve_zoom(self, zoom: int | None) -> int:
        n = len(self.lecture_ids_)
        if zoom is None:
            zoom = self.zoom if self.zoom is not None else DEFAULT_ZOOM
        return max(1, min(int(zoom), n))

    def score_matrix(self, zoom: int | None = None) -> ScoreMatrix:
        self._check_fitted("transcript_features_")
        z = self._resolve_zoom(zoom)
        filtered = [
            {key: tf for key, tf in feats.items() if self.doc_freq_[key] <= z}
            for feats in self.transcript_features_
        ]
        rows = score_matrix(
            filtered, self.chapter_features_, count_rule=self.count_rule, smooth=self.smooth
        )
        return ScoreMatrix(rows, self.mode_, z, self.lecture_ids_, self.chapter_ids_)

    def sweep_scores(self, zooms: Sequence[int]) -> dict[int, np.ndarray]:
        """Score matrices for many zoom values in one pass.

        Contributions are bucketed by feature document frequency and then
        cumulatively summed, so the whole sweep costs one walk over the
        feature space.  Agrees exactly with score_matrix() per zoom.
        """
        self._check_fitted("transcript_features_")
        n_l, n_c = len(self.lecture_ids_), len(self.chapter_ids_)
        buckets = np.zeros((n_l, n_c, n_l))
        postings: dict[FeatureKey, list[tuple[int, int]]] = {}
        for j, feats in enumerate(self.chapter_features_):
            for key, tf in feats.items():
                if tf > 0:
                    postings.setdefault(key, []).append((j, tf))
        for i, feats in enumerate(self.transcript_features_):
            for key, tf_i in feats.items():
                chapter_hits = postings.get(key)
                if not chapter_hits:
                    continue
                df = self.doc_freq_[key]
                for j, tf_j in chapter_hits:
                    count = min(tf_i, tf_j) if self.count_rule == "min" else tf_j
                    buckets[i, j, df - 1] += math.log1p(count) if self.smooth else math.log(count)
        cumulative = buckets.cumsum(axis=2)
        return {z: cumulative[:, :, self._resolve_zoom(z) - 1].copy() for z in zooms}

    def predict(self, zoom: int | None = None) -> dict[int, int]:
        matrix = self.score_matrix(zoom)
        return {lid: cid for lid, (cid, _) in matrix.assignments().items()}

    def accuracy_curve(self, truth: GroundTruth, zooms: Sequence[int]) -> dict[int, float]:
        """Accuracy at every zoom of the sweep (excluding truth-less lectures)."""
        evaluable = [lid for lid in self.lecture_ids_ if truth.valid.get(lid)]
        if not evaluable:
            raise DataError("ground truth has no evaluable lectures")
        index_of = {lid: i for i, lid in enumerate(self.lecture_ids_)}
        curves = {}
        for z, scores in self.sweep_scores(zooms).items():
            correct = 0
            for lid in evaluable:
                row = scores[index_of[lid]]
                cid, _ = best_chapter(list(row), self.chapter_ids_)
                correct += cid in truth.valid[lid]
            curves[z] = correct / len(evaluable)
        return curves
