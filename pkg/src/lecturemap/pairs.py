"""Windowed word pairs and the G2 log-likelihood collocation statistic.

Fragmented, stop-word-padded speech rarely preserves multi-word phrases
verbatim, but two related content words still tend to land near each other.
A pair event is two different in-vocabulary words at token distance at most
``window`` (unordered, so (a, b) and (b, a) are the same event).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .base import Estimator
from .corpus import IndexPhrase
from .text import TokenSeq
from .validation import check_counts_2x2, check_window

PairKey = tuple[str, str]


def canonical_pair(w1: str, w2: str) -> PairKey:
    return (w1, w2) if w1 <= w2 else (w2, w1)


def extract_pairs(transcript: TokenSeq, vocabulary: frozenset[str], window: int = 10) -> dict[PairKey, int]:
    """Count unordered in-vocabulary pair events within the token window.

    Every ordered position pair (p, q) with 0 < q - p <= window counts once;
    self-pairs of the same word are skipped.
    """
    check_window(window)
    tokens = transcript.tokens
    counts: dict[PairKey, int] = {}
    n = len(tokens)
    for p in range(n):
        a = tokens[p]
        if a not in vocabulary:
            continue
        for q in range(p + 1, min(p + window + 1, n)):
            b = tokens[q]
            if b not in vocabulary or a == b:
                continue
            key = canonical_pair(a, b)
            counts[key] = counts.get(key, 0) + 1
    return counts


class PairTable:
    """Per-transcript pair counts plus course-level marginals."""

    def __init__(self, per_transcript: Mapping[int, Mapping[PairKey, int]], lecture_ids: Sequence[int]):
        self.lecture_ids = tuple(lecture_ids)
        self.per_transcript: dict[int, dict[PairKey, int]] = {
            lid: dict(per_transcript.get(lid, {})) for lid in self.lecture_ids
        }
        self.totals: dict[PairKey, int] = {}
        self.marginals: dict[str, int] = {}
        self.n_events = 0
        for lid in self.lecture_ids:
            for (w1, w2), c in self.per_transcript[lid].items():
                if c < 0:
                    raise ValueError(f"negative pair count for {(w1, w2)}")
                key = canonical_pair(w1, w2)
                self.totals[key] = self.totals.get(key, 0) + c
                self.marginals[key[0]] = self.marginals.get(key[0], 0) + c
                self.marginals[key[1]] = self.marginals.get(key[1], 0) + c
                self.n_events += c

    def count(self, w1: str, w2: str, lecture_id: int | None = None) -> int:
        key = canonical_pair(w1, w2)
        if lecture_id is None:
            return self.totals.get(key, 0)
        return self.per_transcript.get(lecture_id, {}).get(key, 0)

    def doc_freq(self, key: PairKey) -> int:
        key = canonical_pair(*key)
        return sum(1 for lid in self.lecture_ids if self.per_transcript[lid].get(key, 0) > 0)

    def contingency(self, key: PairKey) -> tuple[int, int, int, int]:
        """2x2 table for a pair over the course's pair-event universe."""
        key = canonical_pair(*key)
        k11 = self.totals.get(key, 0)
        k12 = self.marginals.get(key[0], 0) - k11
        k21 = self.marginals.get(key[1], 0) - k11
        k22 = self.n_events - k11 - k12 - k21
        return k11, k12, k21, k22


class PairExtractor(Estimator):
    """Extracts the windowed pair table for a fitted vocabulary."""

    def __init__(self, window: int = 10):
        self.window = window

    def fit(self, vocabulary: "Iterable[str] | Sequence[IndexPhrase]") -> "PairExtractor":
        items = list(vocabulary)
        if items and isinstance(items[0], IndexPhrase):
            words = {tok for phrase in items for tok in phrase.tokens}
        else:
            words = set(items)
        if not words:
            raise ValueError("vocabulary must be non-empty")
        self.vocabulary_ = frozenset(words)
        return self

    def transform(self, transcripts: Sequence[TokenSeq]) -> PairTable:
        self._check_fitted("vocabulary_")
        check_window(self.window)
        lecture_ids = list(range(1, len(transcripts) + 1))
        per_transcript = {
            lid: extract_pairs(seq, self.vocabulary_, self.window)
            for lid, seq in zip(lecture_ids, transcripts)
        }
        return PairTable(per_transcript, lecture_ids)

    def fit_transform(self, vocabulary, transcripts: Sequence[TokenSeq]) -> PairTable:
        return self.fit(vocabulary).transform(transcripts)


def pair_vocabulary(phrases: Sequence[IndexPhrase], stopwords: frozenset[str] = frozenset()) -> frozenset[str]:
    """All index words, minus stop words that survive inside phrases."""
    return frozenset(tok for p in phrases for tok in p.tokens if tok not in stopwords)


def g2(k11: float, k12: float, k21: float, k22: float) -> float:
    """Log-likelihood ratio of a 2x2 contingency table.

    G2 = 2 * sum(k * ln(k / E)) with E the independence expectation
    (rowsum * colsum / N).  Zero cells contribute nothing, and the result
    is clamped at 0 against floating-point drift.
    """
    k11, k12, k21, k22 = check_counts_2x2(k11, k12, k21, k22)
    n = k11 + k12 + k21 + k22
    row1, row2 = k11 + k12, k21 + k22
    col1, col2 = k11 + k21, k12 + k22
    total = 0.0
    for k, row, col in ((k11, row1, col1), (k12, row1, col2), (k21, row2, col1), (k22, row2, col2)):
        if k > 0:
            total += k * math.log(k * n / (row * col))
    return max(0.0, 2.0 * total)


@dataclass(frozen=True)
class CollocationScore:
    pair: PairKey
    g2: float
    count: int
    novel: bool  # not already covered by a multi-word index phrase

    def to_json_dict(self) -> dict:
        return {
            "w1": self.pair[0],
            "w2": self.pair[1],
            "count": self.count,
            "g2": self.g2,
            "novel": self.novel,
        }


def _covered_by_phrases(key: PairKey, phrases: Sequence[IndexPhrase]) -> bool:
    for phrase in phrases:
        if len(phrase.tokens) > 1 and key[0] in phrase.tokens and key[1] in phrase.tokens:
            return True
    return False


def rank_collocations(
    table: PairTable,
    *,
    top_k: int | None = None,
    min_g2: float | None = None,
    phrases: Sequence[IndexPhrase] = (),
) -> list[CollocationScore]:
    """Pairs in decreasing G2 order (ties alphabetical).

    Collocations not already represented by a multi-word index phrase are
    flagged ``novel`` so they can be offered for addition to the visual
    index.
    """
    scored = []
    for key, count in table.totals.items():
        if count == 0:
            continue
        score = g2(*table.contingency(key))
        scored.append(CollocationScore(key, score, count, not _covered_by_phrases(key, phrases)))
    scored.sort(key=lambda s: (-s.g2, s.pair))
    if min_g2 is not None:
        scored = [s for s in scored if s.g2 >= min_g2]
    if top_k is not None:
        scored = scored[:top_k]
    return scored
