"""Locating index phrases in transcripts and the statistics built on top.

The occurrence table is the central data structure: for every phrase and
every lecture it stores how often and where (token offsets) the phrase
matched.  Everything downstream — the index map, chapter matching, and the
similarity graph — reads from it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .base import Estimator
from .corpus import IndexPhrase
from .text import TokenSeq
from .validation import check_fraction


@dataclass(frozen=True)
class Occurrence:
    count: int
    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.count != len(self.positions):
            raise ValueError("count must equal the number of positions")
        if any(b <= a for a, b in zip(self.positions, self.positions[1:])):
            raise ValueError("positions must be strictly increasing")


class OccurrenceTable:
    """phrase_id -> lecture_id -> Occurrence, plus the phrase registry."""

    def __init__(
        self,
        phrases: Sequence[IndexPhrase],
        entries: Mapping[int, Mapping[int, Occurrence]],
        lecture_ids: Sequence[int],
    ):
        self.phrases = list(phrases)
        self.lecture_ids = tuple(lecture_ids)
        self.entries: dict[int, dict[int, Occurrence]] = {
            pid: dict(per_lecture) for pid, per_lecture in entries.items() if per_lecture
        }
        lecture_set = set(self.lecture_ids)
        for pid, per_lecture in self.entries.items():
            if not 0 <= pid < len(self.phrases):
                raise ValueError(f"phrase id {pid} outside registry")
            unknown = set(per_lecture) - lecture_set
            if unknown:
                raise ValueError(f"unknown lecture ids {sorted(unknown)} for phrase {pid}")

    @property
    def n_transcripts(self) -> int:
        return len(self.lecture_ids)

    @property
    def n_phrases(self) -> int:
        return len(self.phrases)

    def count(self, phrase_id: int, lecture_id: int) -> int:
        occ = self.entries.get(phrase_id, {}).get(lecture_id)
        return occ.count if occ else 0

    def positions(self, phrase_id: int, lecture_id: int) -> tuple[int, ...]:
        occ = self.entries.get(phrase_id, {}).get(lecture_id)
        return occ.positions if occ else ()

    def doc_freq(self, phrase_id: int) -> int:
        return len(self.entries.get(phrase_id, {}))

    def lectures_with(self, phrase_id: int) -> list[int]:
        return sorted(self.entries.get(phrase_id, {}))

    def records(self) -> "Iterable[tuple[int, int, Occurrence]]":
        for pid in sorted(self.entries):
            per_lecture = self.entries[pid]
            for lid in sorted(per_lecture):
                yield pid, lid, per_lecture[lid]

    def to_json_dict(self) -> dict:
        return {
            "phrases": [
                {"id": pid, "tokens": list(p.tokens), "synthetic": p.synthetic}
                for pid, p in enumerate(self.phrases)
            ],
            "occurrences": [
                {"phrase_id": pid, "lecture_id": lid, "count": occ.count, "positions": list(occ.positions)}
                for pid, lid, occ in self.records()
            ],
            "n_transcripts": self.n_transcripts,
        }

    def dump_json(self, path: "str | Path") -> None:
        Path(path).write_text(json.dumps(self.to_json_dict(), indent=2) + "\n", "utf-8")

    @classmethod
    def from_json_dict(cls, payload: Mapping) -> "OccurrenceTable":
        phrases = [
            IndexPhrase(tokens=tuple(p["tokens"]), synthetic=bool(p.get("synthetic", False)))
            for p in sorted(payload["phrases"], key=lambda p: p["id"])
        ]
        entries: dict[int, dict[int, Occurrence]] = {}
        for rec in payload["occurrences"]:
            entries.setdefault(rec["phrase_id"], {})[rec["lecture_id"]] = Occurrence(
                rec["count"], tuple(rec["positions"])
            )
        lecture_ids = range(1, int(payload["n_transcripts"]) + 1)
        return cls(phrases, entries, lecture_ids)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OccurrenceTable):
            return NotImplemented
        return (
            [p.tokens for p in self.phrases] == [p.tokens for p in other.phrases]
            and self.lecture_ids == other.lecture_ids
            and self.entries == other.entries
        )


def match_phrases(
    transcript: TokenSeq, phrases: Sequence[IndexPhrase], *, longest_match_only: bool = False
) -> dict[int, Occurrence]:
    """Find every contiguous occurrence of every phrase.

    Phrases match independently of each other by default: a token may
    participate in "binary search tree", "binary search", and "tree" at
    once.  With ``longest_match_only`` the scan greedily consumes the
    longest phrase starting at each position instead.
    """
    tokens = transcript.tokens
    by_first: dict[str, list[tuple[int, tuple[str, ...]]]] = {}
    for pid, phrase in enumerate(phrases):
        by_first.setdefault(phrase.tokens[0], []).append((pid, phrase.tokens))
    for candidates in by_first.values():
        candidates.sort(key=lambda c: -len(c[1]))  # longest first for greedy mode

    hits: dict[int, list[int]] = {}
    pos = 0
    n = len(tokens)
    while pos < n:
        jump = 1
        for pid, ptoks in by_first.get(tokens[pos], ()):
            length = len(ptoks)
            if pos + length <= n and tokens[pos : pos + length] == ptoks:
                hits.setdefault(pid, []).append(pos)
                if longest_match_only:
                    jump = length
                    break
        pos += jump

    return {pid: Occurrence(len(positions), tuple(positions)) for pid, positions in hits.items()}


class PhraseMatcher(Estimator):
    """Matches a fitted phrase inventory against stemmed transcripts."""

    def __init__(self, longest_match_only: bool = False):
        self.longest_match_only = longest_match_only

    def fit(self, phrases: Sequence[IndexPhrase]) -> "PhraseMatcher":
        self.phrases_ = list(phrases)
        return self

    def transform(self, transcripts: Sequence[TokenSeq]) -> OccurrenceTable:
        """Build the occurrence table; lecture ids are 1-based positions."""
        self._check_fitted("phrases_")
        entries: dict[int, dict[int, Occurrence]] = {}
        lecture_ids = []
        for lid, seq in enumerate(transcripts, start=1):
            lecture_ids.append(lid)
            for pid, occ in match_phrases(seq, self.phrases_, longest_match_only=self.longest_match_only).items():
                entries.setdefault(pid, {})[lid] = occ
        return OccurrenceTable(self.phrases_, entries, lecture_ids)

    def fit_transform(
        self, phrases: Sequence[IndexPhrase], transcripts: Sequence[TokenSeq]
    ) -> OccurrenceTable:
        return self.fit(phrases).transform(transcripts)


def merge_variants(tables: Sequence[OccurrenceTable]) -> OccurrenceTable:
    """Merge occurrence tables from transcription variants of one course.

    The variants transcribe the same audio, so a phrase's true count is
    whichever variant recognized it best: counts merge by maximum (summing
    would double-count the same speech), and the phrase set is the union.
    """
    if not tables:
        raise ValueError("need at least one table")
    first = tables[0]
    registry = [p.tokens for p in first.phrases]
    for other in tables[1:]:
        if [p.tokens for p in other.phrases] != registry:
            raise ValueError("tables must share one phrase registry")
        if other.lecture_ids != first.lecture_ids:
            raise ValueError(
                f"mismatched lecture sets: {first.lecture_ids} vs {other.lecture_ids}"
            )
    entries: dict[int, dict[int, Occurrence]] = {}
    for table in tables:
        for pid, lid, occ in table.records():
            current = entries.setdefault(pid, {}).get(lid)
            if current is None or occ.count > current.count:
                entries[pid][lid] = occ
    return OccurrenceTable(first.phrases, entries, first.lecture_ids)


THEME = "theme"
TOPIC = "topic"


def classify_phrase(doc_freq: int, n_transcripts: int, fraction: float = 0.25) -> str:
    """A phrase is a course-wide theme once it reaches ``fraction`` of all
    transcripts (inclusive); below that it is a lecture-specific topic."""
    check_fraction(fraction)
    if not 0 <= doc_freq <= n_transcripts:
        raise ValueError(f"doc_freq {doc_freq} outside [0, {n_transcripts}]")
    return THEME if doc_freq >= fraction * n_transcripts else TOPIC


@dataclass(frozen=True)
class PhraseClass:
    phrase_id: int
    doc_freq: int
    kind: str


def classify_table(table: OccurrenceTable, fraction: float = 0.25) -> list[PhraseClass]:
    return [
        PhraseClass(pid, table.doc_freq(pid), classify_phrase(table.doc_freq(pid), table.n_transcripts, fraction))
        for pid in range(table.n_phrases)
    ]


@dataclass
class CourseStats:
    word_counts: dict[int, int]
    identified_counts: dict[int, int]
    unique_counts: dict[int, int]
    course_unique: int
    dispersion: dict[int, int] = field(default_factory=dict)
    length_occurrences: dict[int, int] = field(default_factory=dict)
    length_unique: dict[int, int] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "per_lecture": [
                {
                    "lecture_id": lid,
                    "words": self.word_counts[lid],
                    "identified_phrases": self.identified_counts[lid],
                    "unique_phrases": self.unique_counts[lid],
                }
                for lid in sorted(self.word_counts)
            ],
            "course_unique_phrases": self.course_unique,
            "dispersion": {str(df): n for df, n in sorted(self.dispersion.items())},
            "phrase_length_occurrences": {str(k): v for k, v in sorted(self.length_occurrences.items())},
            "phrase_length_unique": {str(k): v for k, v in sorted(self.length_unique.items())},
        }


def course_stats(table: OccurrenceTable, transcripts: Sequence[TokenSeq]) -> CourseStats:
    """Per-lecture identification totals, the course-level unique count, and
    the dispersion histogram (phrases per document frequency)."""
    if len(transcripts) != table.n_transcripts:
        raise ValueError("transcripts do not match the table's lecture set")
    word_counts = {lid: len(seq) for lid, seq in zip(table.lecture_ids, transcripts)}
    identified = {lid: 0 for lid in table.lecture_ids}
    unique = {lid: 0 for lid in table.lecture_ids}
    dispersion: dict[int, int] = {}
    length_occ: dict[int, int] = {}
    length_unique: dict[int, int] = {}
    course_unique = 0
    for pid in range(table.n_phrases):
        per_lecture = table.entries.get(pid, {})
        if not per_lecture:
            continue
        course_unique += 1
        df = len(per_lecture)
        dispersion[df] = dispersion.get(df, 0) + 1
        length = len(table.phrases[pid])
        length_unique[length] = length_unique.get(length, 0) + 1
        for lid, occ in per_lecture.items():
            identified[lid] += occ.count
            unique[lid] += 1
            length_occ[length] = length_occ.get(length, 0) + occ.count
    return CourseStats(
        word_counts=word_counts,
        identified_counts=identified,
        unique_counts=unique,
        course_unique=course_unique,
        dispersion=dispersion,
        length_occurrences=length_occ,
        length_unique=length_unique,
    )
