"""The Transcript Index Map: filtering, span grouping, layout, and color.

Lectures run left to right in temporal order; phrases hang below the
lectures they occur in.  Three camera-like settings narrow the view:

* zoom      — keep phrases occurring in at most this many transcripts
              (1 shows strictly lecture-specific topics, the transcript
              count shows everything including course-wide themes)
* focus     — keep occurrences repeated at least this often in a lecture
* contrast  — keep phrases with at least this many words

A phrase present in consecutive lectures is grouped into one span whose
occurrences are summed, making recurring terms visually heavier.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .indexer import OccurrenceTable
from .validation import check_view_filter


@dataclass(frozen=True)
class ViewFilter:
    zoom: int
    focus: int = 1
    contrast: int = 1

    def validated(self, n_transcripts: int) -> "ViewFilter":
        check_view_filter(self.zoom, self.focus, self.contrast, n_transcripts)
        return self


@dataclass(frozen=True)
class SpanItem:
    phrase_id: int
    start_lecture: int
    end_lecture: int
    total_occurrence: int
    row: int | None = None

    def __post_init__(self) -> None:
        if self.start_lecture > self.end_lecture:
            raise ValueError("span start must not exceed its end")
        if self.total_occurrence <= 0:
            raise ValueError("spans need a positive occurrence total")

    @property
    def width(self) -> int:
        return self.end_lecture - self.start_lecture + 1

    def columns(self) -> range:
        return range(self.start_lecture, self.end_lecture + 1)


@dataclass
class GridLayout:
    n_lectures: int
    items: list[SpanItem]
    max_occurrence: int

    def n_rows(self) -> int:
        return 1 + max((item.row for item in self.items), default=-1)


def filter_occurrences(table: OccurrenceTable, view: ViewFilter) -> dict[tuple[int, int], int]:
    """(phrase_id, lecture_id) -> count for records surviving the view filter."""
    view.validated(table.n_transcripts)
    kept: dict[tuple[int, int], int] = {}
    for pid in range(table.n_phrases):
        per_lecture = table.entries.get(pid)
        if not per_lecture or len(per_lecture) > view.zoom:
            continue
        if len(table.phrases[pid]) < view.contrast:
            continue
        for lid, occ in per_lecture.items():
            if occ.count >= view.focus:
                kept[(pid, lid)] = occ.count
    return kept


def build_spans(filtered: dict[tuple[int, int], int]) -> list[SpanItem]:
    """Group each phrase's consecutive lectures into spans, summing counts."""
    by_phrase: dict[int, list[int]] = {}
    for (pid, lid) in filtered:
        by_phrase.setdefault(pid, []).append(lid)
    spans: list[SpanItem] = []
    for pid in sorted(by_phrase):
        lectures = sorted(by_phrase[pid])
        run_start = prev = lectures[0]
        total = filtered[(pid, run_start)]
        for lid in lectures[1:]:
            if lid == prev + 1:
                total += filtered[(pid, lid)]
            else:
                spans.append(SpanItem(pid, run_start, prev, total))
                run_start, total = lid, filtered[(pid, lid)]
            prev = lid
        spans.append(SpanItem(pid, run_start, prev, total))
    return spans


def layout_greedy(spans: list[SpanItem], phrase_texts: dict[int, str], n_lectures: int) -> GridLayout:
    """First-fit placement, biggest items first.

    Spans are ordered by occurrence (descending), then width (descending),
    then phrase text, then start column, and each is dropped into the
    smallest row where every column it covers is still free.  Not optimal,
    but later small items fill holes near the top and color still carries
    the occurrence ranking.
    """
    ordered = sorted(
        spans,
        key=lambda s: (-s.total_occurrence, -s.width, phrase_texts.get(s.phrase_id, ""), s.start_lecture),
    )
    occupied: dict[int, set[int]] = {}
    placed: list[SpanItem] = []
    for span in ordered:
        row = 0
        while any(row in occupied.get(col, ()) for col in span.columns()):
            row += 1
        for col in span.columns():
            occupied.setdefault(col, set()).add(row)
        placed.append(replace(span, row=row))
    max_occurrence = max((s.total_occurrence for s in placed), default=0)
    return GridLayout(n_lectures=n_lectures, items=placed, max_occurrence=max_occurrence)


def color_for(total_occurrence: int, max_occurrence: int) -> float:
    """Hue in degrees on the red (0, frequent) to yellow (60, rare) ramp.

    Occurrences map linearly from the minimum possible (1) to the view's
    maximum; a view whose maximum is 1 renders everything red.
    """
    if not 1 <= total_occurrence <= max_occurrence:
        raise ValueError(
            f"need 1 <= occurrence <= max, got {total_occurrence} of {max_occurrence}"
        )
    if max_occurrence == 1:
        return 0.0
    return 60.0 * (1.0 - (total_occurrence - 1) / (max_occurrence - 1))


def index_map(table: OccurrenceTable, view: ViewFilter) -> GridLayout:
    filtered = filter_occurrences(table, view)
    spans = build_spans(filtered)
    phrase_texts = {pid: table.phrases[pid].text for pid in {s.phrase_id for s in spans}}
    return layout_greedy(spans, phrase_texts, table.n_transcripts)


def index_map_payload(table: OccurrenceTable, view: ViewFilter) -> dict:
    layout = index_map(table, view)
    items = sorted(layout.items, key=lambda s: (s.row, s.start_lecture, s.phrase_id))
    return {
        "n_lectures": layout.n_lectures,
        "max_occurrence": layout.max_occurrence,
        "items": [
            {
                "phrase": item.phrase_id,
                "tokens": list(table.phrases[item.phrase_id].tokens),
                "start": item.start_lecture,
                "end": item.end_lecture,
                "row": item.row,
                "occurrence": item.total_occurrence,
                "hue": color_for(item.total_occurrence, layout.max_occurrence),
            }
            for item in items
        ],
    }
