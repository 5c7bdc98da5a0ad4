"""One immutable snapshot of everything the CLI and service query.

The bundle runs the full pipeline once at construction time: normalize the
index, stem the transcripts and chapters, match phrases, extract pairs, and
compute course statistics.  Every payload method below is a pure function
of the bundle plus its arguments, so identical requests produce identical
answers.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .chaptermatch import ChapterMatcher, GroundTruth, load_groundtruth
from .config import Config, normalize_mode
from .corpus import RawCorpus, corpus_phrases, load_corpus
from .errors import DataError, SelectionError
from .indexer import OccurrenceTable, classify_table, course_stats
from .indexer import PhraseMatcher
from .indexmap import ViewFilter, index_map_payload
from .pairs import PairExtractor, PairTable, pair_vocabulary, rank_collocations
from .similarity import build_graph, distance_matrix, mds_embed
from .text import TokenSeq, tokenize


class AnalysisBundle:
    def __init__(self, corpus: RawCorpus):
        self.corpus = corpus
        self.config: Config = corpus.config
        self.phrases = corpus_phrases(corpus)
        if not self.phrases:
            raise DataError("index normalization produced no phrases; nothing to analyze")

        self.transcript_seqs: list[TokenSeq] = [self._normalize(t.text) for t in corpus.transcripts]
        self.chapter_seqs: list[tuple[int, TokenSeq]] = [
            (c.chapter_id, self._normalize(c.text)) for c in corpus.chapters
        ]

        self.table: OccurrenceTable = PhraseMatcher(
            longest_match_only=self.config.longest_match_only
        ).fit(self.phrases).transform(self.transcript_seqs)
        self.vocabulary = pair_vocabulary(self.phrases, corpus.stopwords)
        self.pair_table: PairTable = (
            PairExtractor(window=self.config.pair_window)
            .fit(self.vocabulary)
            .transform(self.transcript_seqs)
        )
        self.stats = course_stats(self.table, self.transcript_seqs)
        self.truth: GroundTruth | None = None
        if corpus.root is not None:
            gt_path = Path(corpus.root) / "groundtruth.txt"
            if gt_path.exists():
                self.truth = load_groundtruth(gt_path, [c.chapter_id for c in corpus.chapters])
        self._matchers: dict[str, ChapterMatcher] = {}

    @classmethod
    def from_path(cls, root: "str | Path", config: Config | None = None) -> "AnalysisBundle":
        return cls(load_corpus(root, config))

    def _normalize(self, text: str) -> TokenSeq:
        seq = tokenize(text)
        return seq.stemmed() if self.config.stem else seq

    # -- chapter matching ------------------------------------------------

    @property
    def has_chapters(self) -> bool:
        return bool(self.corpus.chapters)

    def matcher(self, mode: str) -> ChapterMatcher:
        mode = normalize_mode(mode)
        if not self.has_chapters:
            raise DataError("this corpus has no chapters; chapter matching is disabled")
        if mode not in self._matchers:
            self._matchers[mode] = ChapterMatcher(
                mode=mode,
                count_rule=self.config.count_rule,
                smooth=self.config.smooth_counts,
                window=self.config.pair_window,
                g2_threshold=self.config.g2_threshold,
                longest_match_only=self.config.longest_match_only,
            ).fit(self.table, self.pair_table, self.chapter_seqs, self.vocabulary)
        return self._matchers[mode]

    def chaptermatch_payload(self, mode: str, zoom: int | None = None) -> dict:
        matcher = self.matcher(mode)
        matrix = matcher.score_matrix(zoom if zoom is not None else self.default_zoom())
        return matrix.to_json_dict(self.truth)

    def zoom_sweep_payload(self, mode: str, zooms: Sequence[int]) -> dict:
        matcher = self.matcher(mode)
        if self.truth is None:
            raise DataError("zoom sweep evaluation requires groundtruth.txt")
        curve = matcher.accuracy_curve(self.truth, list(zooms))
        return {
            "mode": normalize_mode(mode),
            "zooms": list(curve),
            "accuracy": [curve[z] for z in curve],
        }

    def default_zoom(self) -> int:
        return max(1, min(self.config.zoom, self.corpus.n_transcripts))

    # -- view payloads ---------------------------------------------------

    def indexmap_payload(self, zoom: int, focus: int = 1, contrast: int = 1) -> dict:
        return index_map_payload(self.table, ViewFilter(zoom, focus, contrast))

    def similarity_payload(self, selection: Sequence[int]) -> dict:
        d = distance_matrix(self.table, list(selection))
        graph = build_graph(mds_embed(d), d, self.config.t_strong, self.config.t_weak)
        return graph

    def collocations_payload(self, top_k: int | None = None, min_g2: float | None = None) -> list[dict]:
        ranked = rank_collocations(self.pair_table, top_k=top_k, min_g2=min_g2, phrases=self.phrases)
        return [score.to_json_dict() for score in ranked]

    def stats_payload(self) -> dict:
        return self.stats.to_json_dict()

    def phrases_payload(self) -> dict:
        classes = classify_table(self.table, self.config.theme_fraction)
        return {
            "phrases": [
                {
                    "id": pc.phrase_id,
                    "tokens": list(self.table.phrases[pc.phrase_id].tokens),
                    "text": self.table.phrases[pc.phrase_id].text,
                    "synthetic": self.table.phrases[pc.phrase_id].synthetic,
                    "doc_freq": pc.doc_freq,
                    "kind": pc.kind,
                }
                for pc in classes
            ]
        }

    def meta_payload(self) -> dict:
        n = self.corpus.n_transcripts
        max_count = max(
            (occ.count for _, _, occ in self.table.records()),
            default=1,
        )
        max_len = max((len(p) for p in self.phrases), default=1)
        return {
            "n_transcripts": n,
            "n_chapters": len(self.corpus.chapters),
            "lectures": [{"id": t.lecture_id, "label": t.label} for t in self.corpus.transcripts],
            "chapters": [{"id": c.chapter_id, "label": c.label} for c in self.corpus.chapters],
            "n_phrases": self.table.n_phrases,
            "bounds": {
                "zoom": {"min": 1, "max": n},
                "focus": {"min": 1, "max": max_count},
                "contrast": {"min": 1, "max": max_len},
            },
            "defaults": {
                "zoom": self.default_zoom(),
                "focus": self.config.focus,
                "contrast": self.config.contrast,
                "mode": self.config.mode,
            },
            "modes": ["phrases", "pairs", "g2pairs", "phrases_and_pairs"],
            "has_chapters": self.has_chapters,
            "has_groundtruth": self.truth is not None,
        }

    # -- selection handling ----------------------------------------------

    def resolve_selection(self, items: Sequence[str]) -> list[int]:
        """Phrase ids or exact phrase text; raises listing any offender."""
        by_text = {p.text: pid for pid, p in enumerate(self.table.phrases)}
        resolved: list[int] = []
        unknown: list[str] = []
        for item in items:
            item = item.strip()
            if not item:
                continue
            if item.isdigit() and int(item) < self.table.n_phrases:
                resolved.append(int(item))
                continue
            pid = by_text.get(item)
            if pid is None:
                # Accept unstemmed input for convenience.
                stemmed = " ".join(self._normalize(item).tokens)
                pid = by_text.get(stemmed)
            if pid is None:
                unknown.append(item)
            else:
                resolved.append(pid)
        if unknown:
            raise SelectionError(f"unknown phrases: {', '.join(unknown)}")
        if not resolved:
            raise SelectionError("phrase selection is empty")
        return resolved
