"""Course-transcript analytics built around a textbook index.

Noisy lecture transcripts are filtered through the normalized index of the
course textbook; the surviving phrases and word pairs drive three views of
a full course: a transcript index map, a chapter-to-transcript match, and a
lecture similarity graph.
"""

from .bundle import AnalysisBundle
from .chaptermatch import (
    ChapterMatcher,
    GroundTruth,
    ScoreMatrix,
    best_chapter,
    chapter_features,
    evaluate,
    load_groundtruth,
    score_matrix,
)
from .config import Config, load_config, normalize_mode
from .corpus import IndexPhrase, RawCorpus, corpus_phrases, load_corpus, normalize_index
from .errors import CorpusError, DataError, NotFittedError, SelectionError
from .indexer import (
    CourseStats,
    Occurrence,
    OccurrenceTable,
    PhraseMatcher,
    classify_phrase,
    course_stats,
    match_phrases,
    merge_variants,
)
from .indexmap import (
    GridLayout,
    SpanItem,
    ViewFilter,
    build_spans,
    color_for,
    filter_occurrences,
    index_map,
    index_map_payload,
    layout_greedy,
)
from .pairs import (
    CollocationScore,
    PairExtractor,
    PairTable,
    extract_pairs,
    g2,
    pair_vocabulary,
    rank_collocations,
)
from .similarity import (
    ClassicalMDS,
    DistanceMatrix,
    Embedding2D,
    build_graph,
    dice_distance,
    distance_matrix,
    mds_embed,
)
from .synth import (
    SynthCourse,
    SynthParams,
    degrade_transcript,
    degraded_corpus,
    generate_synthetic_course,
    run_matching_benchmark,
    write_course,
)
from .text import TokenSeq, default_stopwords, stem_word, tokenize, trim_stopwords

__version__ = "0.1.0"

__all__ = [
    "AnalysisBundle",
    "ChapterMatcher",
    "ClassicalMDS",
    "CollocationScore",
    "Config",
    "CorpusError",
    "CourseStats",
    "DataError",
    "DistanceMatrix",
    "Embedding2D",
    "GridLayout",
    "GroundTruth",
    "IndexPhrase",
    "NotFittedError",
    "Occurrence",
    "OccurrenceTable",
    "PairExtractor",
    "PairTable",
    "PhraseMatcher",
    "RawCorpus",
    "ScoreMatrix",
    "SelectionError",
    "SpanItem",
    "SynthCourse",
    "SynthParams",
    "TokenSeq",
    "ViewFilter",
    "best_chapter",
    "build_graph",
    "build_spans",
    "chapter_features",
    "classify_phrase",
    "color_for",
    "corpus_phrases",
    "course_stats",
    "default_stopwords",
    "degrade_transcript",
    "degraded_corpus",
    "dice_distance",
    "distance_matrix",
    "evaluate",
    "extract_pairs",
    "filter_occurrences",
    "g2",
    "generate_synthetic_course",
    "index_map",
    "index_map_payload",
    "layout_greedy",
    "load_config",
    "load_corpus",
    "load_groundtruth",
    "match_phrases",
    "mds_embed",
    "merge_variants",
    "normalize_index",
    "normalize_mode",
    "pair_vocabulary",
    "rank_collocations",
    "run_matching_benchmark",
    "score_matrix",
    "stem_word",
    "tokenize",
    "trim_stopwords",
    "write_course",
]
