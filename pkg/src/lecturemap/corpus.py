"""Corpus loading and textbook-index normalization.

A corpus directory looks like::

    course/
      transcripts/lecture01.txt ... lectureNN.txt   (required, UTF-8 text)
      index.txt                                     (required, one entry per line)
      chapters/chapter01.txt ...                    (optional)
      index.extra.txt                               (optional, user-added phrases)
      stopwords.txt                                 (optional, overrides defaults)
      config.toml                                   (optional, key=value lines)
      groundtruth.txt                               (optional, lectureNN: 3,4 | -)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .config import Config, load_config
from .errors import CorpusError
from .text import default_stopwords, load_stopwords, stem_word, tokenize, trim_stopwords


@dataclass(frozen=True)
class IndexPhrase:
    """A normalized index entry: stemmed tokens with the line it came from."""

    tokens: tuple[str, ...]
    source_line: str = ""
    synthetic: bool = False

    def __post_init__(self) -> None:
        if len(self.tokens) < 1:
            raise ValueError("an index phrase needs at least one token")

    @property
    def text(self) -> str:
        return " ".join(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass
class Transcript:
    lecture_id: int
    label: str
    text: str


@dataclass
class Chapter:
    chapter_id: int
    label: str
    text: str


@dataclass
class RawCorpus:
    transcripts: list[Transcript]
    chapters: list[Chapter] = field(default_factory=list)
    raw_index_lines: list[tuple[int, str]] = field(default_factory=list)
    extra_index_lines: list[tuple[int, str]] = field(default_factory=list)
    stopwords: frozenset[str] = field(default_factory=default_stopwords)
    config: Config = field(default_factory=Config)
    root: Path | None = None

    def __post_init__(self) -> None:
        ids = [t.lecture_id for t in self.transcripts]
        if ids != list(range(1, len(ids) + 1)):
            raise CorpusError(f"lecture ids must be contiguous from 1, got {ids}")
        chapter_ids = [c.chapter_id for c in self.chapters]
        if sorted(set(chapter_ids)) != chapter_ids:
            raise CorpusError(f"chapter ids must be strictly increasing, got {chapter_ids}")

    @property
    def n_transcripts(self) -> int:
        return len(self.transcripts)


_NUMBERED = re.compile(r"(\d+)\D*$")
# Trailing page locators: ", 210", " 88-91", ", 12, 15" at the end of a line.
_TRAILING_LOCATORS = re.compile(r"[,;\s]+\d[\d,;\s–—-]*$")


def _numbered_files(directory: Path, stem_prefix: str) -> list[tuple[int, Path]]:
    found = []
    for path in directory.glob("*.txt"):
        if not path.stem.lower().startswith(stem_prefix):
            continue
        m = _NUMBERED.search(path.stem)
        if m:
            found.append((int(m.group(1)), path))
    found.sort(key=lambda pair: (pair[0], pair[1].name))
    return found


def load_corpus(root_path: "str | Path", config: Config | None = None) -> RawCorpus:
    """Read a corpus directory into memory.

    The index file is required and so is at least one transcript; chapters
    are optional (chapter matching is simply unavailable without them).
    """
    root = Path(root_path)
    if not root.is_dir():
        raise CorpusError(f"corpus directory not found: {root}")

    if config is None:
        cfg_path = root / "config.toml"
        config = load_config(cfg_path) if cfg_path.exists() else Config()
    config.validate()

    index_path = root / "index.txt"
    if not index_path.exists():
        raise CorpusError(f"index file required: {index_path} is missing")

    transcripts_dir = root / "transcripts"
    numbered = _numbered_files(transcripts_dir, "lecture") if transcripts_dir.is_dir() else []
    if not numbered:
        raise CorpusError(f"no transcripts found under {transcripts_dir}")
    transcripts = [
        Transcript(lecture_id=i, label=path.stem, text=path.read_text("utf-8"))
        for i, (_, path) in enumerate(numbered, start=1)
    ]

    chapters: list[Chapter] = []
    chapters_dir = root / "chapters"
    if chapters_dir.is_dir():
        for number, path in _numbered_files(chapters_dir, "chapter"):
            chapters.append(Chapter(chapter_id=number, label=path.stem, text=path.read_text("utf-8")))

    raw_index_lines = _read_index_lines(index_path)
    extra_path = root / "index.extra.txt"
    extra_index_lines = _read_index_lines(extra_path) if extra_path.exists() else []

    stopwords_path = None
    if config.stopwords_file:
        stopwords_path = Path(config.stopwords_file)
        if not stopwords_path.is_absolute():
            stopwords_path = root / stopwords_path
    elif (root / "stopwords.txt").exists():
        stopwords_path = root / "stopwords.txt"
    stopwords = load_stopwords(stopwords_path) if stopwords_path else default_stopwords()

    return RawCorpus(
        transcripts=transcripts,
        chapters=chapters,
        raw_index_lines=raw_index_lines,
        extra_index_lines=extra_index_lines,
        stopwords=stopwords,
        config=config,
        root=root,
    )


def _read_index_lines(path: Path) -> list[tuple[int, str]]:
    lines = []
    for raw in path.read_text("utf-8").splitlines():
        if not raw.strip():
            continue
        indent = len(raw) - len(raw.lstrip())
        lines.append((indent, raw.strip()))
    return lines


def _is_cross_reference(line: str) -> bool:
    lowered = line.lstrip().lower()
    return lowered == "see" or lowered.startswith(("see ", "see,", "see:"))


def normalize_index(
    raw_index_lines: "list[tuple[int, str]] | list[str]",
    stopwords: frozenset[str],
    *,
    strip_interior: bool = False,
    stem: bool = True,
    synthetic: bool = False,
) -> list[IndexPhrase]:
    """Turn raw index lines into normalized phrases.

    Every line becomes one candidate phrase on its own: the indentation
    hierarchy is discarded rather than concatenated, because long composite
    entries are nearly impossible to hit in noisy transcripts.  Cross
    references ("see ..."), trailing page locators, and edge stop words are
    removed, then each word is stemmed.  Duplicates collapse to the first
    occurrence; the result is returned in first-seen order so phrase ids
    are stable.
    """
    phrases: list[IndexPhrase] = []
    seen: set[tuple[str, ...]] = set()
    for entry in raw_index_lines:
        text = entry[1] if isinstance(entry, tuple) else entry
        line = text.strip()
        if not line or _is_cross_reference(line):
            continue
        line_no_pages = _TRAILING_LOCATORS.sub("", line)
        tokens = list(tokenize(line_no_pages).tokens)
        if strip_interior:
            tokens = [t for t in tokens if t not in stopwords]
        else:
            tokens = trim_stopwords(tokens, stopwords)
        if stem:
            tokens = [stem_word(t) for t in tokens]
        if not tokens or all(t.isdigit() for t in tokens):
            continue
        key = tuple(tokens)
        if key in seen:
            continue
        seen.add(key)
        phrases.append(IndexPhrase(tokens=key, source_line=text, synthetic=synthetic))
    return phrases


def corpus_phrases(corpus: RawCorpus) -> list[IndexPhrase]:
    """Normalize the main index plus any user-supplied extra entries."""
    cfg = corpus.config
    phrases = normalize_index(
        corpus.raw_index_lines,
        corpus.stopwords,
        strip_interior=cfg.strip_interior_stopwords,
        stem=cfg.stem,
    )
    if corpus.extra_index_lines:
        seen = {p.tokens for p in phrases}
        for extra in normalize_index(
            corpus.extra_index_lines,
            corpus.stopwords,
            strip_interior=cfg.strip_interior_stopwords,
            stem=cfg.stem,
            synthetic=True,
        ):
            if extra.tokens not in seen:
                seen.add(extra.tokens)
                phrases.append(extra)
    return phrases
