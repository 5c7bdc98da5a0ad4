"""Synthetic courses with known ground truth and ASR-like degradation.

Real course recordings cannot be redistributed, so benchmarks run on
generated ones: each chapter gets its own content vocabulary (with a
controlled overlap between adjacent chapters), one lecture is sampled per
chapter, and the transcript is then garbled by replacing tokens with
out-of-domain noise words at a configurable word error rate.  Substitution
noise keeps token counts intact and, because the noise vocabulary is
disjoint from every content vocabulary, any phrase hit in a degraded
transcript is a true positive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Sequence

from .chaptermatch import ChapterMatcher, GroundTruth
from .config import Config, normalize_mode
from .corpus import Chapter, RawCorpus, Transcript, corpus_phrases
from .indexer import PhraseMatcher
from .pairs import PairExtractor, pair_vocabulary
from .text import default_stopwords, tokenize
from .validation import check_probability

_CONSONANTS = "bcdfgklmnprstvz"
_VOWEL_CHOICES = "aeiou"

# Spoken filler between content words; all of these are stop words.
_PAD_WORDS = (
    "the", "a", "of", "and", "to", "in", "is", "that", "it", "you",
    "so", "we", "this", "can", "for", "on", "with", "as", "be", "have",
)

_PHRASES_PER_CHAPTER = 8
_PHRASE_PLANTS_LECTURE = 6
_PHRASE_PLANTS_CHAPTER = 4
_CONTENT_DENSITY = 0.5


@dataclass
class SynthParams:
    n_chapters: int = 10
    chapter_vocab_size: int = 60
    shared_vocab_fraction: float = 0.2
    lecture_length_tokens: int = 6000
    wer: float = 0.75
    noise_vocab_size: int = 5000
    seed: int = 0
    confusable_noise: bool = False

    def validate(self) -> "SynthParams":
        if self.n_chapters < 1 or self.chapter_vocab_size < 2:
            raise ValueError("need at least one chapter and a vocabulary of >= 2 words")
        check_probability(self.shared_vocab_fraction, "shared_vocab_fraction")
        check_probability(self.wer, "wer")
        if self.lecture_length_tokens < 10 or self.noise_vocab_size < 1:
            raise ValueError("lecture length and noise vocabulary must be positive")
        shared = round(self.shared_vocab_fraction * self.chapter_vocab_size)
        if 2 * shared > self.chapter_vocab_size:
            raise ValueError("shared_vocab_fraction too large for the vocabulary size")
        return self


@dataclass
class SynthCourse:
    corpus: RawCorpus
    truth: GroundTruth
    noise_vocab: list[str] = field(default_factory=list)
    chapter_vocabs: list[list[str]] = field(default_factory=list)
    params: SynthParams = field(default_factory=SynthParams)


def _make_word(rng: random.Random, used: set[str], forbidden: frozenset[str]) -> str:
    # Consonant-vowel syllables: such words end in a vowel, so the stemmer
    # leaves them untouched and matching is exact.
    while True:
        n_syllables = rng.randint(2, 4)
        word = "".join(rng.choice(_CONSONANTS) + rng.choice(_VOWEL_CHOICES) for _ in range(n_syllables))
        if word not in used and word not in forbidden:
            used.add(word)
            return word


def _build_stream(
    rng: random.Random,
    vocab: Sequence[str],
    n_tokens: int,
    planted_phrases: Sequence[tuple[str, str]],
    plants_each: int,
) -> list[str]:
    tokens = [
        rng.choice(vocab) if rng.random() < _CONTENT_DENSITY else rng.choice(_PAD_WORDS)
        for _ in range(n_tokens)
    ]
    for phrase in planted_phrases:
        for _ in range(plants_each):
            pos = rng.randrange(0, n_tokens - 1)
            tokens[pos], tokens[pos + 1] = phrase
    return tokens


def generate_synthetic_course(params: SynthParams) -> SynthCourse:
    """Build a clean course: texts, index, chapters, and diagonal truth.

    Lecture k is sampled from chapter k's vocabulary, so the ground truth
    maps every lecture to its own chapter.  Deterministic given the seed.
    """
    params.validate()
    rng = random.Random(params.seed)
    stopwords = default_stopwords()
    used: set[str] = set()

    n = params.n_chapters
    shared_count = round(params.shared_vocab_fraction * params.chapter_vocab_size)
    shared = [
        [_make_word(rng, used, stopwords) for _ in range(shared_count)] for _ in range(max(0, n - 1))
    ]
    vocabs: list[list[str]] = []
    for k in range(n):
        vocab = list(shared[k - 1]) if k > 0 else []
        if k < n - 1:
            vocab += shared[k]
        while len(vocab) < params.chapter_vocab_size:
            vocab.append(_make_word(rng, used, stopwords))
        vocabs.append(vocab)

    two_word: list[list[tuple[str, str]]] = []
    index_lines: list[str] = []
    for vocab in vocabs:
        phrases = []
        for _ in range(_PHRASES_PER_CHAPTER):
            w1, w2 = rng.sample(vocab, 2)
            phrases.append((w1, w2))
        two_word.append(phrases)
        index_lines.extend(vocab)
        index_lines.extend(f"{w1} {w2}" for w1, w2 in phrases)

    chapter_length = max(500, params.lecture_length_tokens // 3)
    chapters = []
    transcripts = []
    for k in range(n):
        chapter_tokens = _build_stream(rng, vocabs[k], chapter_length, two_word[k], _PHRASE_PLANTS_CHAPTER)
        chapters.append(Chapter(k + 1, f"chapter{k + 1:02d}", " ".join(chapter_tokens)))
        lecture_tokens = _build_stream(
            rng, vocabs[k], params.lecture_length_tokens, two_word[k], _PHRASE_PLANTS_LECTURE
        )
        transcripts.append(Transcript(k + 1, f"lecture{k + 1:02d}", " ".join(lecture_tokens)))

    if params.confusable_noise:
        # Reuse content words as noise: substitutions now create credible
        # false hits in the wrong lectures, which is a much harder setting.
        noise = sorted(used)
    else:
        noise = [_make_word(rng, used, stopwords) for _ in range(params.noise_vocab_size)]

    corpus = RawCorpus(
        transcripts=transcripts,
        chapters=chapters,
        raw_index_lines=[(0, line) for line in index_lines],
        stopwords=stopwords,
        config=Config(),
    )
    truth = GroundTruth({k + 1: frozenset({k + 1}) for k in range(n)})
    return SynthCourse(corpus, truth, noise, vocabs, params)


def degrade_transcript(
    tokens: Sequence[str], wer: float, noise_vocab: Sequence[str], seed: int
) -> list[str]:
    """Replace each token with a random noise word with probability ``wer``.

    Substitution-only, so the token count is preserved.
    """
    check_probability(wer, "wer")
    if wer > 0 and not noise_vocab:
        raise ValueError("a non-empty noise vocabulary is required when wer > 0")
    rng = random.Random(seed)
    return [rng.choice(noise_vocab) if rng.random() < wer else tok for tok in tokens]


def degraded_corpus(course: SynthCourse, wer: float | None = None) -> RawCorpus:
    """The course's corpus with every lecture passed through the noise model."""
    params = course.params
    rate = params.wer if wer is None else wer
    noisy = []
    for t in course.corpus.transcripts:
        tokens = degrade_transcript(
            tokenize(t.text).tokens, rate, course.noise_vocab, seed=params.seed * 100003 + t.lecture_id
        )
        noisy.append(Transcript(t.lecture_id, t.label, " ".join(tokens)))
    return replace(course.corpus, transcripts=noisy)


def write_course(corpus: RawCorpus, truth: GroundTruth, out_dir: "str | Path") -> Path:
    """Write a corpus directory usable by every CLI command."""
    root = Path(out_dir)
    (root / "transcripts").mkdir(parents=True, exist_ok=True)
    (root / "chapters").mkdir(parents=True, exist_ok=True)
    for t in corpus.transcripts:
        (root / "transcripts" / f"lecture{t.lecture_id:02d}.txt").write_text(t.text + "\n", "utf-8")
    for c in corpus.chapters:
        (root / "chapters" / f"chapter{c.chapter_id:02d}.txt").write_text(c.text + "\n", "utf-8")
    (root / "index.txt").write_text("\n".join(text for _, text in corpus.raw_index_lines) + "\n", "utf-8")
    lines = []
    for lid in sorted(truth.valid):
        chapters = truth.valid[lid]
        spec = ",".join(str(c) for c in sorted(chapters)) if chapters else "-"
        lines.append(f"lecture{lid:02d}: {spec}")
    (root / "groundtruth.txt").write_text("\n".join(lines) + "\n", "utf-8")
    return root


def run_matching_benchmark(
    params: SynthParams,
    modes: Sequence[str] = ("phrases", "pairs", "g2pairs", "phrases_and_pairs"),
    zoom_range: Sequence[int] | None = None,
    window: int = 10,
) -> dict[tuple[str, int], float]:
    """Generate, degrade, analyze, and score one synthetic course.

    Returns accuracy per (mode, zoom); zoom values beyond the transcript
    count are clamped.
    """
    params.validate()
    course = generate_synthetic_course(params)
    corpus = degraded_corpus(course)

    phrases = corpus_phrases(corpus)
    seqs = [tokenize(t.text).stemmed() for t in corpus.transcripts]
    chapter_seqs = [(c.chapter_id, tokenize(c.text).stemmed()) for c in corpus.chapters]
    table = PhraseMatcher().fit(phrases).transform(seqs)
    vocabulary = pair_vocabulary(phrases, corpus.stopwords)
    pair_table = PairExtractor(window=window).fit(vocabulary).transform(seqs)

    zooms = list(zoom_range) if zoom_range else list(range(1, corpus.n_transcripts + 1))
    results: dict[tuple[str, int], float] = {}
    for mode in modes:
        matcher = ChapterMatcher(mode=normalize_mode(mode), window=window).fit(
            table, pair_table, chapter_seqs, vocabulary
        )
        curve = matcher.accuracy_curve(course.truth, zooms)
        for z, accuracy in curve.items():
            results[(normalize_mode(mode), z)] = accuracy
    return results


def benchmark_to_csv(results: dict[tuple[str, int], float]) -> str:
    lines = ["mode,zoom,accuracy"]
    for (mode, zoom), accuracy in sorted(results.items()):
        lines.append(f"{mode},{zoom},{accuracy:.4f}")
    return "\n".join(lines) + "\n"
