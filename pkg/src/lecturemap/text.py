"""Tokenization, conservative stemming, and stop-word handling.

The stemmer is deliberately partial: it only undoes plural endings and the
two regular verb conjugations (-ing / -ed).  Aggressive stemming hurts more
than it helps on low-accuracy speech transcripts, and a conservative rule
set keeps stems readable in the visualizations.  What matters for matching
is that transcripts and the index pass through the *same* function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

_WORD_RE = re.compile(r"[a-z0-9]+")


@dataclass(frozen=True)
class TokenSeq:
    """A normalized word stream plus the original position of every token."""

    tokens: tuple[str, ...]
    source_positions: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.tokens) != len(self.source_positions):
            raise ValueError("tokens and source_positions must have equal length")

    def __len__(self) -> int:
        return len(self.tokens)

    def stemmed(self) -> "TokenSeq":
        return TokenSeq(tuple(stem_word(t) for t in self.tokens), self.source_positions)


def tokenize(text: str) -> TokenSeq:
    """Lowercase and split into word tokens.

    Punctuation, hyphens, and slashes all act as separators; digit-only
    tokens are kept (lecture speech is full of numbers worth indexing).
    """
    tokens = tuple(_WORD_RE.findall(text.lower()))
    return TokenSeq(tokens, tuple(range(len(tokens))))


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    data = resources.files("lecturemap").joinpath("data/stopwords.txt").read_text("utf-8")
    return frozenset(w.strip() for w in data.splitlines() if w.strip())


def load_stopwords(path: "str | Path") -> frozenset[str]:
    text = Path(path).read_text("utf-8")
    return frozenset(w.strip().lower() for w in text.splitlines() if w.strip())


# Words the suffix rules would mangle: mostly -thing compounds and words
# whose final "s" is not a plural.
_NO_STEM = frozenset(
    {
        "thing", "string", "bus", "gas", "during", "nothing", "something",
        "anything", "everything", "series", "species", "news", "perhaps",
        "always", "whereas", "besides",
    }
)

_MIN_STEM = 3
_ES_SUFFIXES = ("ses", "xes", "zes", "ches", "shes")
# Doubled consonants undone after -ing/-ed removal; ll/ss/zz stay doubled
# ("falling" -> "fall", "passed" -> "pass").
_UNDOUBLE = frozenset({"bb", "dd", "ff", "gg", "mm", "nn", "pp", "rr", "tt"})
_VOWELS = frozenset("aeiou")
# Final consonants that almost always lose a trailing "e" to conjugation
# ("amortize", "solve") plus bare "u" ("argue", "value").
_RESTORE_E = frozenset("vzu")


def _has_vowel(word: str) -> bool:
    return any(c in _VOWELS for c in word)


def _fix_verb_stem(stem: str) -> str:
    if stem[-2:] in _UNDOUBLE:
        return stem[:-1] if len(stem) > _MIN_STEM else stem
    if stem[-1] in _RESTORE_E and stem[-2] != stem[-1]:
        return stem + "e"
    return stem


def _stem_once(word: str) -> str:
    if len(word) <= _MIN_STEM or word in _NO_STEM:
        return word
    # Plural endings.
    if word.endswith("ies") and len(word) - 2 >= _MIN_STEM:
        return word[:-3] + "y"
    if word.endswith(_ES_SUFFIXES) and len(word) - 2 >= _MIN_STEM:
        return word[:-2]
    if word.endswith("s") and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    # Regular verb conjugations.
    if word.endswith("ied") and len(word) - 2 >= _MIN_STEM:
        return word[:-3] + "y"
    for suffix in ("ing", "ed"):
        if word.endswith(suffix):
            stem = word[: -len(suffix)]
            if len(stem) >= _MIN_STEM and _has_vowel(stem):
                return _fix_verb_stem(stem)
            return word
    return word


def stem_word(word: str) -> str:
    """Reduce a lowercase word to its partial stem.

    Applies the suffix rules until none fires, so the result is a fixed
    point: ``stem_word(stem_word(w)) == stem_word(w)`` for every word.
    """
    current = word
    for _ in range(len(word)):
        nxt = _stem_once(current)
        if nxt == current:
            return current
        current = nxt
    return current


def stem_tokens(seq: TokenSeq) -> TokenSeq:
    return seq.stemmed()


def trim_stopwords(tokens: "list[str] | tuple[str, ...]", stopwords: frozenset[str]) -> list[str]:
    """Drop stop words at the edges only; interior stop words survive."""
    start, end = 0, len(tokens)
    while start < end and tokens[start] in stopwords:
        start += 1
    while end > start and tokens[end - 1] in stopwords:
        end -= 1
    return list(tokens[start:end])


def strip_stopwords(tokens: "list[str] | tuple[str, ...]", stopwords: frozenset[str]) -> list[str]:
    """Drop stop words everywhere, edges and interior alike."""
    return [t for t in tokens if t not in stopwords]
