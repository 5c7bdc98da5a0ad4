import string

import pytest
from hypothesis import given, strategies as st

from lecturemap.text import (
    TokenSeq,
    default_stopwords,
    stem_word,
    tokenize,
    trim_stopwords,
)

words = st.text(alphabet=string.ascii_lowercase, min_size=1, max_size=14)


class TestTokenize:
    def test_plain_speech(self):
        assert list(tokenize("deal with with the data structure").tokens) == [
            "deal", "with", "with", "the", "data", "structure",
        ]

    def test_hyphen_and_punctuation_separate(self):
        assert list(tokenize("vertex-cover.").tokens) == ["vertex", "cover"]

    def test_digit_tokens_kept(self):
        assert list(tokenize("looking for 27 in a binary tree").tokens) == [
            "looking", "for", "27", "in", "a", "binary", "tree",
        ]

    def test_empty_text(self):
        assert tokenize("").tokens == ()

    def test_positions_parallel(self):
        seq = tokenize("a b-c d")
        assert seq.source_positions == (0, 1, 2, 3)
        with pytest.raises(ValueError):
            TokenSeq(("a",), (0, 1))

    @given(st.lists(st.text(alphabet=string.ascii_lowercase + string.digits, min_size=1), max_size=20))
    def test_join_retokenize_round_trip(self, tokens):
        rejoined = tokenize(" ".join(tokens))
        assert list(rejoined.tokens) == tokens


class TestStemmer:
    @pytest.mark.parametrize(
        "word,expected",
        [
            ("amortized", "amortize"),
            ("accounting", "account"),
            ("sorting", "sort"),
            ("matrix", "matrix"),
            ("trees", "tree"),
            ("heaps", "heap"),
            ("classes", "class"),
            ("boxes", "box"),
            ("churches", "church"),
            ("studies", "study"),
            ("studied", "study"),
            ("running", "run"),
            ("stopped", "stop"),
            ("solved", "solve"),
            ("analyzing", "analyze"),
            ("valued", "value"),
            ("string", "string"),
            ("thing", "thing"),
            ("bus", "bus"),
            ("class", "class"),
            ("its", "its"),
            ("series", "series"),
            ("27", "27"),
        ],
    )
    def test_examples(self, word, expected):
        assert stem_word(word) == expected

    @given(words)
    def test_idempotent(self, word):
        once = stem_word(word)
        assert stem_word(once) == once

    @given(words)
    def test_never_below_three_characters_unless_input_was(self, word):
        stemmed = stem_word(word)
        if len(word) >= 3:
            assert len(stemmed) >= 3

    def test_plural_of_gerund_cascades(self):
        assert stem_word("sortings") == "sort"


class TestTrimStopwords:
    def test_trailing(self):
        sw = default_stopwords()
        assert trim_stopwords(["accounting", "method", "of"], sw) == ["accounting", "method"]

    def test_interior_kept(self):
        sw = default_stopwords()
        assert trim_stopwords(["call", "by", "value"], sw) == ["call", "by", "value"]

    def test_all_stopwords(self):
        sw = default_stopwords()
        assert trim_stopwords(["of", "the"], sw) == []

    @given(st.lists(words, max_size=12))
    def test_edges_never_stopwords(self, tokens):
        sw = default_stopwords()
        out = trim_stopwords(tokens, sw)
        if out:
            assert out[0] not in sw
            assert out[-1] not in sw

    @given(st.lists(words, max_size=12))
    def test_output_is_contiguous_slice(self, tokens):
        sw = default_stopwords()
        out = trim_stopwords(tokens, sw)
        assert any(out == tokens[i : i + len(out)] for i in range(len(tokens) + 1))
