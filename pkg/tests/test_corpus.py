import pytest

from lecturemap.config import Config, parse_config_text
from lecturemap.corpus import corpus_phrases, load_corpus, normalize_index
from lecturemap.errors import CorpusError, DataError
from lecturemap.text import default_stopwords

SW = default_stopwords()


def _texts(phrases):
    return [p.text for p in phrases]


class TestNormalizeIndex:
    def test_hierarchy_discarded_per_line(self):
        lines = [(0, "amortized analysis"), (2, "accounting method of"), (2, "aggregate analysis")]
        assert _texts(normalize_index(lines, SW)) == [
            "amortize analysis",
            "account method",
            "aggregate analysis",
        ]

    def test_line_kept_verbatim_when_clean(self):
        assert _texts(normalize_index(["random number generator"], SW)) == ["random number generator"]

    def test_cross_reference_dropped(self):
        assert normalize_index(["see also trees, 412"], SW) == []
        assert normalize_index(["see hashing"], SW) == []

    def test_trailing_page_numbers_stripped(self):
        assert _texts(normalize_index(["vertex cover, 412", "heap 88-91", "stack, 12, 15"], SW)) == [
            "vertex cover",
            "heap",
            "stack",
        ]

    def test_digits_inside_phrase_survive(self):
        assert _texts(normalize_index(["2-3 tree, 210"], SW)) == ["2 3 tree"]

    def test_pure_number_line_dropped(self):
        assert normalize_index(["412"], SW) == []

    def test_interior_stopwords_kept_by_default(self):
        assert _texts(normalize_index(["call by value"], SW)) == ["call by value"]
        assert _texts(normalize_index(["sorting in linear time"], SW)) == ["sort in linear time"]

    def test_strip_interior_flag(self):
        assert _texts(normalize_index(["sorting in linear time"], SW, strip_interior=True)) == [
            "sort linear time"
        ]

    def test_deduplicates_normal_forms(self):
        phrases = normalize_index(["binary trees", "binary tree", "Binary Tree, 10"], SW)
        assert _texts(phrases) == ["binary tree"]

    def test_no_empty_phrases(self):
        phrases = normalize_index(["of the", "", "   ", "a"], SW)
        assert phrases == []

    def test_stopword_only_line_dropped_edge_rule(self):
        assert normalize_index(["the of a"], SW) == []


class TestLoadCorpus:
    def test_basic_layout(self, tmp_path):
        (tmp_path / "transcripts").mkdir()
        for i in range(1, 4):
            (tmp_path / "transcripts" / f"lecture{i:02d}.txt").write_text(f"text {i}", "utf-8")
        (tmp_path / "index.txt").write_text("binary tree\n", "utf-8")
        corpus = load_corpus(tmp_path)
        assert [t.lecture_id for t in corpus.transcripts] == [1, 2, 3]
        assert corpus.chapters == []
        assert corpus.raw_index_lines == [(0, "binary tree")]

    def test_missing_index_fatal(self, tmp_path):
        (tmp_path / "transcripts").mkdir()
        (tmp_path / "transcripts" / "lecture01.txt").write_text("x", "utf-8")
        with pytest.raises(CorpusError, match="index file required"):
            load_corpus(tmp_path)

    def test_zero_transcripts_fatal(self, tmp_path):
        (tmp_path / "index.txt").write_text("tree\n", "utf-8")
        with pytest.raises(CorpusError, match="no transcripts"):
            load_corpus(tmp_path)

    def test_chapters_loaded_in_id_order(self, course_dir):
        corpus = load_corpus(course_dir)
        assert [c.chapter_id for c in corpus.chapters] == [1, 2, 3, 4]
        assert corpus.chapters[0].label == "chapter01"

    def test_lecture_order_follows_filename_numbering(self, tmp_path):
        (tmp_path / "transcripts").mkdir()
        (tmp_path / "transcripts" / "lecture10.txt").write_text("later", "utf-8")
        (tmp_path / "transcripts" / "lecture02.txt").write_text("earlier", "utf-8")
        (tmp_path / "index.txt").write_text("tree\n", "utf-8")
        corpus = load_corpus(tmp_path)
        assert [t.text for t in corpus.transcripts] == ["earlier", "later"]
        assert [t.lecture_id for t in corpus.transcripts] == [1, 2]

    def test_indent_levels_recorded(self, tmp_path):
        (tmp_path / "transcripts").mkdir()
        (tmp_path / "transcripts" / "lecture01.txt").write_text("x", "utf-8")
        (tmp_path / "index.txt").write_text("parent\n  child one\n    grandchild\n", "utf-8")
        corpus = load_corpus(tmp_path)
        assert corpus.raw_index_lines == [(0, "parent"), (2, "child one"), (4, "grandchild")]

    def test_extra_index_marked_synthetic(self, tmp_path):
        (tmp_path / "transcripts").mkdir()
        (tmp_path / "transcripts" / "lecture01.txt").write_text("make change with java", "utf-8")
        (tmp_path / "index.txt").write_text("tree\n", "utf-8")
        (tmp_path / "index.extra.txt").write_text("make change\njava\n", "utf-8")
        phrases = corpus_phrases(load_corpus(tmp_path))
        flags = {p.text: p.synthetic for p in phrases}
        assert flags == {"tree": False, "make change": True, "java": True}

    def test_stopwords_override(self, tmp_path):
        (tmp_path / "transcripts").mkdir()
        (tmp_path / "transcripts" / "lecture01.txt").write_text("x", "utf-8")
        (tmp_path / "index.txt").write_text("tree\n", "utf-8")
        (tmp_path / "stopwords.txt").write_text("tree\n", "utf-8")
        corpus = load_corpus(tmp_path)
        assert corpus.stopwords == frozenset({"tree"})

    def test_config_file_read(self, tmp_path):
        (tmp_path / "transcripts").mkdir()
        (tmp_path / "transcripts" / "lecture01.txt").write_text("x", "utf-8")
        (tmp_path / "index.txt").write_text("tree\n", "utf-8")
        (tmp_path / "config.toml").write_text("pair_window = 5\nstrip_interior_stopwords = true\n", "utf-8")
        corpus = load_corpus(tmp_path)
        assert corpus.config.pair_window == 5
        assert corpus.config.strip_interior_stopwords is True


class TestConfig:
    def test_defaults_valid(self):
        Config().validate()

    def test_parse_types_and_comments(self):
        cfg = parse_config_text("# comment\nzoom = 7\nsmooth_counts = yes  # inline\nmode = combined\n")
        assert cfg.zoom == 7
        assert cfg.smooth_counts is True
        assert cfg.mode == "phrases_and_pairs"

    @pytest.mark.parametrize(
        "text",
        [
            "pair_window = 0",
            "theme_fraction = 1.5",
            "count_rule = weird",
            "t_strong = 0.9\nt_weak = 0.5",
            "mystery = 1",
            "zoom = banana",
        ],
    )
    def test_bad_values_rejected(self, text):
        with pytest.raises(DataError):
            parse_config_text(text)
