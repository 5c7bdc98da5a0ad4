import pytest

from lecturemap import AnalysisBundle, load_corpus

INDEX_TEXT = """\
binary tree
pointer
data structure
amortized analysis
  accounting method of
  aggregate analysis
sorting in linear time
random number generator
vertex cover
shortest path
see also trees, 412
"""

LECTURES = {
    1: (
        "so the binary tree is a data structure right and given the pointer to "
        "the root of the binary tree you have a way to find it"
    ),
    2: (
        "amortized analysis and the accounting method again for the data "
        "structure we saw with aggregate analysis"
    ),
    3: "today sorting in linear time using a random number generator for the bins",
    4: "we talked about the vertex cover and the shortest path and the vertex cover again",
}

CHAPTERS = {
    1: (
        "a binary tree stores items and a pointer links each node a binary tree "
        "is a data structure where the pointer is the handle"
    ),
    2: (
        "amortized analysis and the accounting method charge operations ahead "
        "amortized analysis via the accounting method and aggregate analysis"
    ),
    3: (
        "sorting in linear time is possible sorting in linear time needs a random "
        "number generator and another random number generator for sampling"
    ),
    4: (
        "the vertex cover problem and the shortest path problem a vertex cover is "
        "small when a shortest path is short"
    ),
}

GROUNDTRUTH = """\
lecture01: 1
lecture02: 2
lecture03: 3
lecture04: 4
"""


def write_fixture_course(root):
    (root / "transcripts").mkdir(parents=True)
    (root / "chapters").mkdir()
    for lid, text in LECTURES.items():
        (root / "transcripts" / f"lecture{lid:02d}.txt").write_text(text, "utf-8")
    for cid, text in CHAPTERS.items():
        (root / "chapters" / f"chapter{cid:02d}.txt").write_text(text, "utf-8")
    (root / "index.txt").write_text(INDEX_TEXT, "utf-8")
    (root / "groundtruth.txt").write_text(GROUNDTRUTH, "utf-8")
    return root


@pytest.fixture(scope="session")
def course_dir(tmp_path_factory):
    return write_fixture_course(tmp_path_factory.mktemp("course"))


@pytest.fixture(scope="session")
def bundle(course_dir):
    return AnalysisBundle(load_corpus(course_dir))
