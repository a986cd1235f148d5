import pytest

from scap.corpus import (
    concat_training,
    corpus_from_sources,
    load_manifest,
    parse_manifest,
    read_manifest,
    validate_corpus,
)
from scap.errors import CorpusError, ManifestError, ParameterError


def test_parse_manifest_skips_comments_and_blanks():
    rows = parse_manifest("# header\n\nalice\tp1\ttrain\ta/x.java\nbob\tp2\ttest\tb/y.java\n")
    assert rows == [("alice", "p1", "train", "a/x.java"), ("bob", "p2", "test", "b/y.java")]


@pytest.mark.parametrize("text,lineno", [
    ("alice\tp1\ttrain\n", 1),
    ("alice\tp1\ttrain\ta.java\nbob\tp1\tvalidate\tb.java\n", 2),
    ("# c\n\talice\ttrain\ta.java\n", 2),
])
def test_manifest_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ManifestError) as exc:
        parse_manifest(text)
    assert str(exc.value).startswith(f"line {lineno}:")


def test_validate_role_is_rejected():
    with pytest.raises(ManifestError, match="validate"):
        parse_manifest("a\tp\tvalidate\tf.java\n")


def test_missing_file(tmp_path):
    with pytest.raises(CorpusError, match="missing"):
        load_manifest("a\tp\ttrain\tnope.java\n", tmp_path)


def test_read_manifest(six_file_corpus):
    c = read_manifest(six_file_corpus)
    assert c.authors() == ["alice", "bob"]
    assert len(c.train_entries()) == 4 and len(c.test_entries("bob")) == 1
    assert validate_corpus(c) == []
    assert validate_corpus(c, domain_independent=True) == []
    assert c.manifest_text() == six_file_corpus.read_text()


def _rows(*specs):
    return [(a, p, r, path, b"x") for a, p, r, path in specs]


def test_validation_violations():
    one_author = corpus_from_sources(_rows(("a", "p", "train", "1"), ("a", "q", "test", "2")))
    assert any("at least 2" in v for v in validate_corpus(one_author))
    no_test = corpus_from_sources(_rows(("a", "p", "train", "1"), ("a", "q", "test", "2"),
                                        ("b", "p", "train", "3")))
    assert validate_corpus(no_test) == ["author b: no test files"]
    duplicate = corpus_from_sources(_rows(("a", "p", "train", "x/1"), ("a", "q", "test", "2"),
                                          ("b", "p", "train", "x/./1"), ("b", "q", "test", "4")))
    assert any("duplicate path" in v for v in validate_corpus(duplicate))


def test_domain_independence():
    shared = corpus_from_sources(_rows(("a", "p", "train", "1"), ("a", "p", "test", "2"),
                                       ("b", "q", "train", "3"), ("b", "r", "test", "4")))
    assert validate_corpus(shared) == []
    assert validate_corpus(shared, domain_independent=True) == [
        "author a: project p appears in both train and test"]


def test_concat_training_length():
    c = corpus_from_sources([("a", "p", "train", "1", b"abc"), ("a", "p", "train", "2", b"de"),
                             ("a", "p", "test", "3", b"zz"), ("b", "p", "train", "4", b"q")])
    assert concat_training(c, "a") == b"abc\nde"
    assert len(concat_training(c, "a")) == 3 + 2 + 1
    with pytest.raises(ParameterError):
        concat_training(c, "nobody")


def test_open_source_shaped_fixture():
    # eight authors, one held-out project each, train projects differ from test projects
    rows = []
    for a in range(8):
        for f in range(3):
            rows.append((f"dev{a}", f"dev{a}-lib", "train", f"dev{a}/lib/F{f}.java", b"class X {}"))
        rows.append((f"dev{a}", f"dev{a}-app", "test", f"dev{a}/app/Main.java", b"class Y {}"))
    c = corpus_from_sources(rows)
    assert len(c.authors()) == 8
    assert validate_corpus(c, domain_independent=True) == []


def test_bad_entry_fields():
    with pytest.raises(CorpusError):
        corpus_from_sources([("", "p", "train", "1", b"")])
    with pytest.raises(CorpusError):
        corpus_from_sources([("a", "p", "dev", "1", b"")])
