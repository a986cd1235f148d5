"""Seeded synthetic Java corpora with a controlled authorial signal.

Two corpus kinds are provided:

``class_signal``
    Every author writes with the same layout and draws simple-variable and
    method names from the same pools.  Only the class names and object
    variable names come from an author-specific vocabulary, so class
    identifiers are the sole authorial signal.

``structural_style``
    Every author draws class and method names from shared pools and simple
    variable names from one shared pool, handed out per project so that an
    author's test project uses the names of another author's training
    project.  What separates authors is a fixed formatting habit:
    indentation, brace placement, operator and keyword spacing, blank
    lines, line endings, increment placement and parenthesis padding.

Each author gets ``files_per_author`` files, split evenly between a
training project and a different test project.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from .corpus import Corpus, corpus_from_sources

SIMPLE_POOL = ["i", "j", "k", "n", "year", "count", "flag", "mid", "total", "index", "size", "e", "f"]
# longer shared names, handed out per project in the structural corpus
PROJECT_SIMPLE_POOL = ["year", "count", "flag", "mid", "total", "index", "size", "offset", "limit",
                       "width", "height", "score", "level", "amount", "cursor", "steps"]
METHOD_POOL = ["getValue", "init", "run", "update", "compute", "setString", "getInteger", "process",
               "reset", "check"]
SHARED_CLASS_POOL = ["Node", "Item", "Record", "Entry", "Holder", "Pair", "Task", "Buffer"]
SHARED_OBJECT_POOL = ["item", "node", "entry", "data", "holder", "current", "result", "other"]

_SYLLABLES = ["kel", "mar", "vo", "zin", "tra", "bel", "qu", "or", "dax", "lum", "fen", "ryo",
              "sib", "gal", "wen", "tor", "pim", "hax", "cor", "yel", "nud", "esk", "jor", "fal"]
_SUFFIXES = ["Manager", "Registry", "Ledger", "Gadget", "Widget", "Engine", "Broker", "Vault",
             "Parcel", "Beacon", "Keeper", "Scribe"]


@dataclass(frozen=True)
class Style:
    indent: str
    allman: bool
    op_space: bool
    kw_space: bool
    blank_lines: int
    newline: str = "\n"
    pre_increment: bool = False
    paren_pad: bool = False

    @property
    def eq(self) -> str:
        return " = " if self.op_space else "="


STYLES = [
    Style("    ", False, True, True, 1),
    Style("\t", True, False, False, 0, "\r\n", True),
    Style("  ", False, False, True, 2, "\n", False, True),
    Style("   ", True, True, False, 1, "\r\n", False, True),
    Style("\t", False, True, False, 0, "\n", True, True),
    Style("        ", True, False, True, 2, "\r\n", True, False),
    Style("  ", True, True, True, 0, "\n", True, False),
    Style("    ", False, False, False, 2, "\r\n", False, False),
]

DEFAULT_STYLE = STYLES[0]


def _author_vocabulary(rng: random.Random, size: int) -> tuple[list[str], list[str]]:
    classes, objects = set(), set()
    while len(classes) < size:
        root = "".join(rng.sample(_SYLLABLES, 2)).capitalize()
        classes.add(root + rng.choice(_SUFFIXES))
    while len(objects) < size:
        objects.add(rng.choice(_SYLLABLES) + "".join(s.capitalize() for s in rng.sample(_SYLLABLES, 2)))
    return sorted(classes), sorted(objects)


class _Writer:
    def __init__(self, style: Style):
        self.style = style
        self.lines: list[str] = []
        self.depth = 0

    def line(self, text: str = "") -> None:
        self.lines.append((self.style.indent * self.depth + text) if text else "")

    def open(self, header: str) -> None:
        if self.style.allman:
            self.line(header)
            self.line("{")
        else:
            self.line(header + " {")
        self.depth += 1

    def close(self, trailer: str = "") -> None:
        self.depth -= 1
        self.line("}" + trailer)

    def gap(self) -> None:
        for _ in range(self.style.blank_lines):
            self.line()

    def text(self) -> str:
        nl = self.style.newline
        return nl.join(self.lines) + nl


def _kw(style: Style, word: str) -> str:
    return word + (" (" if style.kw_space else "(") + (" " if style.paren_pad else "")


def _close_paren(style: Style) -> str:
    return " )" if style.paren_pad else ")"


def _incr(style: Style, name: str, op: str) -> str:
    return op + name if style.pre_increment else name + op


def _op(style: Style, a: str, op: str, b: str) -> str:
    return f"{a} {op} {b}" if style.op_space else f"{a}{op}{b}"


def java_file(rng: random.Random, style: Style, class_pool: list[str], object_pool: list[str],
              simple_pool: list[str] = SIMPLE_POOL, method_pool: list[str] = METHOD_POOL) -> str:
    """One compilable-looking Java source file."""
    outer, helper, other = rng.sample(class_pool, 3)
    obj_a, obj_b, obj_c = rng.sample(object_pool, 3)
    s = rng.sample(simple_pool, 5)
    m = rng.sample(method_pool, 4)
    w = _Writer(style)
    w.open(f"public class {outer}")
    w.line(f"private {helper} {obj_a}{style.eq}new {helper}();")
    w.line(f"private {other} {obj_b};")
    w.line(f"private int {s[0]}{style.eq}0;")
    w.line(f"private boolean {s[1]};")
    w.gap()
    w.open(f"public {outer}({other} {obj_c})")
    w.line(f"this.{obj_b}{style.eq}{obj_c};")
    w.close()
    w.gap()
    w.open(f"public int {m[0]}(int {s[2]})")
    loop = _op(style, s[3], "<", s[2])
    w.open(f"{_kw(style, 'for')}int {s[3]}{style.eq}0; {loop}; {_incr(style, s[3], '++')}{_close_paren(style)}")
    w.line(_op(style, s[0], "+=", s[3]) + ";")
    w.close()
    w.line(f"return {s[0]};")
    w.close()
    w.gap()
    w.open(f"public {helper} {m[1]}()")
    w.open(f"{_kw(style, 'if')}{s[1]}{_close_paren(style)}")
    w.line(f"{obj_a}{style.eq}new {helper}();")
    w.close()
    w.line(f"return {obj_a};")
    w.close()
    w.gap()
    w.open(f"public void {m[2]}(long {s[4]})")
    w.line(f"{s[1]}{style.eq}{_op(style, s[4], '>', s[0])};")
    w.open(f"{_kw(style, 'while')}{_op(style, s[0], '>', '0')}{_close_paren(style)}")
    w.line(_incr(style, s[0], "--") + ";")
    w.close()
    w.close()
    if rng.random() < 0.5:
        w.gap()
        w.open(f"public String {m[3]}({helper} {obj_c})")
        w.line(f"return String.valueOf({obj_c});")
        w.close()
    w.gap()
    w.open(f"static class {helper}")
    w.line(f"int {s[0]};")
    w.close()
    w.gap()
    w.open(f"static class {other}")
    w.line(f"{helper} {obj_a};")
    w.close()
    w.close()
    return w.text()


def _project_names(kind: str, authors: int, author: int, role: str) -> list[str]:
    if kind == "class_signal":
        return SIMPLE_POOL
    # the test project of one author reuses the training-project names of the
    # next author, so shared simple names point at the wrong author
    slot = author if role == "train" else (author + 1) % authors
    size = 6
    start = (slot * size) % len(PROJECT_SIMPLE_POOL)
    return [PROJECT_SIMPLE_POOL[(start + i) % len(PROJECT_SIMPLE_POOL)] for i in range(size)]


def _build(kind: str, seed: int, authors: int, files_per_author: int, vocab_size: int) -> list[tuple]:
    if kind not in ("class_signal", "structural_style"):
        raise ValueError(f"unknown synthetic corpus kind {kind!r}")
    if files_per_author < 2:
        raise ValueError("need at least 2 files per author (one train, one test)")
    rng = random.Random(seed)
    rows = []
    for a in range(authors):
        author = f"author{a + 1:02d}"
        if kind == "class_signal":
            classes, objects = _author_vocabulary(rng, vocab_size)
            style = DEFAULT_STYLE
        else:
            classes, objects = SHARED_CLASS_POOL, SHARED_OBJECT_POOL
            style = STYLES[a % len(STYLES)]
        n_train = (files_per_author + 1) // 2
        for f in range(files_per_author):
            role = "train" if f < n_train else "test"
            project = f"{author}-p{1 if role == 'train' else 2}"
            path = f"{author}/{project}/File{f + 1:02d}.java"
            simple = _project_names(kind, authors, a, role)
            source = java_file(rng, style, classes, objects, simple_pool=simple)
            rows.append((author, project, role, path, source.encode()))
    return rows


def synthetic_corpus(kind: str = "class_signal", seed: int = 0, authors: int = 6,
                     files_per_author: int = 8, vocab_size: int = 8) -> Corpus:
    """In-memory corpus; identical arguments give byte-identical files."""
    return corpus_from_sources(_build(kind, seed, authors, files_per_author, vocab_size), name=f"{kind}-{seed}")


def write_synthetic_corpus(out_dir: str | Path, kind: str = "class_signal", seed: int = 0, authors: int = 6,
                           files_per_author: int = 8, vocab_size: int = 8) -> Path:
    """Write the files plus ``manifest.tsv`` under ``out_dir``; return the manifest path."""
    out = Path(out_dir)
    rows = _build(kind, seed, authors, files_per_author, vocab_size)
    for _, _, _, path, data in rows:
        target = out / path
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(data)
    manifest = out / "manifest.tsv"
    manifest.write_text("".join(f"{a}\t{p}\t{r}\t{path}\n" for a, p, r, path, _ in rows), encoding="utf-8")
    return manifest
