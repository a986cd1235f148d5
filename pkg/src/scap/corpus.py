"""Manifest-described author corpora with explicit train/test roles.

Manifest format, one entry per line::

    <author_id>\\t<project_id>\\t<train|test>\\t<relative path>

Lines starting with ``#`` and blank lines are ignored.  Paths are resolved
against the manifest's directory (or an explicit base directory).
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, TextIO

from .classifier import join_files
from .errors import CorpusError, ManifestError, ParameterError

ROLES = ("train", "test")


@dataclass
class CorpusEntry:
    author_id: str
    project_id: str
    role: str
    path: str
    base_dir: Path | None = None
    content: bytes | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        for attr in ("author_id", "project_id", "path"):
            if not getattr(self, attr):
                raise CorpusError(f"corpus entry has an empty {attr}")
        if self.role not in ROLES:
            raise CorpusError(f"role must be train or test, got {self.role!r}")

    @property
    def file_path(self) -> Path:
        base = self.base_dir if self.base_dir is not None else Path(".")
        return base / self.path

    @property
    def data(self) -> bytes:
        if self.content is None:
            try:
                self.content = self.file_path.read_bytes()
            except OSError as exc:
                raise CorpusError(f"cannot read {self.file_path}: {exc.strerror or exc}") from exc
        return self.content


@dataclass
class Corpus:
    entries: list[CorpusEntry]
    name: str = "corpus"

    def authors(self) -> list[str]:
        return sorted({e.author_id for e in self.entries})

    def train_entries(self, author_id: str | None = None) -> list[CorpusEntry]:
        return [e for e in self.entries if e.role == "train" and author_id in (None, e.author_id)]

    def test_entries(self, author_id: str | None = None) -> list[CorpusEntry]:
        return [e for e in self.entries if e.role == "test" and author_id in (None, e.author_id)]

    def manifest_text(self) -> str:
        return "".join(f"{e.author_id}\t{e.project_id}\t{e.role}\t{e.path}\n" for e in self.entries)

    def write_manifest(self, fp: TextIO) -> None:
        fp.write(self.manifest_text())


def parse_manifest(text: bytes | str) -> list[tuple[str, str, str, str]]:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ManifestError(f"manifest is not valid UTF-8 ({exc})") from None
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise ManifestError(f"expected 4 tab-separated fields, got {len(parts)}", lineno)
        author, project, role, path = (p.strip() for p in parts)
        if role not in ROLES:
            raise ManifestError(f"role must be 'train' or 'test', got {role!r}", lineno)
        if not author or not project or not path:
            raise ManifestError("empty author, project or path field", lineno)
        rows.append((author, project, role, path))
    return rows


def load_manifest(text: bytes | str, base_dir: str | os.PathLike, name: str = "corpus") -> Corpus:
    """Parse a manifest and check that every listed file exists."""
    base = Path(base_dir)
    entries = [CorpusEntry(a, p, r, path, base) for a, p, r, path in parse_manifest(text)]
    for e in entries:
        if not e.file_path.is_file():
            raise CorpusError(f"missing corpus file {e.file_path}")
    return Corpus(entries, name)


def read_manifest(path: str | os.PathLike) -> Corpus:
    path = Path(path)
    return load_manifest(path.read_bytes(), path.parent, name=path.parent.name or path.stem)


def corpus_from_sources(rows: Iterable[tuple[str, str, str, str, bytes]], name: str = "corpus") -> Corpus:
    """Build an in-memory corpus from (author, project, role, path, content) rows."""
    return Corpus([CorpusEntry(a, p, r, path, None, bytes(data)) for a, p, r, path, data in rows], name)


def validate_corpus(c: Corpus, domain_independent: bool = False) -> list[str]:
    """Return human-readable protocol violations; empty means usable."""
    violations = []
    roles = defaultdict(set)
    projects = defaultdict(lambda: defaultdict(set))
    for e in c.entries:
        roles[e.author_id].add(e.role)
        projects[e.author_id][e.role].add(e.project_id)
    if len(roles) < 2:
        violations.append(f"corpus has {len(roles)} author(s); at least 2 are required")
    for author in sorted(roles):
        for role in ROLES:
            if role not in roles[author]:
                violations.append(f"author {author}: no {role} files")
    seen = {}
    for e in c.entries:
        key = os.path.normpath(e.path)
        if key in seen:
            violations.append(f"duplicate path {e.path} (authors {seen[key]} and {e.author_id})")
        else:
            seen[key] = e.author_id
    if domain_independent:
        for author in sorted(projects):
            shared = projects[author]["train"] & projects[author]["test"]
            for project in sorted(shared):
                violations.append(f"author {author}: project {project} appears in both train and test")
    return violations


def concat_training(c: Corpus, author_id: str) -> bytes:
    files = [e.data for e in c.train_entries(author_id)]
    if not files:
        if author_id not in c.authors():
            raise ParameterError(f"unknown author {author_id!r}")
        raise CorpusError(f"author {author_id!r} has no training files")
    return join_files(files)
