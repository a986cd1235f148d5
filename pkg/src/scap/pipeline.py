"""Corpus-level transforms: comment removal followed by neutralization."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .corpus import Corpus, CorpusEntry
from .errors import LexError
from .java import Category, IdentifierTable, classify_identifiers, strip_comments
from .neutralize import NeutralizationPlan, apply_neutralization, plan_neutralization


@dataclass
class PreparedCorpus:
    corpus: Corpus
    plan: NeutralizationPlan | None = None
    tables: dict[str, IdentifierTable] = field(default_factory=dict)
    failures: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def prepare_corpus(c: Corpus, strip: bool = False, target: Iterable[Category] | None = None,
                   counter_start: int = 1) -> PreparedCorpus:
    """Apply the requested transforms to every file; never mutates ``c``.

    Lex failures are collected per file path instead of raised; when any
    occur the returned corpus is ``c`` unchanged and ``failures`` is filled.
    """
    target = frozenset(target) if target else None
    stage: dict[str, bytes] = {}
    failures: dict[str, str] = {}
    for e in c.entries:
        try:
            stage[e.path] = strip_comments(e.data) if strip else e.data
        except LexError as exc:
            failures[e.path] = str(exc)
    tables: dict[str, IdentifierTable] = {}
    if target and not failures:
        for path, data in stage.items():
            try:
                tables[path] = classify_identifiers(data)
            except LexError as exc:
                failures[path] = str(exc)
    if failures:
        return PreparedCorpus(c, None, {}, failures)
    plan = None
    if target:
        plan = plan_neutralization(tables, target, counter_start=counter_start)
        stage = {path: apply_neutralization(data, plan.file_plan(path), path) for path, data in stage.items()}
    entries = [
        CorpusEntry(e.author_id, e.project_id, e.role, e.path, None, stage[e.path]) for e in c.entries
    ]
    return PreparedCorpus(Corpus(entries, c.name), plan, tables, {})
