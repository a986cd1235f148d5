"""Identifier neutralization with corpus-unique ``a{k}b{k}`` names.

Every targeted name gets its own replacement in every file it is declared
in, so the same original name in two files ends up with two unrelated
replacements.  Within one file all identifier tokens spelled like a
planned name are rewritten, declarations and uses alike.  String and char
literals, comments and keywords are never touched.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, TextIO

from .errors import ParameterError
from .java import Category, IdentifierTable, TokenKind, decode_name, encode_name, lex

log = logging.getLogger(__name__)

REPLACEMENT_RE = re.compile(r"a(\d+)b(\d+)")


def is_replacement(text: str) -> bool:
    m = REPLACEMENT_RE.fullmatch(text)
    return bool(m) and m.group(1) == m.group(2)


@dataclass(frozen=True, order=True)
class ReplacementName:
    k: int

    @property
    def text(self) -> str:
        return f"a{self.k}b{self.k}"

    def __str__(self) -> str:
        return self.text


def next_replacement(counter: int, forbidden: Iterable[str] = frozenset()) -> tuple[ReplacementName, int]:
    """Smallest ``a{k}b{k}`` with ``k >= counter`` not in ``forbidden``, plus the next counter."""
    if counter < 1:
        raise ParameterError(f"replacement counter must be >= 1, got {counter}")
    forbidden = forbidden if isinstance(forbidden, (set, frozenset)) else set(forbidden)
    k = counter
    while f"a{k}b{k}" in forbidden:
        k += 1
    return ReplacementName(k), k + 1


@dataclass
class NeutralizationPlan:
    target: frozenset[Category]
    per_file: dict[str, dict[str, ReplacementName]] = field(default_factory=dict)
    counter_start: int = 1

    def file_plan(self, file_id: str) -> dict[str, ReplacementName]:
        return self.per_file.get(file_id, {})

    def replacements(self) -> list[str]:
        return [r.text for fp in self.per_file.values() for r in fp.values()]

    def __len__(self) -> int:
        return sum(len(fp) for fp in self.per_file.values())

    def rows(self) -> list[tuple[str, str, str]]:
        return sorted(
            (file_id, name, repl.text)
            for file_id, fp in self.per_file.items()
            for name, repl in fp.items()
        )

    def write(self, fp: TextIO) -> None:
        """``<file>\\t<original>\\t<replacement>`` lines, sorted."""
        for row in self.rows():
            fp.write("\t".join(row) + "\n")

    @classmethod
    def read(cls, lines: Iterable[str], target: Iterable[Category] = ()) -> NeutralizationPlan:
        plan = cls(frozenset(target))
        for lineno, line in enumerate(lines, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ParameterError(f"plan line {lineno}: expected 3 tab-separated fields")
            file_id, name, repl = parts
            m = REPLACEMENT_RE.fullmatch(repl)
            if not m or m.group(1) != m.group(2):
                raise ParameterError(f"plan line {lineno}: {repl!r} is not an a<k>b<k> name")
            plan.per_file.setdefault(file_id, {})[name] = ReplacementName(int(m.group(1)))
        return plan


def plan_neutralization(
    tables: Mapping[str, IdentifierTable],
    target: Iterable[Category],
    counter_start: int = 1,
) -> NeutralizationPlan:
    """Assign a fresh replacement to every (file, name) whose categories meet ``target``.

    Files are visited in ascending id order and names in ascending order, so
    the numbering is reproducible.  Replacements never coincide with an
    identifier that already occurs anywhere in the corpus.
    """
    target = frozenset(target)
    if not target:
        raise ParameterError("neutralization target must name at least one category")
    forbidden: set[str] = set()
    for table in tables.values():
        forbidden |= table.identifiers
        forbidden |= table.categories.keys()
    plan = NeutralizationPlan(target, counter_start=counter_start)
    counter = counter_start
    for file_id in sorted(tables):
        file_plan = {}
        for name in tables[file_id].targeted(target):
            repl, counter = next_replacement(counter, forbidden)
            forbidden.add(repl.text)
            file_plan[name] = repl
        if file_plan:
            plan.per_file[file_id] = file_plan
    return plan


def apply_neutralization(source: bytes, file_plan: Mapping[str, ReplacementName | str], file_id: str = "") -> bytes:
    """Rewrite every identifier token named in ``file_plan``."""
    if not file_plan:
        lex(source)  # still reject sources that do not lex
        return bytes(source)
    mapping = {encode_name(k): encode_name(str(v)) for k, v in file_plan.items()}
    seen = set()
    out = []
    for tok in lex(source):
        if tok.kind is TokenKind.IDENTIFIER and tok.text in mapping:
            seen.add(tok.text)
            out.append(mapping[tok.text])
        else:
            out.append(tok.text)
    for missing in sorted(set(mapping) - seen):
        log.warning("%splanned name %r does not occur in the file", f"{file_id}: " if file_id else "",
                    decode_name(missing))
    return b"".join(out)
