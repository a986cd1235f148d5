"""The (n, L) accuracy grid and benchmark-versus-treatment comparison."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, TextIO

from .classifier import Attribution, AuthorProfile, attribute, join_files
from .corpus import Corpus, validate_corpus
from .errors import CorpusError, ParameterError
from .ngram import check_L, check_n, extract_ngrams, rank
from .stats import Descriptive, descriptive

DEFAULT_N_VALUES = tuple(range(3, 11))
DEFAULT_L_VALUES = tuple(range(2000, 8001, 1000))

GRID_HEADER = ("n", "L", "correct", "total", "accuracy")


@dataclass(frozen=True)
class GridCell:
    n: int
    L: int
    correct: int
    total: int
    attributions: tuple[Attribution, ...] = field(default=(), compare=False, repr=False)

    @property
    def accuracy(self) -> Fraction:
        return Fraction(self.correct, self.total) if self.total else Fraction(0)

    @property
    def percent(self) -> float:
        return float(self.accuracy * 100)


@dataclass(frozen=True)
class AccuracyGrid:
    n_values: tuple[int, ...]
    L_values: tuple[int, ...]
    cells: dict[tuple[int, int], GridCell]

    def __post_init__(self):
        expected = {(n, L) for n in self.n_values for L in self.L_values}
        if set(self.cells) != expected:
            raise ParameterError("grid cells do not match its n and L ranges")

    def __len__(self) -> int:
        return len(self.cells)

    def ordered(self) -> list[GridCell]:
        """Cells in n-major, L-minor order."""
        return [self.cells[n, L] for n in self.n_values for L in self.L_values]

    def percents(self) -> list[float]:
        return [c.percent for c in self.ordered()]

    def mean_accuracy(self) -> float:
        return float(sum((c.accuracy for c in self.ordered()), Fraction(0)) / len(self.cells))

    def best(self) -> list[GridCell]:
        top = max(c.accuracy for c in self.cells.values())
        return [c for c in self.ordered() if c.accuracy == top]

    def write_csv(self, fp: TextIO) -> None:
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(GRID_HEADER)
        for c in self.ordered():
            writer.writerow((c.n, c.L, c.correct, c.total, f"{float(c.accuracy):.6f}"))

    def to_csv(self) -> str:
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()

    @classmethod
    def read_csv(cls, fp: Iterable[str]) -> AccuracyGrid:
        reader = csv.reader(fp)
        header = next(reader, None)
        if header is None or tuple(h.strip() for h in header) != GRID_HEADER:
            raise ParameterError(f"grid file must start with header {','.join(GRID_HEADER)}")
        cells = {}
        n_values: list[int] = []
        L_values: list[int] = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                n, L, correct, total = (int(v) for v in row[:4])
            except ValueError:
                raise ParameterError(f"grid line {lineno}: malformed row {row!r}") from None
            if (n, L) in cells:
                raise ParameterError(f"grid line {lineno}: duplicate cell n={n} L={L}")
            if not 0 <= correct <= total:
                raise ParameterError(f"grid line {lineno}: correct must lie in [0, total]")
            cells[n, L] = GridCell(n, L, correct, total)
            if n not in n_values:
                n_values.append(n)
            if L not in L_values:
                L_values.append(L)
        if not cells:
            raise ParameterError("grid file has no cells")
        return cls(tuple(n_values), tuple(L_values), cells)


def _require_valid(c: Corpus) -> None:
    violations = validate_corpus(c)
    if violations:
        raise CorpusError(f"corpus {c.name!r} failed validation", violations)


def _corpus_payload(c: Corpus):
    authors = {a: join_files([e.data for e in c.train_entries(a)]) for a in c.authors()}
    tests = [(e.path, e.author_id, e.data) for e in c.test_entries()]
    return authors, tests


def _cells_for_n(authors: dict[str, bytes], tests, n: int, L_values: Sequence[int]) -> list[GridCell]:
    # rank once per n; a profile cut at L is a prefix of the full ranking
    author_full = {a: rank(extract_ngrams(data, n)) for a, data in authors.items()}
    test_full = [(tid, true, rank(extract_ngrams(data, n))) for tid, true, data in tests]
    cells = []
    for L in L_values:
        candidates = {
            a: AuthorProfile(a, prof.prefix(L), len(authors[a])) for a, prof in author_full.items()
        }
        results = []
        correct = 0
        for tid, true, prof in test_full:
            att = attribute(prof.prefix(L), candidates, test_id=tid)
            results.append(att)
            # ties never count as correct, even when the true author is among them
            if att.chosen_author == true and not att.tie:
                correct += 1
        cells.append(GridCell(n, L, correct, len(test_full), tuple(results)))
    return cells


def run_cell(c: Corpus, n: int, L: int) -> GridCell:
    """Attribute every test file of ``c`` at one (n, L) setting."""
    check_n(n)
    check_L(L)
    _require_valid(c)
    authors, tests = _corpus_payload(c)
    return _cells_for_n(authors, tests, n, [L])[0]


def run_grid(
    c: Corpus,
    n_values: Sequence[int] = DEFAULT_N_VALUES,
    L_values: Sequence[int] = DEFAULT_L_VALUES,
    workers: int = 1,
) -> AccuracyGrid:
    """One cell per (n, L); ``workers > 1`` spreads the n values over processes."""
    n_values = tuple(n_values)
    L_values = tuple(L_values)
    if not n_values or not L_values:
        raise ParameterError("n and L ranges must be non-empty")
    if len(set(n_values)) != len(n_values) or len(set(L_values)) != len(L_values):
        raise ParameterError("n and L ranges must not repeat values")
    for n in n_values:
        check_n(n)
    for L in L_values:
        check_L(L)
    _require_valid(c)
    authors, tests = _corpus_payload(c)
    cells: dict[tuple[int, int], GridCell] = {}
    if workers > 1 and len(n_values) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_cells_for_n, authors, tests, n, L_values) for n in n_values]
            batches = [f.result() for f in futures]
    else:
        batches = [_cells_for_n(authors, tests, n, L_values) for n in n_values]
    for batch in batches:
        for cell in batch:
            cells[cell.n, cell.L] = cell
    return AccuracyGrid(n_values, L_values, cells)


@dataclass(frozen=True)
class ComparisonSummary:
    worse: int
    better: int
    same: int
    benchmark_stats: Descriptive
    treatment_stats: Descriptive
    paired_diffs: tuple[float, ...]


def compare_grids(benchmark: AccuracyGrid, treatment: AccuracyGrid) -> ComparisonSummary:
    """Cell-by-cell comparison; differences are benchmark minus treatment in percentage points."""
    if benchmark.n_values != treatment.n_values or benchmark.L_values != treatment.L_values:
        raise ParameterError("grids cover different (n, L) ranges")
    worse = better = same = 0
    diffs = []
    for b, t in zip(benchmark.ordered(), treatment.ordered()):
        if t.accuracy < b.accuracy:
            worse += 1
        elif t.accuracy > b.accuracy:
            better += 1
        else:
            same += 1
        diffs.append(float((b.accuracy - t.accuracy) * 100))
    return ComparisonSummary(
        worse,
        better,
        same,
        descriptive(benchmark.percents()),
        descriptive(treatment.percents()),
        tuple(diffs),
    )
