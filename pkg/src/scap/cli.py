"""Command-line interface.

Exit codes: 0 success, 1 domain failure (validation, lexing, mismatched
grids), 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .corpus import read_manifest, validate_corpus
from .errors import CorpusError, ParameterError, ScapError
from .experiment import DEFAULT_L_VALUES, DEFAULT_N_VALUES, AccuracyGrid, run_grid
from .java import Category, parse_categories
from .pipeline import prepare_corpus
from .report import comparison_table, significance_table, summary_t_table
from .synth import write_synthetic_corpus

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    manifest: Path
    out: Path
    n_values: tuple[int, ...] = DEFAULT_N_VALUES
    L_values: tuple[int, ...] = DEFAULT_L_VALUES
    categories: frozenset[Category] = frozenset()


_RANGE_ITEM = re.compile(r"(\d+)(?:-(\d+)(?::(\d+))?)?")


def parse_range(text: str) -> tuple[int, ...]:
    """``"3"``, ``"3-10"``, ``"2000-8000:1000"`` or comma-separated mixtures."""
    values: list[int] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        m = _RANGE_ITEM.fullmatch(item)
        if not m:
            raise argparse.ArgumentTypeError(f"bad range item {item!r}")
        lo, hi, step = m.group(1), m.group(2), m.group(3)
        if hi is None:
            values.append(int(lo))
            continue
        lo, hi, step = int(lo), int(hi), int(step or 1)
        if step < 1 or hi < lo:
            raise argparse.ArgumentTypeError(f"bad range item {item!r}")
        values.extend(range(lo, hi + 1, step))
    if not values:
        raise argparse.ArgumentTypeError("empty range")
    if len(set(values)) != len(values):
        raise argparse.ArgumentTypeError(f"range {text!r} repeats values")
    return tuple(values)


def _categories(text: str) -> frozenset[Category]:
    try:
        return parse_categories(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _summary_pair(text: str) -> tuple[float, float]:
    try:
        mean, sd = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected MEAN,SD, got {text!r}") from None
    return mean, sd


def _load(manifest: Path):
    try:
        return read_manifest(manifest)
    except OSError as exc:
        raise UsageError(f"cannot read manifest {manifest}: {exc.strerror or exc}") from None


def cmd_corpus_validate(args) -> int:
    corpus = _load(args.manifest)
    violations = validate_corpus(corpus, domain_independent=args.domain_independent)
    for v in violations:
        print(v)
    if violations:
        return EXIT_FAIL
    authors = corpus.authors()
    print(f"ok: {len(authors)} authors, {len(corpus.train_entries())} train, {len(corpus.test_entries())} test")
    return EXIT_OK


def _ensure_out_dir(out: Path, source_dir: Path) -> None:
    if out.resolve() == source_dir.resolve():
        raise UsageError("output directory must differ from the corpus directory (no in-place transforms)")
    out.mkdir(parents=True, exist_ok=True)


def cmd_prepare(args) -> int:
    corpus = _load(args.manifest)
    violations = validate_corpus(corpus)
    if violations:
        for v in violations:
            print(v, file=sys.stderr)
        return EXIT_FAIL
    prepared = prepare_corpus(corpus, strip=args.strip_comments, target=args.neutralize)
    if not prepared.ok:
        for path, msg in sorted(prepared.failures.items()):
            print(f"{path}: {msg}", file=sys.stderr)
        return EXIT_FAIL
    _ensure_out_dir(args.out, args.manifest.parent)
    for e in prepared.corpus.entries:
        target = args.out / e.path
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(e.data)
    (args.out / "manifest.tsv").write_text(prepared.corpus.manifest_text(), encoding="utf-8")
    if prepared.plan is not None:
        with open(args.out / "plan.tsv", "w", encoding="utf-8", errors="surrogateescape", newline="\n") as fp:
            prepared.plan.write(fp)
        with open(args.out / "identifiers.tsv", "w", encoding="utf-8", errors="surrogateescape", newline="\n") as fp:
            for path in sorted(prepared.tables):
                for line in prepared.tables[path].export_lines(path):
                    fp.write(line + "\n")
        print(f"renamed {len(prepared.plan)} identifiers in {len(prepared.plan.per_file)} files")
    print(f"wrote {len(prepared.corpus.entries)} files to {args.out}")
    return EXIT_OK


def cmd_experiment(args) -> int:
    config = RunConfig(args.manifest, args.out, args.n, args.L)
    corpus = _load(config.manifest)
    try:
        grid = run_grid(corpus, config.n_values, config.L_values, workers=args.workers)
    except CorpusError as exc:
        print(exc, file=sys.stderr)
        for v in exc.violations:
            print(v, file=sys.stderr)
        return EXIT_FAIL
    config.out.mkdir(parents=True, exist_ok=True)
    with open(config.out / "grid.csv", "w", encoding="utf-8", newline="\n") as fp:
        grid.write_csv(fp)
    att_dir = config.out / "attributions"
    att_dir.mkdir(exist_ok=True)
    for cell in grid.ordered():
        with open(att_dir / f"n{cell.n}_L{cell.L}.tsv", "w", encoding="utf-8", newline="\n") as fp:
            for att in cell.attributions:
                fp.write(att.to_record() + "\n")
    best = grid.best()
    where = ", ".join(f"n={c.n} L={c.L}" for c in best)
    print(f"{len(grid)} cells; mean accuracy {grid.mean_accuracy() * 100:.1f}%")
    print(f"best accuracy {best[0].percent:.1f}% ({best[0].correct}/{best[0].total}) at {where}")
    return EXIT_OK


def _grid_name(path: Path) -> str:
    return path.parent.name if path.stem == "grid" and path.parent.name else path.stem


def _read_grid(path: Path) -> AccuracyGrid:
    try:
        with open(path, encoding="utf-8") as fp:
            return AccuracyGrid.read_csv(fp)
    except OSError as exc:
        raise UsageError(f"cannot read grid {path}: {exc.strerror or exc}") from None


def cmd_report(args) -> int:
    if args.summary_t:
        rows = [(f"row{i + 1}", m, s) for i, (m, s) in enumerate(args.summary_t)]
        sys.stdout.write(summary_t_table(rows, args.cells))
        return EXIT_OK
    if args.benchmark is None or not args.treatments:
        raise UsageError("report needs a benchmark grid and at least one treatment grid")
    names = args.names or []
    paths = [args.benchmark] + list(args.treatments)
    if names and len(names) != len(paths):
        raise UsageError(f"--names needs {len(paths)} names (benchmark first)")
    names = names or [_grid_name(p) for p in paths]
    grids = [_read_grid(p) for p in paths]
    bench = grids[0]
    for name, grid in zip(names[1:], grids[1:]):
        if grid.n_values != bench.n_values or grid.L_values != bench.L_values:
            print(f"grid {name} covers different (n, L) ranges than {names[0]}", file=sys.stderr)
            return EXIT_FAIL
    treatments = list(zip(names[1:], grids[1:]))
    sys.stdout.write(comparison_table(names[0], bench, treatments))
    sys.stdout.write("\n")
    sys.stdout.write(significance_table(names[0], bench, treatments))
    return EXIT_OK


def cmd_stats_summary_t(args) -> int:
    labels = args.label or []
    if labels and len(labels) != len(args.pairs):
        raise UsageError("--label must be given once per MEAN,SD pair")
    rows = [(labels[i] if labels else f"row{i + 1}", m, s) for i, (m, s) in enumerate(args.pairs)]
    sys.stdout.write(summary_t_table(rows, args.n))
    return EXIT_OK


def cmd_synth(args) -> int:
    manifest = write_synthetic_corpus(args.out, kind=args.kind, seed=args.seed, authors=args.authors,
                                      files_per_author=args.files)
    print(manifest)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    """Lets values such as ``-1.06,6.06`` through as arguments rather than options."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\.?\d")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scap", description="Byte-level n-gram authorship attribution for Java corpora.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log warnings from lexing and renaming")
    sub = parser.add_subparsers(dest="command", required=True)

    corpus = sub.add_parser("corpus", help="corpus utilities")
    corpus_sub = corpus.add_subparsers(dest="corpus_command", required=True)
    validate = corpus_sub.add_parser("validate", help="check a manifest against the train/test protocol")
    validate.add_argument("manifest", type=Path)
    validate.add_argument("--domain-independent", action="store_true",
                          help="also require different projects for each author's train and test files")
    validate.set_defaults(func=cmd_corpus_validate)

    prepare = sub.add_parser("prepare", help="write a transformed copy of a corpus")
    prepare.add_argument("manifest", type=Path)
    prepare.add_argument("--out", type=Path, required=True)
    prepare.add_argument("--strip-comments", action="store_true")
    prepare.add_argument("--neutralize", type=_categories, metavar="CATEGORY",
                         help="simple, class, method or all (comma-separated mixes allowed)")
    prepare.set_defaults(func=cmd_prepare)

    experiment = sub.add_parser("experiment", help="run the (n, L) accuracy grid")
    experiment.add_argument("manifest", type=Path)
    experiment.add_argument("--out", type=Path, required=True)
    experiment.add_argument("--n", type=parse_range, default=DEFAULT_N_VALUES, help="e.g. 3-10 (default)")
    experiment.add_argument("--L", type=parse_range, default=DEFAULT_L_VALUES,
                            help="e.g. 2000-8000:1000 (default)")
    experiment.add_argument("--workers", type=int, default=1)
    experiment.set_defaults(func=cmd_experiment)

    report = sub.add_parser("report", help="compare treatment grids against a benchmark grid")
    report.add_argument("benchmark", type=Path, nargs="?")
    report.add_argument("treatments", type=Path, nargs="*")
    report.add_argument("--names", nargs="+", help="display names, benchmark first")
    report.add_argument("--summary-t", type=_summary_pair, nargs="+", metavar="MEAN,SD",
                        help="skip grids; compute t-test p-values from summaries")
    report.add_argument("--cells", type=int, default=len(DEFAULT_N_VALUES) * len(DEFAULT_L_VALUES),
                        help="sample size for --summary-t (default 56)")
    report.set_defaults(func=cmd_report)

    stats = sub.add_parser("stats", help="statistics helpers")
    stats_sub = stats.add_subparsers(dest="stats_command", required=True)
    summary = stats_sub.add_parser("summary-t", help="one-tailed paired t-test from MEAN,SD summaries")
    summary.add_argument("pairs", type=_summary_pair, nargs="+", metavar="MEAN,SD")
    summary.add_argument("--n", type=int, default=56)
    summary.add_argument("--label", action="append")
    summary.set_defaults(func=cmd_stats_summary_t)

    synth = sub.add_parser("synth", help="write a seeded synthetic Java corpus")
    synth.add_argument("out", type=Path)
    synth.add_argument("--kind", choices=("class_signal", "structural_style"), default="class_signal")
    synth.add_argument("--seed", type=int, default=0)
    synth.add_argument("--authors", type=int, default=6)
    synth.add_argument("--files", type=int, default=8)
    synth.set_defaults(func=cmd_synth)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, ParameterError) as exc:
        print(f"scap: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScapError as exc:
        print(f"scap: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
