"""Plain-text tables in the layout of the grid comparison and paired-test summaries."""

from __future__ import annotations

from typing import Sequence

from .errors import DegenerateSampleError
from .experiment import AccuracyGrid, ComparisonSummary, compare_grids
from .stats import TestResult, descriptive, paired_t_from_summary, paired_t_one_tailed, wilcoxon_signed_rank

SUMMARY_ROWS = (
    ("Mean classification accuracy", "mean"),
    ("Median classification accuracy", "median"),
    ("Minimum classification accuracy", "min"),
    ("Maximum classification accuracy", "max"),
    ("Std. Deviation", "sd"),
)


def pct(value: float | None) -> str:
    return "-" if value is None else f"{value:.1f}%"


def pval(result: TestResult | None) -> str:
    return "degenerate" if result is None else f"{result.p_value:.4f}"


def comparison_table(benchmark_name: str, benchmark: AccuracyGrid,
                     treatments: Sequence[tuple[str, AccuracyGrid]]) -> str:
    summaries = [compare_grids(benchmark, grid) for _, grid in treatments]
    header = [""] + [benchmark_name] + [name for name, _ in treatments]
    lines = ["\t".join(header)]
    bench_stats = descriptive(benchmark.percents())
    for label, attr in SUMMARY_ROWS:
        row = [label, pct(getattr(bench_stats, attr))]
        row += [pct(getattr(s.treatment_stats, attr)) for s in summaries]
        lines.append("\t".join(row))
    for label, attr in (("Worse than", "worse"), ("Better than", "better"), ("Same as", "same")):
        row = [f"{label} {benchmark_name}", ""] + [str(getattr(s, attr)) for s in summaries]
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"


def _safe(test, diffs):
    try:
        return test(diffs)
    except DegenerateSampleError:
        return None


def paired_tests(summary: ComparisonSummary) -> tuple[TestResult | None, TestResult | None]:
    return _safe(paired_t_one_tailed, summary.paired_diffs), _safe(wilcoxon_signed_rank, summary.paired_diffs)


def significance_table(benchmark_name: str, benchmark: AccuracyGrid,
                       treatments: Sequence[tuple[str, AccuracyGrid]]) -> str:
    lines = ["\tMean\tStd. Deviation\tp-value\tWilcoxon p-value"]
    for name, grid in treatments:
        summary = compare_grids(benchmark, grid)
        stats = descriptive(summary.paired_diffs)
        t_res, w_res = paired_tests(summary)
        sd = "-" if stats.sd is None else f"{stats.sd:.2f}"
        lines.append(
            f"{benchmark_name}Accuracy - {name}Accuracy\t{stats.mean:.2f}\t{sd}\t{pval(t_res)}\t{pval(w_res)}"
        )
    lines.append("p-values are one-tailed in the direction of the observed mean difference.")
    return "\n".join(lines) + "\n"


def summary_t_table(rows: Sequence[tuple[str, float, float]], n: int) -> str:
    """t-test p-values straight from (label, mean, sd) summaries."""
    lines = ["\tMean\tStd. Deviation\tp-value"]
    for label, mean, sd in rows:
        res = paired_t_from_summary(mean, sd, n)
        lines.append(f"{label}\t{mean:.2f}\t{sd:.2f}\t{res.p_value:.4f}")
    return "\n".join(lines) + "\n"
