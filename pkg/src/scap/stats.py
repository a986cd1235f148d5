"""Descriptive summaries and paired one-tailed tests over accuracy differences.

Differences are taken as benchmark minus treatment.  Unless an explicit
``alternative`` is given, tests are one-tailed in the direction of the
observed effect: the p-value is the probability, under the null, of a
statistic at least as far from the centre on the side it actually fell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateSampleError, ParameterError

ALTERNATIVES = ("observed", "greater", "less")
EXACT_WILCOXON_MAX_N = 12

_CF_EPS = 1e-16
_CF_TINY = 1e-300
_CF_MAX_ITER = 20000


@dataclass(frozen=True)
class Descriptive:
    mean: float
    median: float
    min: float
    max: float
    sd: float | None
    count: int


@dataclass(frozen=True)
class TestResult:
    statistic: float
    p_value: float
    method: str
    direction: str
    df_or_n: int
    alternative: str = "observed"

    def significant(self, alpha: float = 0.05) -> bool:
        return self.p_value < alpha


def descriptive(values: Sequence[float]) -> Descriptive:
    """Mean, median, extremes and sample (n-1) standard deviation."""
    xs = [float(v) for v in values]
    if not xs:
        raise ParameterError("descriptive() needs at least one value")
    n = len(xs)
    mean = math.fsum(xs) / n
    ordered = sorted(xs)
    mid = n // 2
    median = ordered[mid] if n % 2 else (ordered[mid - 1] + ordered[mid]) / 2
    sd = math.sqrt(math.fsum((x - mean) ** 2 for x in xs) / (n - 1)) if n > 1 else None
    return Descriptive(mean, median, ordered[0], ordered[-1], sd, n)


def _betacf(a: float, b: float, x: float) -> float:
    # modified Lentz evaluation of the incomplete beta continued fraction
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ArithmeticError(f"incomplete beta continued fraction did not converge (a={a}, b={b}, x={x})")


def betainc(a: float, b: float, x: float, y: float | None = None) -> float:
    """Regularized incomplete beta I_x(a, b).

    ``y`` may carry ``1 - x`` computed without cancellation by the caller.
    """
    if a <= 0 or b <= 0:
        raise ParameterError("betainc needs a > 0 and b > 0")
    if y is None:
        y = 1.0 - x
    if x <= 0.0:
        return 0.0
    if y <= 0.0:
        return 1.0
    log_front = (
        a * math.log(x) + b * math.log(y)
        + math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
    )
    front = math.exp(log_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, y) / b


def student_t_cdf(t: float, df: float) -> float:
    """P(T <= t) for Student's t with ``df`` degrees of freedom."""
    if df <= 0:
        raise ParameterError(f"degrees of freedom must be positive, got {df}")
    if t == 0:
        return 0.5
    if math.isinf(t):
        return 1.0 if t > 0 else 0.0
    t2 = t * t
    # two-sided tail P(|T| > |t|) = I_{df/(df+t^2)}(df/2, 1/2)
    tail = betainc(df / 2.0, 0.5, df / (df + t2), t2 / (df + t2))
    return 1.0 - 0.5 * tail if t > 0 else 0.5 * tail


def normal_cdf(z: float) -> float:
    return 0.5 * math.erfc(-z / math.sqrt(2.0))


def _direction(value: float) -> str:
    if value > 0:
        return "positive"
    if value < 0:
        return "negative"
    return "none"


def _check_alternative(alternative: str) -> None:
    if alternative not in ALTERNATIVES:
        raise ParameterError(f"alternative must be one of {ALTERNATIVES}, got {alternative!r}")


def _t_result(mean: float, sd: float, n: int, alternative: str) -> TestResult:
    t = mean / (sd / math.sqrt(n))
    df = n - 1
    if alternative == "observed":
        p = student_t_cdf(-abs(t), df)
    elif alternative == "greater":
        p = student_t_cdf(-t, df)
    else:
        p = student_t_cdf(t, df)
    return TestResult(t, min(1.0, max(0.0, p)), "t_paired_one_tailed", _direction(mean), df, alternative)


def paired_t_one_tailed(diffs: Sequence[float], alternative: str = "observed") -> TestResult:
    """One-tailed paired t-test on ``diffs``; ``greater`` means mean(diffs) > 0."""
    _check_alternative(alternative)
    if len(diffs) < 2:
        raise DegenerateSampleError("paired t-test needs at least 2 differences")
    summary = descriptive(diffs)
    if not summary.sd:
        raise DegenerateSampleError("paired t-test undefined: all differences are equal")
    return _t_result(summary.mean, summary.sd, summary.count, alternative)


def paired_t_from_summary(mean: float, sd: float, n: int, alternative: str = "observed") -> TestResult:
    """Same test as :func:`paired_t_one_tailed`, from a (mean, sd, n) summary."""
    _check_alternative(alternative)
    if not sd > 0:
        raise ParameterError(f"standard deviation must be positive, got {sd}")
    if n < 2:
        raise ParameterError(f"sample size must be at least 2, got {n}")
    return _t_result(float(mean), float(sd), int(n), alternative)


def midranks(values: Sequence[float]) -> list[float]:
    """1-based ranks, tied values sharing the average of their positions."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j + 2) / 2.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def signed_rank_distribution(doubled_ranks: Sequence[int]) -> dict[int, int]:
    """Number of sign assignments giving each value of 2*W+."""
    dist = {0: 1}
    for r in doubled_ranks:
        nxt = dict(dist)
        for s, cnt in dist.items():
            nxt[s + r] = nxt.get(s + r, 0) + cnt
        dist = nxt
    return dist


def wilcoxon_signed_rank(diffs: Sequence[float], alternative: str = "observed") -> TestResult:
    """Wilcoxon signed-rank test; zeros dropped, midranks for ties.

    Exact for up to 12 non-zero differences, normal approximation with
    tie-corrected variance beyond that.
    """
    _check_alternative(alternative)
    nonzero = [float(d) for d in diffs if d != 0]
    if not nonzero:
        raise DegenerateSampleError("Wilcoxon test undefined: all differences are zero")
    n = len(nonzero)
    ranks = midranks([abs(d) for d in nonzero])
    w_plus = math.fsum(r for r, d in zip(ranks, nonzero) if d > 0)
    centre = n * (n + 1) / 4.0
    if alternative == "observed":
        tail = "greater" if w_plus >= centre else "less"
    else:
        tail = alternative
    if n <= EXACT_WILCOXON_MAX_N:
        doubled = [int(round(2 * r)) for r in ranks]
        dist = signed_rank_distribution(doubled)
        observed = int(round(2 * w_plus))
        if tail == "greater":
            hits = sum(c for s, c in dist.items() if s >= observed)
        else:
            hits = sum(c for s, c in dist.items() if s <= observed)
        p = hits / 2 ** n
    else:
        tie_sizes = {}
        for r in ranks:
            tie_sizes[r] = tie_sizes.get(r, 0) + 1
        var = n * (n + 1) * (2 * n + 1) / 24.0 - sum(t ** 3 - t for t in tie_sizes.values()) / 48.0
        z = (w_plus - centre) / math.sqrt(var)
        p = 1.0 - normal_cdf(z) if tail == "greater" else normal_cdf(z)
    return TestResult(w_plus, min(1.0, max(0.0, p)), "wilcoxon_signed_rank",
                      _direction(w_plus - centre), n, alternative)
