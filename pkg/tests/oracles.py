"""Independent reference computations used only by the tests."""

import itertools
import math
from functools import cmp_to_key

from scipy import integrate


def t_density(x, df):
    log_c = math.lgamma((df + 1) / 2) - math.lgamma(df / 2) - 0.5 * math.log(df * math.pi)
    return math.exp(log_c - (df + 1) / 2 * math.log1p(x * x / df))


def t_cdf_by_quadrature(t, df):
    """CDF as 1/2 plus the integral of the density from 0 to t."""
    if t == 0:
        return 0.5
    area, _ = integrate.quad(t_density, 0.0, abs(t), args=(df,), epsabs=1e-14, epsrel=1e-13, limit=200)
    return 0.5 + area if t > 0 else 0.5 - area


def _ranks(abs_values):
    out = []
    for v in abs_values:
        below = sum(1 for w in abs_values if w < v)
        equal = sum(1 for w in abs_values if w == v)
        out.append(below + (equal + 1) / 2)
    return out


def wilcoxon_by_enumeration(diffs, tail):
    """Exact one-tailed p by listing all 2^n sign vectors of the non-zero diffs."""
    nz = [d for d in diffs if d != 0]
    ranks = _ranks([abs(d) for d in nz])
    observed = sum(r for r, d in zip(ranks, nz) if d > 0)
    hits = 0
    for signs in itertools.product((0, 1), repeat=len(nz)):
        w = sum(r for r, s in zip(ranks, signs) if s)
        if tail == "greater" and w >= observed - 1e-9:
            hits += 1
        elif tail == "less" and w <= observed + 1e-9:
            hits += 1
    return hits / 2 ** len(nz), observed


def attribution_oracle(test_bytes, author_files, n, L):
    """Independent route: hand-rolled counting, comparator sort, nested-loop overlap."""
    def profile(data):
        counts = {}
        i = 0
        while i + n <= len(data):
            g = data[i:i + n]
            counts[g] = counts.get(g, 0) + 1
            i += 1

        def cmp(x, y):
            if x[1] != y[1]:
                return y[1] - x[1]
            return -1 if x[0] < y[0] else (1 if x[0] > y[0] else 0)

        return [g for g, _ in sorted(counts.items(), key=cmp_to_key(cmp))[:L]]

    tp = profile(test_bytes)
    scores = {}
    for author, files in author_files.items():
        joined = b""
        for k, f in enumerate(files):
            joined += (b"\n" if k else b"") + f
        ap = profile(joined)
        scores[author] = sum(1 for g in tp if any(g == h for h in ap))
    best = max(scores.values())
    chosen = min(a for a in scores if scores[a] == best)
    return chosen, scores
