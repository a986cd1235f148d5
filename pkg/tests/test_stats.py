import math
import random

import pytest
from hypothesis import given, strategies as st
from scipy import stats as sps

from scap.errors import DegenerateSampleError, ParameterError
from scap.stats import (
    betainc,
    descriptive,
    normal_cdf,
    paired_t_from_summary,
    paired_t_one_tailed,
    student_t_cdf,
    wilcoxon_signed_rank,
)

from oracles import t_cdf_by_quadrature, wilcoxon_by_enumeration


def test_descriptive_small_example():
    d = descriptive([1, 2, 3])
    assert (d.mean, d.median, d.min, d.max, d.sd, d.count) == (2, 2, 1, 3, 1, 3)
    assert descriptive([1, 2, 3, 4]).median == 2.5
    with pytest.raises(ParameterError):
        descriptive([])


def test_t_cdf_anchors():
    assert student_t_cdf(0, 7) == 0.5
    assert student_t_cdf(1, 1) == pytest.approx(0.75, abs=1e-14)
    for t in (-3.0, -0.4, 2.5, 10.0):
        assert student_t_cdf(t, 1) == pytest.approx(0.5 + math.atan(t) / math.pi, abs=1e-13)
    assert student_t_cdf(float("inf"), 3) == 1.0
    assert student_t_cdf(float("-inf"), 3) == 0.0


@pytest.mark.parametrize("df", [1, 2, 5, 30, 55])
@pytest.mark.parametrize("t", [-5.5, -1.3, -0.01, 0.7, 2.2, 6.0])
def test_t_cdf_matches_quadrature(t, df):
    assert abs(student_t_cdf(t, df) - t_cdf_by_quadrature(t, df)) < 1e-10


@given(st.floats(-50, 50), st.integers(1, 200))
def test_t_cdf_symmetry(t, df):
    assert abs(student_t_cdf(t, df) + student_t_cdf(-t, df) - 1) < 1e-10


@given(st.floats(-20, 20), st.floats(0, 5), st.integers(1, 80))
def test_t_cdf_monotone(t, step, df):
    assert student_t_cdf(t + step, df) >= student_t_cdf(t, df) - 1e-15


def test_t_cdf_rejects_bad_df():
    with pytest.raises(ParameterError):
        student_t_cdf(1.0, 0)


def test_betainc_against_scipy():
    rng = random.Random(1)
    for _ in range(200):
        a, b, x = rng.uniform(0.1, 40), rng.uniform(0.1, 40), rng.random()
        assert betainc(a, b, x) == pytest.approx(sps.beta.cdf(x, a, b), abs=1e-11)


def test_normal_cdf():
    assert normal_cdf(0) == 0.5
    assert normal_cdf(1.959963984540054) == pytest.approx(0.975, abs=1e-12)


def test_paired_t_small_example():
    r = paired_t_one_tailed([1, 2, 3])
    assert r.statistic == pytest.approx(2 * math.sqrt(3))
    assert r.df_or_n == 2 and r.direction == "positive"
    assert r.p_value == pytest.approx(1 - t_cdf_by_quadrature(2 * math.sqrt(3), 2), abs=1e-12)
    assert r.method == "t_paired_one_tailed"


def test_paired_t_follows_observed_sign():
    up = paired_t_one_tailed([1, 2, 3])
    down = paired_t_one_tailed([-1, -2, -3])
    assert up.p_value == pytest.approx(down.p_value)
    assert down.direction == "negative" and down.alternative == "observed"


def test_paired_t_explicit_alternatives():
    greater = paired_t_one_tailed([1, 2, 3], alternative="greater")
    less = paired_t_one_tailed([1, 2, 3], alternative="less")
    assert greater.p_value + less.p_value == pytest.approx(1.0)
    assert greater.p_value < 0.05 < less.p_value
    with pytest.raises(ParameterError):
        paired_t_one_tailed([1, 2, 3], alternative="two-sided")


def test_paired_t_degenerate():
    with pytest.raises(DegenerateSampleError):
        paired_t_one_tailed([2.0, 2.0, 2.0])
    with pytest.raises(DegenerateSampleError):
        paired_t_one_tailed([1.0])
    with pytest.raises(ParameterError):
        paired_t_from_summary(1.0, 0.0, 56)


def test_summary_matches_raw():
    rng = random.Random(4)
    for _ in range(100):
        diffs = [rng.gauss(0.3, 2) for _ in range(rng.randint(2, 60))]
        d = descriptive(diffs)
        a = paired_t_one_tailed(diffs)
        b = paired_t_from_summary(d.mean, d.sd, d.count)
        assert abs(a.p_value - b.p_value) < 1e-10


def test_paired_t_against_scipy():
    rng = random.Random(8)
    for _ in range(50):
        diffs = [rng.gauss(0.5, 3) for _ in range(rng.randint(3, 56))]
        ours = paired_t_one_tailed(diffs, alternative="greater").p_value
        ref = sps.ttest_1samp(diffs, 0.0, alternative="greater").pvalue
        assert ours == pytest.approx(ref, abs=1e-10)


@given(st.lists(st.floats(-100, 100).filter(lambda v: abs(v) > 1e-3), min_size=3, max_size=20),
       st.floats(0.01, 1000))
def test_scaling_invariance(diffs, c):
    if len(set(diffs)) < 2:
        return
    base_t = paired_t_one_tailed(diffs)
    scaled_t = paired_t_one_tailed([c * d for d in diffs])
    assert scaled_t.p_value == pytest.approx(base_t.p_value, rel=1e-7, abs=1e-12)
    assert wilcoxon_signed_rank([c * d for d in diffs]).p_value == wilcoxon_signed_rank(diffs).p_value


def test_wilcoxon_small_example():
    r = wilcoxon_signed_rank([1, 2, 3])
    assert r.statistic == 6 and r.p_value == 0.125
    assert r.method == "wilcoxon_signed_rank" and r.df_or_n == 3


def test_wilcoxon_zeros_and_ties():
    r = wilcoxon_signed_rank([0, 0, 1, -1, 2, 2])
    assert r.df_or_n == 4
    p, w = wilcoxon_by_enumeration([1, -1, 2, 2], "greater")
    assert r.statistic == w and r.p_value == pytest.approx(p)


def test_wilcoxon_matches_enumeration():
    rng = random.Random(12)
    for _ in range(150):
        n = rng.randint(1, 10)
        diffs = [rng.choice([-3, -2, -1, 0, 1, 2, 3, 4]) * rng.choice([1, 1, 0.5]) for _ in range(n)]
        if not any(diffs):
            continue
        for tail in ("greater", "less"):
            p, _ = wilcoxon_by_enumeration(diffs, tail)
            assert wilcoxon_signed_rank(diffs, alternative=tail).p_value == pytest.approx(p, abs=1e-15)


def test_wilcoxon_negation_mirrors():
    diffs = [1.5, -0.5, 2.0, 3.0, -1.0, 4.0]
    a = wilcoxon_signed_rank(diffs, alternative="greater")
    b = wilcoxon_signed_rank([-d for d in diffs], alternative="less")
    assert a.p_value == b.p_value


def test_wilcoxon_normal_approximation_matches_scipy():
    rng = random.Random(3)
    for _ in range(20):
        diffs = [round(rng.gauss(0.4, 2), 1) for _ in range(40)]
        if not any(diffs):
            continue
        ours = wilcoxon_signed_rank(diffs, alternative="greater").p_value
        ref = sps.wilcoxon(diffs, alternative="greater", method="approx", correction=False,
                           zero_method="wilcox").pvalue
        assert ours == pytest.approx(ref, abs=1e-9)


def test_wilcoxon_degenerate():
    with pytest.raises(DegenerateSampleError):
        wilcoxon_signed_rank([0.0, 0.0])
