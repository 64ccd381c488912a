import math

import numpy as np
import pytest

from peerswarm.errors import EmptySampleError
from peerswarm.evaluator import KolmogorovSmirnov


def kolmogorov_survival(x: float, terms: int = 100) -> float:
    return 2.0 * math.fsum((-1) ** (j - 1) * math.exp(-2.0 * j * j * x * x)
                           for j in range(1, terms + 1))


def test_identical_samples():
    sample = [0.0, 0.25, 0.25, 1.0, 0.5]
    result = KolmogorovSmirnov.ks_two_sample(sample, list(reversed(sample)))
    assert result.statistic == 0.0
    assert result.p_value == 1.0


def test_disjoint_samples():
    result = KolmogorovSmirnov.ks_two_sample([0.0] * 100, [1.0] * 100)
    assert result.statistic == 1.0
    assert result.p_value < 1e-40

    result = KolmogorovSmirnov.ks_two_sample(np.arange(20.0),
                                             np.arange(20.0) + 100.0)
    assert result.statistic == 1.0
    assert result.p_value == pytest.approx(2.0 * math.exp(-20.0), rel=1e-6)


def test_overlapping_samples():
    a = np.arange(20.0)
    b = np.arange(10.0, 30.0)
    result = KolmogorovSmirnov.ks_two_sample(a, b)
    assert result.statistic == 0.5
    assert result.p_value == pytest.approx(
        kolmogorov_survival(0.5 * math.sqrt(10.0)), rel=1e-9)


def test_unequal_sizes():
    # F_a jumps to 1 at 0, F_b reaches 1/3 at 0
    result = KolmogorovSmirnov.ks_two_sample([0.0, 0.0], [0.0, 1.0, 2.0])
    assert result.statistic == pytest.approx(2.0 / 3.0)
    assert result.p_value == pytest.approx(
        kolmogorov_survival(2.0 / 3.0 * math.sqrt(6.0 / 5.0)), rel=1e-9)


def test_symmetry():
    rng = np.random.default_rng(5)
    a = rng.exponential(size=37)
    b = rng.exponential(scale=2.0, size=53)
    assert KolmogorovSmirnov.ks_two_sample(a, b) == \
        KolmogorovSmirnov.ks_two_sample(b, a)


def test_invariant_under_monotone_transform():
    rng = np.random.default_rng(11)
    a = rng.uniform(size=40)
    b = rng.uniform(0.2, 1.2, size=30)
    plain = KolmogorovSmirnov.ks_two_sample(a, b)
    transformed = KolmogorovSmirnov.ks_two_sample(np.exp(3.0 * a) + 1.0,
                                                  np.exp(3.0 * b) + 1.0)
    assert transformed.statistic == pytest.approx(plain.statistic)
    assert transformed.p_value == pytest.approx(plain.p_value)


@pytest.mark.parametrize("a, b", [([], [1.0]), ([1.0], []), ([], [])])
def test_empty_sample(a, b):
    with pytest.raises(EmptySampleError):
        KolmogorovSmirnov.ks_two_sample(a, b)
