"""
peerswarm

Two-sample Kolmogorov-Smirnov test with asymptotic p-values

The statistic is ``D = sup_x |F_a(x) - F_b(x)|`` over the empirical
distribution functions of both samples, evaluated at every observed value.
The p-value is the survival function of the limiting Kolmogorov
distribution,

    Q(lambda) = 2 * sum_{j >= 1} (-1)^(j - 1) * exp(-2 j^2 lambda^2),

at ``lambda = D * sqrt(n_a * n_b / (n_a + n_b))``, as provided by
``scipy.stats.kstwobign``.
"""
import math
from typing import Sequence

import numpy as np
from scipy.stats import kstwobign

from peerswarm.errors import EmptySampleError
from peerswarm.schema import KSResult


class KolmogorovSmirnov:
    @staticmethod
    def statistic(a: Sequence[float], b: Sequence[float]) -> float:
        a_sorted: np.ndarray = np.sort(np.asarray(a, dtype=np.float64))
        b_sorted: np.ndarray = np.sort(np.asarray(b, dtype=np.float64))
        if not a_sorted.size or not b_sorted.size:
            raise EmptySampleError("Kolmogorov-Smirnov test requires two "
                                   "non-empty samples")
        points: np.ndarray = np.concatenate((a_sorted, b_sorted))
        cdf_a: np.ndarray = np.searchsorted(a_sorted, points,
                                            side="right") / a_sorted.size
        cdf_b: np.ndarray = np.searchsorted(b_sorted, points,
                                            side="right") / b_sorted.size
        return float(np.max(np.abs(cdf_a - cdf_b)))

    @staticmethod
    def ks_two_sample(a: Sequence[float], b: Sequence[float]) -> KSResult:
        d: float = KolmogorovSmirnov.statistic(a, b)
        n_a: int = len(a)
        n_b: int = len(b)
        effective_size: float = n_a * n_b / (n_a + n_b)
        p_value: float = float(kstwobign.sf(d * math.sqrt(effective_size)))
        return KSResult(d, min(max(p_value, 0.0), 1.0))
