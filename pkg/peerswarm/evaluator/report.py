"""
peerswarm

Evaluation report: per bid category totals, means, recall, top memberships,
Kolmogorov-Smirnov matrices and the ordering verdict
"""
from __future__ import annotations

from dataclasses import dataclass, field
import json
import math
import os
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

import peerswarm.constants as c
from peerswarm.schema import AuthorKey, OrderingVerdict


def _finite_or_none(value: Optional[float]) -> Optional[float]:
    if value is None or math.isnan(value):
        return None
    return float(value)


@dataclass
class EvaluationReport:
    samples: Dict[int, np.ndarray]
    totals: Dict[int, float]
    means: Dict[int, Optional[float]]
    recall: Dict[int, Optional[float]]
    top_energies: Dict[int, List[float]]
    ks_statistics: np.ndarray
    ks_p_values: np.ndarray
    verdict: OrderingVerdict
    alpha: float = c.Defaults.ALPHA
    num_rankings: int = 0
    skipped_manuscripts: List[str] = field(default_factory=list)
    members_not_in_graph: List[AuthorKey] = field(default_factory=list)

    def counts(self) -> Dict[int, int]:
        return {b: int(sample.size) for b, sample in self.samples.items()}

    def category_df(self) -> pd.DataFrame:
        counts: Dict[int, int] = self.counts()
        return pd.DataFrame(
            [[b, c.BidCode.DESCRIPTIONS[b], counts[b], self.totals[b],
              self.means[b]] for b in c.BidCode.ALL_BIDS],
            columns=["bid", "description", "count", "total", "mean"])

    @staticmethod
    def _matrix_df(matrix: np.ndarray) -> pd.DataFrame:
        df = pd.DataFrame(matrix, columns=[str(b) for b in
                                           c.BidCode.ALL_BIDS])
        df.insert(0, "bid", c.BidCode.ALL_BIDS)
        return df

    def ks_statistics_df(self) -> pd.DataFrame:
        return EvaluationReport._matrix_df(self.ks_statistics)

    def ks_p_values_df(self) -> pd.DataFrame:
        return EvaluationReport._matrix_df(self.ks_p_values)

    def recall_df(self) -> pd.DataFrame:
        counts: Dict[int, int] = self.counts()
        return pd.DataFrame([[b, counts[b], self.recall[b]]
                             for b in c.BidCode.ALL_BIDS],
                            columns=["bid", "count", "recall"])

    def top_energies_df(self) -> pd.DataFrame:
        return pd.DataFrame([[b, rank, energy]
                             for b in c.BidCode.ALL_BIDS
                             for rank, energy in
                             enumerate(self.top_energies[b], start=1)],
                            columns=["bid", "rank", "energy"])

    def ordering_df(self) -> pd.DataFrame:
        return pd.DataFrame(
            [[self.verdict.label, self.alpha,
              self.ks_p_values[0, 1], self.ks_p_values[0, 2],
              self.ks_p_values[1, 2], self.means[1], self.means[2],
              self.means[3], self.verdict.reason]],
            columns=["verdict", "alpha", "p_1_2", "p_1_3", "p_2_3",
                     "mean_1", "mean_2", "mean_3", "reason"])

    def histogram_df(self, num_bins: int = 20) -> pd.DataFrame:
        """Zero bin plus log-spaced bins over the positive range of all
        categories."""
        positive: np.ndarray = np.concatenate(
            [s[s > 0.0] for s in self.samples.values()])
        edges: Optional[np.ndarray] = None
        if positive.size:
            low, high = float(positive.min()), float(positive.max())
            if low == high:
                edges = np.array([low, high])
            else:
                edges = np.logspace(np.log10(low), np.log10(high),
                                    num_bins + 1)
                edges[0], edges[-1] = low, high
        rows: List[List[Any]] = []
        for b in c.BidCode.ALL_BIDS:
            sample: np.ndarray = self.samples[b]
            rows.append([b, 0.0, 0.0, int(np.count_nonzero(sample == 0.0))])
            if edges is not None:
                counts, _ = np.histogram(sample[sample > 0.0], bins=edges)
                rows += [[b, float(edges[i]), float(edges[i + 1]),
                          int(counts[i])] for i in range(counts.size)]
        return pd.DataFrame(rows, columns=["bid", "lower", "upper", "count"])

    def to_dict(self) -> Dict[str, Any]:
        counts: Dict[int, int] = self.counts()
        size: int = len(c.BidCode.ALL_BIDS)
        return {
            "categories": {
                str(b): {"description": c.BidCode.DESCRIPTIONS[b],
                         "count": counts[b],
                         "total": self.totals[b],
                         "mean": self.means[b],
                         "recall": self.recall[b],
                         "top_energies": self.top_energies[b]}
                for b in c.BidCode.ALL_BIDS},
            "ks_statistics": [[_finite_or_none(self.ks_statistics[i, j])
                               for j in range(size)] for i in range(size)],
            "ks_p_values": [[_finite_or_none(self.ks_p_values[i, j])
                             for j in range(size)] for i in range(size)],
            "ordering": {"verdict": self.verdict.label,
                         "holds": self.verdict.holds,
                         "reason": self.verdict.reason,
                         "alpha": self.alpha},
            "num_rankings": self.num_rankings,
            "skipped_manuscripts": self.skipped_manuscripts,
            "members_not_in_graph": [m.render()
                                     for m in self.members_not_in_graph]}

    def write(self, output_dir: str, emit_distributions: bool = False) -> None:
        self.category_df().to_csv(
            os.path.join(output_dir, "category-energy.txt"), sep="\t",
            index=False)
        self.ks_statistics_df().to_csv(
            os.path.join(output_dir, "ks-statistics.txt"), sep="\t",
            index=False)
        self.ks_p_values_df().to_csv(
            os.path.join(output_dir, "ks-p-values.txt"), sep="\t",
            index=False)
        self.recall_df().to_csv(os.path.join(output_dir, "recall.txt"),
                                sep="\t", index=False)
        self.top_energies_df().to_csv(
            os.path.join(output_dir, "top-energies.txt"), sep="\t",
            index=False)
        self.ordering_df().to_csv(os.path.join(output_dir, "ordering.txt"),
                                  sep="\t", index=False)
        with open(os.path.join(output_dir, "report.json"), "w",
                  encoding="utf-8") as report_file:
            json.dump(self.to_dict(), report_file, sort_keys=True, indent=2)
            report_file.write("\n")

        if emit_distributions:
            distributions_dir: str = os.path.join(output_dir,
                                                  "distributions")
            os.makedirs(distributions_dir, exist_ok=True)
            for b in c.BidCode.ALL_BIDS:
                pd.DataFrame({"energy": self.samples[b]}).to_csv(
                    os.path.join(distributions_dir,
                                 "category-" + str(b) + "-energies.txt"),
                    sep="\t", index=False)
            self.histogram_df().to_csv(
                os.path.join(distributions_dir, "histograms.txt"), sep="\t",
                index=False)

    def __str__(self) -> str:
        counts: Dict[int, int] = self.counts()
        str_rep: List[str] = ["Evaluation report:\n",
                              "\tRanked manuscripts: ",
                              str(self.num_rankings), "\n",
                              "\tSkipped manuscripts: ",
                              str(len(self.skipped_manuscripts)), "\n",
                              "\tMembers not in graph: ",
                              str(len(self.members_not_in_graph)), "\n",
                              "\tbid\tcount\ttotal\tmean\trecall\n"]
        for b in c.BidCode.ALL_BIDS:
            mean: Optional[float] = self.means[b]
            recall: Optional[float] = self.recall[b]
            str_rep += ["\t", str(b), "\t", str(counts[b]), "\t",
                        "{:.6g}".format(self.totals[b]), "\t",
                        "-" if mean is None else "{:.6g}".format(mean), "\t",
                        "-" if recall is None else "{:.3f}".format(recall),
                        "\n"]
        str_rep += ["\tKolmogorov-Smirnov p-values:\n"]
        for i, bid_i in enumerate(c.BidCode.ALL_BIDS):
            str_rep += ["\t", str(bid_i)] + \
                ["\t" + ("-" if math.isnan(p) else "{:.3g}".format(p))
                 for p in self.ks_p_values[i]] + ["\n"]
        str_rep += ["\tOrdering e1 ~ e2 > e3 ~ e4: ", self.verdict.label,
                    " (", self.verdict.reason, ")\n"]
        return "".join(str_rep)
