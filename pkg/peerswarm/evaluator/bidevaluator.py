"""
peerswarm

Bid evaluation: compares the membership a program committee member
receives for a submission with the bid the member entered for it

Each (member, manuscript) bid contributes the member's membership in the
manuscript's ranking to the sample of its bid category, zero if the member
is in the graph but was not reached. Members absent from the graph are left
out of every category.
"""
import logging
import math
import os
from typing import Dict, Iterable, List, Mapping, Optional, Set

import numpy as np

import peerswarm.constants as c
from peerswarm.errors import InconsistentDataError
from peerswarm.evaluator.kolmogorovsmirnov import KolmogorovSmirnov
from peerswarm.evaluator.report import EvaluationReport
from peerswarm.graph import CoauthorGraph
from peerswarm.referee import RefereeRanking
from peerswarm.schema import AuthorKey, BidRecord, KSResult, OrderingVerdict


class BidEvaluator:
    def __init__(self, alpha: float = c.Defaults.ALPHA,
                 top_n: int = c.Defaults.TOP_N,
                 silent: bool = False) -> None:
        self.logger = logging.getLogger(__name__)
        if silent:
            self.logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))
        self.alpha: float = alpha
        self.top_n: int = top_n

    def aggregate_energies(self, rankings: Mapping[str, RefereeRanking],
                           bids: Iterable[BidRecord], graph: CoauthorGraph,
                           known_manuscripts: Optional[Iterable[str]] = None
                           ) -> Dict[int, np.ndarray]:
        """Per bid category sample of memberships.

        Args:
            rankings: rankings by manuscript ID
            bids: bid records
            graph: graph the rankings were computed on
            known_manuscripts: IDs of all manuscripts bids may refer to,
                defaults to the ranked ones; bids on known manuscripts
                without a ranking are dropped

        Raises:
            InconsistentDataError: bids on manuscripts that are not known
        """
        bids = list(bids)
        known: Set[str] = set(rankings.keys())
        if known_manuscripts is not None:
            known.update(known_manuscripts)
        unknown: List[str] = [b.manuscript_id for b in bids
                              if b.manuscript_id not in known]
        if unknown:
            raise InconsistentDataError(
                "bids reference manuscripts not in corpus", unknown)

        samples: Dict[int, List[float]] = {b: [] for b in c.BidCode.ALL_BIDS}
        dropped: int = 0
        for bid in bids:
            if bid.member not in graph:
                continue
            ranking: Optional[RefereeRanking] = rankings.get(
                bid.manuscript_id)
            if ranking is None:
                dropped += 1
                continue
            samples[bid.bid].append(ranking.membership(bid.member))
        if dropped:
            self.logger.info("dropped %s bids on manuscripts without "
                             "ranking", dropped)
        return {b: np.array(values, dtype=np.float64)
                for b, values in samples.items()}

    @staticmethod
    def members_not_in_graph(bids: Iterable[BidRecord],
                             graph: CoauthorGraph) -> List[AuthorKey]:
        return sorted({b.member for b in bids if b.member not in graph})

    @staticmethod
    def totals(samples: Mapping[int, np.ndarray]) -> Dict[int, float]:
        return {b: math.fsum(sample.tolist()) for b, sample in samples.items()}

    @staticmethod
    def means(samples: Mapping[int, np.ndarray]) -> Dict[int, Optional[float]]:
        return {b: math.fsum(sample.tolist()) / sample.size
                if sample.size else None
                for b, sample in samples.items()}

    @staticmethod
    def recall_table(samples: Mapping[int, np.ndarray]
                     ) -> Dict[int, Optional[float]]:
        return {b: float(np.count_nonzero(sample > 0.0)) / sample.size
                if sample.size else None
                for b, sample in samples.items()}

    @staticmethod
    def top_energies(samples: Mapping[int, np.ndarray],
                     n: int) -> Dict[int, List[float]]:
        if n < 1:
            raise ValueError("n must be at least 1")
        top: Dict[int, List[float]] = dict()
        for b, sample in samples.items():
            # the maximum membership of a ranking is exactly 1.0
            remaining: np.ndarray = sample[sample != 1.0]
            top[b] = np.sort(remaining)[::-1][:n].tolist()
        return top

    @staticmethod
    def ks_matrix(samples: Mapping[int, np.ndarray]) -> Dict[str, np.ndarray]:
        size: int = len(c.BidCode.ALL_BIDS)
        statistics: np.ndarray = np.full((size, size), np.nan)
        p_values: np.ndarray = np.full((size, size), np.nan)
        for i, bid_i in enumerate(c.BidCode.ALL_BIDS):
            statistics[i, i] = 0.0
            p_values[i, i] = 1.0
            for j in range(i + 1, size):
                bid_j: int = c.BidCode.ALL_BIDS[j]
                if samples[bid_i].size and samples[bid_j].size:
                    result: KSResult = KolmogorovSmirnov.ks_two_sample(
                        samples[bid_i], samples[bid_j])
                    statistics[i, j] = statistics[j, i] = result.statistic
                    p_values[i, j] = p_values[j, i] = result.p_value
        return {"statistics": statistics, "p_values": p_values}

    def check_ordering(self, samples: Mapping[int, np.ndarray],
                       alpha: Optional[float] = None) -> OrderingVerdict:
        """Checks that experts (bids 1 and 2) are indistinguishable from
        each other and separated from non-experts (bid 3)."""
        if alpha is None:
            alpha = self.alpha
        empty: List[str] = [str(b) for b in c.BidCode.ALL_BIDS
                            if not samples[b].size]
        if empty:
            return OrderingVerdict(None, "no bids in categor" +
                                   ("y " if len(empty) == 1 else "ies ") +
                                   ", ".join(empty))

        p_1_2: float = KolmogorovSmirnov.ks_two_sample(
            samples[1], samples[2]).p_value
        p_1_3: float = KolmogorovSmirnov.ks_two_sample(
            samples[1], samples[3]).p_value
        p_2_3: float = KolmogorovSmirnov.ks_two_sample(
            samples[2], samples[3]).p_value
        means: Dict[int, Optional[float]] = BidEvaluator.means(samples)

        failures: List[str] = []
        if not p_1_2 > alpha:
            failures.append("categories 1 and 2 differ (p = " +
                            "{:.3g}".format(p_1_2) + ")")
        if not p_1_3 < alpha:
            failures.append("categories 1 and 3 not separated (p = " +
                            "{:.3g}".format(p_1_3) + ")")
        if not p_2_3 < alpha:
            failures.append("categories 2 and 3 not separated (p = " +
                            "{:.3g}".format(p_2_3) + ")")
        if not means[1] > means[3]:
            failures.append("mean of category 1 not above category 3")
        if not means[2] > means[3]:
            failures.append("mean of category 2 not above category 3")

        if failures:
            return OrderingVerdict(False, "; ".join(failures))
        return OrderingVerdict(True, "experts indistinguishable and "
                               "separated from non-experts at alpha " +
                               str(alpha))

    def evaluate(self, rankings: Mapping[str, RefereeRanking],
                 bids: Iterable[BidRecord], graph: CoauthorGraph,
                 known_manuscripts: Optional[Iterable[str]] = None,
                 skipped_manuscripts: Iterable[str] = ()
                 ) -> EvaluationReport:
        bids = list(bids)
        if not bids:
            raise InconsistentDataError("no bids")
        samples: Dict[int, np.ndarray] = self.aggregate_energies(
            rankings, bids, graph, known_manuscripts)
        missing_members: List[AuthorKey] = \
            BidEvaluator.members_not_in_graph(bids, graph)
        if missing_members:
            self.logger.warning("%s program committee members not in graph; "
                                "their bids are excluded",
                                len(missing_members))
        ks: Dict[str, np.ndarray] = BidEvaluator.ks_matrix(samples)
        verdict: OrderingVerdict = self.check_ordering(samples)
        self.logger.info("ordering check %s: %s", verdict.label,
                         verdict.reason)
        return EvaluationReport(
            samples=samples,
            totals=BidEvaluator.totals(samples),
            means=BidEvaluator.means(samples),
            recall=BidEvaluator.recall_table(samples),
            top_energies=BidEvaluator.top_energies(samples, self.top_n),
            ks_statistics=ks["statistics"],
            ks_p_values=ks["p_values"],
            verdict=verdict,
            alpha=self.alpha,
            num_rankings=len(rankings),
            skipped_manuscripts=sorted(skipped_manuscripts),
            members_not_in_graph=missing_members)
