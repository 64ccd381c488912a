"""
peerswarm

Blackout depth sweep: bid category totals, means and recall for a list of
blackout depths, reusing each manuscript's positive swarm across depths
"""
import dataclasses
import logging
import os
from typing import Dict, Iterable, List, Tuple

import numpy as np
import pandas as pd

import peerswarm.constants as c
from peerswarm.errors import NoEnergyError, NoSeedsError
from peerswarm.evaluator.bidevaluator import BidEvaluator
from peerswarm.model import BlackoutConfig, Corpus
from peerswarm.referee import RefereeFinder, RefereeRanking
from peerswarm.schema import BidRecord, ManuscriptRecord, SeedSet
from peerswarm.swarm import EnergyVector


class BlackoutSweep:
    def __init__(self, finder: RefereeFinder, evaluator: BidEvaluator,
                 silent: bool = False) -> None:
        self.logger = logging.getLogger(__name__)
        if silent:
            self.logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))
        self.finder: RefereeFinder = finder
        self.evaluator: BidEvaluator = evaluator

    def sweep(self, corpus: Corpus, bids: Iterable[BidRecord],
              depths: Iterable[int]) -> pd.DataFrame:
        bids = list(bids)
        manuscript_ids: List[str] = sorted({b.manuscript_id for b in bids})

        positive: Dict[str, Tuple[EnergyVector, SeedSet]] = dict()
        for manuscript_id in manuscript_ids:
            manuscript: ManuscriptRecord = corpus.get(manuscript_id)
            if manuscript is None:
                continue
            try:
                positive[manuscript_id] = self.finder.positive_energy(
                    manuscript)
            except (NoSeedsError, NoEnergyError) as exception:
                self.logger.warning("skipped manuscript %s: %s",
                                    manuscript_id, str(exception))

        rows: List[List] = []
        base: BlackoutConfig = self.finder.run_config.blackout
        for depth in depths:
            blackout: BlackoutConfig = dataclasses.replace(
                base, enabled=depth > 0, blackout_steps=depth)
            rankings: Dict[str, RefereeRanking] = dict()
            for manuscript_id, (energy, seed_set) in positive.items():
                # an emptied ranking still counts its bids at zero energy
                rankings[manuscript_id] = self.finder.rank_from_energy(
                    corpus.get(manuscript_id), energy, seed_set, blackout,
                    allow_empty=True)
                if not len(rankings[manuscript_id]):
                    self.logger.info("blackout depth %s: no candidate "
                                     "left for manuscript %s", depth,
                                     manuscript_id)
            samples: Dict[int, np.ndarray] = \
                self.evaluator.aggregate_energies(
                    rankings, bids, self.finder.graph, corpus.ids())
            totals = BidEvaluator.totals(samples)
            means = BidEvaluator.means(samples)
            recall = BidEvaluator.recall_table(samples)
            for b in c.BidCode.ALL_BIDS:
                rows.append([depth, b, int(samples[b].size), totals[b],
                             means[b], recall[b]])
            self.logger.info("blackout depth %s: category 4 recall %s",
                             depth, recall[c.BidCode.CONFLICT_OF_INTEREST])
        return pd.DataFrame(rows, columns=["blackout_steps", "bid", "count",
                                           "total", "mean", "recall"])

    def write(self, df: pd.DataFrame, output_dir: str) -> None:
        df.to_csv(os.path.join(output_dir, "blackout-sweep.txt"), sep="\t",
                  index=False)
