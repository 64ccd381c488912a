"""
peerswarm

Planted community bundle: a synthetic corpus with program committee bids
whose expected evaluation outcome is known

Each topic consists of
    - a clique paper of cited authors
    - expert program committee members, each co-authoring one paper with
      all cited authors of the topic (so experts of a topic are
      structurally identical)
    - submissions authored by two submitters that cite the topic's cited
      authors; the first submitter reaches a cited author through a bridge
      author (hop distance two) and co-authored a paper with a
      conflict-of-interest member (hop distance one)

Bids: the topic's experts split evenly between codes 1 and 2, experts of
other topics bid 3, the conflict-of-interest member bids 4. Optional
members that never published bid 3 on every submission. Topics share no
author, so experts bidding 3 receive no energy.
"""
import logging
import os
from typing import List, NamedTuple

import numpy as np

import peerswarm.constants as c
from peerswarm.errors import ConfigurationError
from peerswarm.misc import MiscHelper
from peerswarm.model import Corpus
from peerswarm.schema import AuthorKey, BidRecord, ManuscriptRecord
from peerswarm.writer import CorpusWriter


class PlantedBundle(NamedTuple):
    corpus: Corpus
    bids: List[BidRecord]
    submission_ids: List[str]


class PlantedCommunityGenerator:
    def __init__(self, seed: int = 0, topics: int = 10,
                 submissions_per_topic: int = 4, cited_per_topic: int = 4,
                 experts_per_topic: int = 4, missing_references: int = 2,
                 absent_members: int = 2, silent: bool = False) -> None:
        self.logger = logging.getLogger(__name__)
        if silent:
            self.logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))
        if topics < 1 or submissions_per_topic < 1:
            raise ConfigurationError("at least one topic with one "
                                     "submission required")
        if cited_per_topic < 2:
            raise ConfigurationError("at least two cited authors per "
                                     "topic required")
        if experts_per_topic < 2 or experts_per_topic % 2:
            raise ConfigurationError("experts per topic must be even and "
                                     "at least 2")
        self.seed: int = seed
        self.topics: int = topics
        self.submissions_per_topic: int = submissions_per_topic
        self.cited_per_topic: int = cited_per_topic
        self.experts_per_topic: int = experts_per_topic
        self.missing_references: int = missing_references
        self.absent_members: int = absent_members

    @staticmethod
    def _key(role: str, first_initial: str, *numbers: int) -> AuthorKey:
        return AuthorKey(role + "x".join(str(n).zfill(2) for n in numbers),
                         first_initial, "")

    def cited(self, topic: int, i: int) -> AuthorKey:
        return PlantedCommunityGenerator._key("cited", "c", topic, i)

    def expert(self, topic: int, j: int) -> AuthorKey:
        return PlantedCommunityGenerator._key("expert", "e", topic, j)

    def conflict(self, topic: int, s: int) -> AuthorKey:
        return PlantedCommunityGenerator._key("conflict", "k", topic, s)

    def generate(self) -> PlantedBundle:
        rng: np.random.Generator = np.random.default_rng(self.seed)
        manuscripts: List[ManuscriptRecord] = []
        bids: List[BidRecord] = []
        submission_ids: List[str] = []

        for t in range(self.topics):
            prefix: str = "t" + str(t).zfill(2)
            cited: List[AuthorKey] = [self.cited(t, i) for i in
                                      range(self.cited_per_topic)]
            manuscripts.append(ManuscriptRecord(prefix + "-clique",
                                                tuple(cited)))
            for j in range(self.experts_per_topic):
                manuscripts.append(ManuscriptRecord(
                    prefix + "-expert" + str(j).zfill(2),
                    (self.expert(t, j),) + tuple(cited)))

            for s in range(self.submissions_per_topic):
                submission_id: str = prefix + "-sub" + str(s).zfill(2)
                first = PlantedCommunityGenerator._key("submitter", "s", t,
                                                       s, 1)
                second = PlantedCommunityGenerator._key("submitter", "s", t,
                                                        s, 2)
                bridge = PlantedCommunityGenerator._key("bridge", "b", t, s)
                conflict: AuthorKey = self.conflict(t, s)
                bridged: AuthorKey = cited[s % self.cited_per_topic]

                num_cited: int = int(rng.integers(2,
                                                  self.cited_per_topic + 1))
                cited_ids: np.ndarray = np.sort(rng.choice(
                    self.cited_per_topic, size=num_cited, replace=False))
                references: List[AuthorKey] = []
                for i in cited_ids.tolist():
                    references += [cited[i]] * int(rng.integers(1, 3))
                references += [PlantedCommunityGenerator._key(
                    "missing", "m", t, s, i)
                    for i in range(self.missing_references)]

                manuscripts.append(ManuscriptRecord(
                    submission_id, (first, second), tuple(references)))
                manuscripts.append(ManuscriptRecord(
                    submission_id + "-bridge1", (first, bridge)))
                manuscripts.append(ManuscriptRecord(
                    submission_id + "-bridge2", (bridge, bridged)))
                manuscripts.append(ManuscriptRecord(
                    submission_id + "-conflict", (conflict, first)))
                submission_ids.append(submission_id)

                for other in range(self.topics):
                    for j in range(self.experts_per_topic):
                        if other != t:
                            code: int = c.BidCode.NON_EXPERT
                        elif (j + s) % 2 == 0:
                            code = c.BidCode.EXPERT_WANTS_TO_REVIEW
                        else:
                            code = c.BidCode.EXPERT
                        bids.append(BidRecord(self.expert(other, j),
                                              submission_id, code))
                bids.append(BidRecord(conflict, submission_id,
                                      c.BidCode.CONFLICT_OF_INTEREST))
                for a in range(self.absent_members):
                    bids.append(BidRecord(
                        PlantedCommunityGenerator._key("absent", "p", a),
                        submission_id, c.BidCode.NON_EXPERT))

        order: np.ndarray = rng.permutation(len(manuscripts))
        corpus: Corpus = Corpus([manuscripts[i] for i in order.tolist()])
        self.logger.info("generated planted bundle: %s manuscripts, %s "
                         "submissions, %s bids", len(corpus),
                         len(submission_ids), len(bids))
        return PlantedBundle(corpus, bids, submission_ids)

    @staticmethod
    def write_bids(bids: List[BidRecord], file_name: str) -> None:
        with open(file_name, "w", encoding="utf-8") as bid_file:
            for bid in bids:
                bid_file.write(bid.member.render() + "\t" +
                               bid.manuscript_id + "\t" + str(bid.bid) + "\n")

    def write(self, bundle: PlantedBundle, output_dir: str) -> None:
        output_dir = MiscHelper.prepare_path(output_dir)
        CorpusWriter.write_corpus_to_file(
            bundle.corpus, os.path.join(output_dir, "corpus.jsonl"))
        PlantedCommunityGenerator.write_bids(
            bundle.bids, os.path.join(output_dir, "bids.txt"))
        self.logger.info("wrote corpus.jsonl and bids.txt to %s", output_dir)
