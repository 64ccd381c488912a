"""
peerswarm

Referee ranking pipeline: manuscript, seed set, positive swarm, optional
blackout, membership normalization, ranked candidates
"""
import logging
import os
from typing import Dict, Iterable, List, Optional, Tuple

from peerswarm.errors import NoEnergyError, NoSeedsError
from peerswarm.graph import CoauthorGraph
from peerswarm.idresolver import IdResolver
from peerswarm.model import BlackoutConfig, RunConfig
from peerswarm.model import Corpus
from peerswarm.referee.refereeranking import RefereeRanking
from peerswarm.schema import AuthorKey, ManuscriptRecord, RankingEntry
from peerswarm.schema import SeedSet
from peerswarm.swarm import Blackout, EnergyVector, Propagator


class RefereeFinder:
    def __init__(self, graph: CoauthorGraph,
                 run_config: Optional[RunConfig] = None,
                 silent: bool = False) -> None:
        self.logger = logging.getLogger(__name__)
        if silent:
            self.logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))
        self.silent: bool = silent
        self.graph: CoauthorGraph = graph
        self.run_config: RunConfig = run_config or RunConfig()
        self.propagator: Propagator = IdResolver.get_propagator(
            self.run_config.swarm.mode, self.run_config.threads, silent)
        self.blackout: Blackout = Blackout(self.propagator, silent)

    def build_seed_set(self, manuscript: ManuscriptRecord) -> SeedSet:
        resolved: Dict[int, int] = dict()
        missing: List[AuthorKey] = []
        for author, multiplicity in manuscript.reference_counts().items():
            node: Optional[int] = self.graph.get_node(author)
            if node is None:
                missing.append(author)
            else:
                resolved[node] = multiplicity
        missing.sort()
        if missing:
            self.logger.warning("manuscript %s: %s of %s referenced authors "
                                "not in graph", manuscript.manuscript_id,
                                len(missing), len(missing) + len(resolved))
        if not resolved:
            raise NoSeedsError("manuscript " + manuscript.manuscript_id +
                               " has no referenced author in the graph")
        return SeedSet(resolved, missing)

    def positive_energy(self, manuscript: ManuscriptRecord
                        ) -> Tuple[EnergyVector, SeedSet]:
        """Seed set and positive swarm energy of a manuscript.

        Raises:
            NoSeedsError: no referenced author is in the graph
            NoEnergyError: the swarm left no positive energy
        """
        seed_set: SeedSet = self.build_seed_set(manuscript)
        energy: EnergyVector = self.propagator.propagate(
            self.graph, seed_set.resolved, self.run_config.swarm)
        if not len(energy.positive()):
            raise NoEnergyError("swarm of manuscript " +
                                manuscript.manuscript_id +
                                " deposited no positive energy")
        return energy, seed_set

    def final_energy(self, manuscript: ManuscriptRecord,
                     energy: EnergyVector,
                     blackout: Optional[BlackoutConfig] = None
                     ) -> EnergyVector:
        """Positive swarm energy after the blackout, negative totals
        clamped to zero."""
        if blackout is None:
            blackout = self.run_config.blackout
        if blackout.active:
            author_nodes: List[int] = self.blackout.resolve_authors(
                manuscript.authors, self.graph)
            energy = self.blackout.apply_blackout(
                energy, author_nodes, blackout, self.graph,
                self.run_config.swarm.rng_seed)
        return energy.positive()

    def rank_from_energy(self, manuscript: ManuscriptRecord,
                         energy: EnergyVector, seed_set: SeedSet,
                         blackout: Optional[BlackoutConfig] = None,
                         exclude_authors: Optional[bool] = None,
                         allow_empty: bool = False) -> RefereeRanking:
        """Ranks the candidates left after the blackout and the author
        exclusion.

        Raises:
            NoEnergyError: no candidate is left and ``allow_empty`` is
                not set
        """
        if blackout is None:
            blackout = self.run_config.blackout
        if exclude_authors is None:
            exclude_authors = self.run_config.evaluation.exclude_authors
        energy = self.final_energy(manuscript, energy, blackout)
        entries: List[RankingEntry] = []
        if len(energy):
            membership: EnergyVector = energy.normalize()
            entries = [RankingEntry(self.graph.authors[node], energy[node],
                                    membership[node])
                       for node in energy.ranked_nodes().tolist()]
        ranking: RefereeRanking = RefereeRanking(
            manuscript.manuscript_id, entries,
            self._snapshot(blackout, exclude_authors), seed_set.missing)
        if exclude_authors:
            ranking = RefereeFinder.exclude_authors(ranking, manuscript)
        if not len(ranking) and not allow_empty:
            raise NoEnergyError("no referee candidate for manuscript " +
                                manuscript.manuscript_id)
        return ranking

    def rank_referees(self, manuscript: ManuscriptRecord) -> RefereeRanking:
        energy, seed_set = self.positive_energy(manuscript)
        ranking: RefereeRanking = self.rank_from_energy(manuscript, energy,
                                                        seed_set)
        self.logger.info("manuscript %s: %s referee candidates",
                         manuscript.manuscript_id, len(ranking))
        return ranking

    def rank_corpus(self, corpus: Corpus,
                    manuscript_ids: Optional[Iterable[str]] = None
                    ) -> Tuple[Dict[str, RefereeRanking], List[str]]:
        """Ranks the given manuscripts, skipping those without seeds or
        without positive swarm energy. A manuscript whose candidates are
        all removed by the blackout or the author exclusion keeps an
        empty ranking.

        Returns:
            rankings by manuscript ID and the sorted IDs of skipped
            manuscripts
        """
        if manuscript_ids is None:
            manuscript_ids = corpus.ids()
        rankings: Dict[str, RefereeRanking] = dict()
        skipped: List[str] = []
        for manuscript_id in sorted(set(manuscript_ids)):
            manuscript: Optional[ManuscriptRecord] = corpus.get(manuscript_id)
            if manuscript is None:
                raise KeyError("manuscript not in corpus: " + manuscript_id)
            try:
                energy, seed_set = self.positive_energy(manuscript)
            except (NoSeedsError, NoEnergyError) as exception:
                self.logger.warning("skipped manuscript %s: %s",
                                    manuscript_id, str(exception))
                skipped.append(manuscript_id)
                continue
            ranking: RefereeRanking = self.rank_from_energy(
                manuscript, energy, seed_set, allow_empty=True)
            if not len(ranking):
                self.logger.info("manuscript %s: no candidate left",
                                 manuscript_id)
            rankings[manuscript_id] = ranking
        return rankings, skipped

    @staticmethod
    def exclude_authors(ranking: RefereeRanking,
                        manuscript: ManuscriptRecord) -> RefereeRanking:
        """Removes the manuscript's own authors and re-normalizes
        memberships; the result is empty if every candidate was an
        author."""
        own_authors = set(manuscript.authors)
        if not any(author in ranking for author in own_authors):
            return ranking
        return RefereeRanking.from_raw_energies(
            ranking.manuscript_id,
            [e for e in ranking.entries if e.author not in own_authors],
            ranking.config, ranking.missing)

    def _snapshot(self, blackout: BlackoutConfig,
                  exclude_authors: bool) -> Dict:
        snapshot: Dict = self.run_config.snapshot()
        snapshot["blackout"] = blackout.to_dict() if blackout.active else None
        snapshot["exclude_authors"] = exclude_authors
        return snapshot
