"""
peerswarm

Negative energy ("black-out") swarm launched from a submission's authors

A swarm of depth ``k`` hops makes ``k + 1`` deposit rounds, so it reaches
every node at most ``k`` edges away from an author. Its negative deposits
are added to the positive energy vector and negative totals are clamped to
zero. With a dominant blackout energy and no decay this zeroes exactly the
``k``-neighborhood of the authors.
"""
import logging
import os
from typing import Dict, Iterable, List, Optional

import peerswarm.constants as c
from peerswarm.graph import CoauthorGraph
from peerswarm.model import BlackoutConfig
from peerswarm.schema import AuthorKey
from peerswarm.swarm.energyvector import EnergyVector
from peerswarm.swarm.propagator import Propagator


class Blackout:
    def __init__(self, propagator: Propagator, silent: bool = False) -> None:
        self.propagator: Propagator = propagator
        self.logger = logging.getLogger(__name__)
        if silent:
            self.logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))

    def resolve_authors(self, authors: Iterable[AuthorKey],
                        graph: CoauthorGraph) -> List[int]:
        nodes: List[int] = []
        for author in authors:
            node: Optional[int] = graph.get_node(author)
            if node is None:
                self.logger.warning("blackout author %s not in graph, "
                                    "skipped", author.render())
            else:
                nodes.append(node)
        return sorted(set(nodes))

    def negative_energy(self, author_nodes: Iterable[int],
                        blackout: BlackoutConfig, graph: CoauthorGraph,
                        rng_seed: int) -> EnergyVector:
        seeds: Dict[int, int] = {node: 1 for node in author_nodes}
        if blackout.blackout_steps == 0 or not seeds:
            return EnergyVector.empty()
        return self.propagator.run(graph, seeds,
                                   blackout.particles_per_author,
                                   blackout.blackout_energy,
                                   blackout.blackout_decay,
                                   blackout.blackout_steps + 1,
                                   rng_seed, c.RandomStream.BLACKOUT)

    def apply_blackout(self, base: EnergyVector, author_nodes: Iterable[int],
                       blackout: BlackoutConfig, graph: CoauthorGraph,
                       rng_seed: int = c.Defaults.SEED) -> EnergyVector:
        """Adds the negative swarm's deposits to ``base`` and clamps
        negative totals to zero.

        Returns ``base`` itself for a depth of zero or when no author node
        is given. The ``enabled`` flag is the caller's switch and is not
        consulted here.
        """
        author_nodes = sorted(set(author_nodes))
        graph.check_nodes(author_nodes)
        if blackout.blackout_steps == 0 or not author_nodes:
            return base
        negative: EnergyVector = self.negative_energy(author_nodes, blackout,
                                                      graph, rng_seed)
        result: EnergyVector = base.add(negative).clamp(0.0)
        self.logger.debug("blackout of depth %s removed %s of %s nodes",
                          blackout.blackout_steps,
                          len(base) - len(result), len(base))
        return result
