"""
peerswarm

Abstract base class for swarm propagators (using Strategy design pattern)

A propagator turns a seed multiset into the energy vector that a swarm
started there deposits over ``max_steps`` steps. Every live particle
deposits its energy at its location, decays by ``(1 - decay)`` and moves to
a neighbor drawn from the location's transition distribution; particles at
nodes without edges deposit once and die.
"""
from abc import ABC, abstractmethod
import logging
import os
from typing import Mapping

import peerswarm.constants as c
from peerswarm.graph import CoauthorGraph
from peerswarm.model import SwarmConfig
from peerswarm.swarm.energyvector import EnergyVector


class Propagator(ABC):
    def __init__(self, mode: str, silent: bool = False) -> None:
        self.mode: str = mode
        self.logger = logging.getLogger(__name__)
        if silent:
            self.logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))

    @abstractmethod
    def run(self, graph: CoauthorGraph, seeds: Mapping[int, int],
            particles_per_seed: int, energy: float, decay: float,
            max_steps: int, rng_seed: int,
            stream: int = c.RandomStream.POSITIVE) -> EnergyVector:
        """Propagates a swarm seeded with ``seeds[node] *
        particles_per_seed`` particles of energy ``energy`` per seed node.

        Args:
            graph: normalized co-authorship graph
            seeds: node ID to multiplicity
            particles_per_seed: particles per unit of multiplicity
            energy: initial particle energy
            decay: fraction of energy lost per step
            max_steps: number of deposit rounds
            rng_seed: seed of the random streams (ignored by deterministic
                propagators)
            stream: random stream ID, keeps swarms of one run independent

        Returns:
            accumulated energy per node
        """

    def propagate(self, graph: CoauthorGraph, seeds: Mapping[int, int],
                  config: SwarmConfig) -> EnergyVector:
        return self.run(graph, seeds, config.particles_per_reference,
                        config.initial_energy, config.decay, config.max_steps,
                        config.rng_seed, c.RandomStream.POSITIVE)

    @staticmethod
    def check_graph(graph: CoauthorGraph) -> None:
        if not graph.is_normalized:
            raise ValueError("swarm propagation requires a normalized graph")
