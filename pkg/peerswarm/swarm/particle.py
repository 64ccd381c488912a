"""
peerswarm

Particles: discrete walkers carrying decaying energy

Classes:
    - :class:`Particle`: a single particle (energy, decay, location)
    - :class:`ParticleSwarm`: a population of particles held as parallel
      arrays, seeded from a node multiset
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping

import numpy as np

from peerswarm.errors import EmptySeedError
from peerswarm.graph import CoauthorGraph


@dataclass
class Particle:
    energy: float
    decay: float
    location: int

    @property
    def is_alive(self) -> bool:
        return self.energy != 0.0


class ParticleSwarm:
    def __init__(self, locations: np.ndarray, energies: np.ndarray,
                 decays: np.ndarray) -> None:
        self.locations: np.ndarray = np.asarray(locations, dtype=np.int64)
        self.energies: np.ndarray = np.asarray(energies, dtype=np.float64)
        self.decays: np.ndarray = np.asarray(decays, dtype=np.float64)

    def __len__(self) -> int:
        return int(self.locations.size)

    @staticmethod
    def seed_particles(seeds: Mapping[int, int], particles_per_seed: int,
                       energy: float, decay: float,
                       graph: CoauthorGraph) -> ParticleSwarm:
        """Places ``multiplicity * particles_per_seed`` particles on every
        seed node.

        Particles are laid out by ascending node ID, so the particle index
        of every particle is independent of the mapping's iteration order.

        Raises:
            EmptySeedError: no seed with positive multiplicity
            UnknownNodeError: a seed node is not in the graph
        """
        seed_nodes: List[int] = sorted(node for node, multiplicity
                                       in seeds.items() if multiplicity > 0)
        if not seed_nodes:
            raise EmptySeedError("cannot seed swarm from empty seed set")
        graph.check_nodes(seed_nodes)
        counts: np.ndarray = np.array(
            [seeds[node] * particles_per_seed for node in seed_nodes],
            dtype=np.int64)
        locations: np.ndarray = np.repeat(
            np.array(seed_nodes, dtype=np.int64), counts)
        return ParticleSwarm(locations,
                             np.full(locations.size, energy, dtype=np.float64),
                             np.full(locations.size, decay, dtype=np.float64))

    def particles(self) -> List[Particle]:
        return [Particle(float(e), float(d), int(l)) for e, d, l
                in zip(self.energies, self.decays, self.locations)]

    def particles_per_node(self) -> Dict[int, int]:
        nodes, counts = np.unique(self.locations, return_counts=True)
        return dict(zip(nodes.tolist(), counts.tolist()))


def step_particle(particle: Particle, graph: CoauthorGraph,
                  rng: np.random.Generator,
                  accumulator: Dict[int, float]) -> Particle:
    """One propagation step of a live particle: deposit its energy at its
    location, decay, then move along a sampled outgoing edge or die at a
    sink."""
    accumulator[particle.location] = \
        accumulator.get(particle.location, 0.0) + particle.energy
    energy: float = particle.energy * (1.0 - particle.decay)
    next_locations, moved = graph.sample_neighbors(
        np.array([particle.location], dtype=np.int64),
        rng.random(1))
    if not moved[0]:
        return Particle(0.0, particle.decay, particle.location)
    return Particle(energy, particle.decay, int(next_locations[0]))
