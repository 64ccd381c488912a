"""
peerswarm

Monte Carlo swarm propagation

Particles are split into fixed blocks of ``Defaults.BLOCK_SIZE`` consecutive
particle indices. Block ``b`` draws its random numbers from
``SeedSequence(rng_seed, spawn_key=(stream, b))`` and deposits into its own
accumulator; accumulators are merged in block order. Neither the random
draws nor the floating point summation order depend on how many threads
run the blocks.
"""
from typing import List, Mapping, Optional, Tuple

from joblib import Parallel, delayed
import numpy as np

import peerswarm.constants as c
from peerswarm.graph import CoauthorGraph
from peerswarm.misc import MiscHelper
from peerswarm.swarm.energyvector import EnergyVector
from peerswarm.swarm.particle import ParticleSwarm
from peerswarm.swarm.propagator import Propagator


class MonteCarloPropagator(Propagator):
    def __init__(self, threads: Optional[int] = None,
                 block_size: int = c.Defaults.BLOCK_SIZE,
                 silent: bool = False) -> None:
        super().__init__(c.PropagationMode.MONTE_CARLO, silent)
        self.threads: int = MiscHelper.resolve_thread_count(threads)
        if block_size < 1:
            raise ValueError("block size must be positive")
        self.block_size: int = block_size

    def run(self, graph: CoauthorGraph, seeds: Mapping[int, int],
            particles_per_seed: int, energy: float, decay: float,
            max_steps: int, rng_seed: int,
            stream: int = c.RandomStream.POSITIVE) -> EnergyVector:
        swarm: ParticleSwarm = ParticleSwarm.seed_particles(
            seeds, particles_per_seed, energy, decay, graph)
        return self.propagate_swarm(swarm, graph, max_steps, rng_seed,
                                    stream)

    def propagate_swarm(self, swarm: ParticleSwarm, graph: CoauthorGraph,
                        max_steps: int, rng_seed: int,
                        stream: int = c.RandomStream.POSITIVE) -> EnergyVector:
        Propagator.check_graph(graph)
        # built once here, before worker threads share the graph
        if graph.num_directed_edges:
            graph.cumulative_probabilities()
        num_blocks: int = -(-len(swarm) // self.block_size)
        self.logger.debug("propagating %s particles in %s blocks on %s "
                          "threads", len(swarm), num_blocks, self.threads)

        results: List[Tuple[np.ndarray, np.ndarray]] = Parallel(
            n_jobs=self.threads, backend="threading")(
                delayed(MonteCarloPropagator._propagate_block)(
                    graph,
                    swarm.locations[b * self.block_size:
                                    (b + 1) * self.block_size],
                    swarm.energies[b * self.block_size:
                                   (b + 1) * self.block_size],
                    swarm.decays[b * self.block_size:
                                 (b + 1) * self.block_size],
                    max_steps,
                    MonteCarloPropagator.block_rng(rng_seed, stream, b))
                for b in range(num_blocks))

        accumulator: np.ndarray = np.zeros(graph.num_nodes, dtype=np.float64)
        for nodes, deposits in results:
            accumulator[nodes] += deposits
        return EnergyVector.from_dense(accumulator)

    @staticmethod
    def block_rng(rng_seed: int, stream: int,
                  block: int) -> np.random.Generator:
        return np.random.default_rng(
            np.random.SeedSequence(rng_seed, spawn_key=(stream, block)))

    @staticmethod
    def _propagate_block(graph: CoauthorGraph, locations: np.ndarray,
                         energies: np.ndarray, decays: np.ndarray,
                         max_steps: int,
                         rng: np.random.Generator) -> Tuple[np.ndarray,
                                                            np.ndarray]:
        visited: List[np.ndarray] = []
        deposited: List[np.ndarray] = []
        for _ in range(max_steps):
            alive: np.ndarray = energies != 0.0
            if not alive.all():
                locations = locations[alive]
                energies = energies[alive]
                decays = decays[alive]
            if not locations.size:
                break
            visited.append(locations)
            deposited.append(energies)
            energies = energies * (1.0 - decays)
            locations, moved = graph.sample_neighbors(
                locations, rng.random(locations.size))
            energies = np.where(moved, energies, 0.0)

        if not visited:
            return np.zeros(0, dtype=np.int64), np.zeros(0)
        nodes, inverse = np.unique(np.concatenate(visited),
                                   return_inverse=True)
        return nodes, np.bincount(inverse.ravel(),
                                  weights=np.concatenate(deposited),
                                  minlength=nodes.size)
