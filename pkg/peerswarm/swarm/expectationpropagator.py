"""
peerswarm

Exact expected swarm deposits: the infinite-population limit of Monte Carlo
propagation, computed by repeated application of the transposed transition
matrix. Mass at nodes without edges deposits once and then leaves the
system.
"""
from typing import Mapping

import numpy as np
import scipy.sparse

import peerswarm.constants as c
from peerswarm.errors import EmptySeedError
from peerswarm.graph import CoauthorGraph
from peerswarm.swarm.energyvector import EnergyVector
from peerswarm.swarm.propagator import Propagator


class ExpectationPropagator(Propagator):
    def __init__(self, silent: bool = False) -> None:
        super().__init__(c.PropagationMode.EXPECTATION, silent)

    def run(self, graph: CoauthorGraph, seeds: Mapping[int, int],
            particles_per_seed: int, energy: float, decay: float,
            max_steps: int, rng_seed: int = c.Defaults.SEED,
            stream: int = c.RandomStream.POSITIVE) -> EnergyVector:
        Propagator.check_graph(graph)
        seed_nodes = sorted(node for node, multiplicity in seeds.items()
                            if multiplicity > 0)
        if not seed_nodes:
            raise EmptySeedError("cannot seed swarm from empty seed set")
        graph.check_nodes(seed_nodes)

        mass: np.ndarray = np.zeros(graph.num_nodes, dtype=np.float64)
        for node in seed_nodes:
            mass[node] = seeds[node] * particles_per_seed * energy
        transposed: scipy.sparse.csr_matrix = \
            graph.transition_matrix().transpose().tocsr()

        accumulator: np.ndarray = np.zeros(graph.num_nodes, dtype=np.float64)
        survival: float = 1.0
        for step in range(max_steps):
            accumulator += survival * mass
            if step + 1 < max_steps:
                mass = transposed @ mass
                survival *= 1.0 - decay
        return EnergyVector.from_dense(accumulator)
