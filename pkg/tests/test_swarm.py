import numpy as np
import pytest

from conftest import make_corpus, make_graph
from peerswarm import MiscHelper
from peerswarm.errors import ConfigurationError
from peerswarm.errors import EmptySeedError
from peerswarm.errors import NoEnergyError
from peerswarm.errors import UnknownNodeError
from peerswarm.graph import GraphBuilder
from peerswarm.idresolver import IdResolver
from peerswarm.model import SwarmConfig
from peerswarm.simulator import RandomCorpusGenerator
from peerswarm.swarm import EnergyVector
from peerswarm.swarm import ExpectationPropagator
from peerswarm.swarm import MonteCarloPropagator
from peerswarm.swarm import Particle
from peerswarm.swarm import ParticleSwarm
from peerswarm.swarm import step_particle


def geometric_deposit(energy, decay, steps):
    return sum(energy * (1.0 - decay) ** t for t in range(steps))


def brute_force_deposits(graph, seeds, particles_per_seed, energy, decay,
                         steps):
    dense = np.zeros(graph.num_nodes)

    def walk(node, step, weight):
        dense[node] += weight * energy * (1.0 - decay) ** step
        if step + 1 == steps:
            return
        for neighbor in graph.neighbors(node).tolist():
            walk(neighbor, step + 1,
                 weight * graph.probability(node, neighbor))

    for node, multiplicity in seeds.items():
        walk(node, 0, multiplicity * particles_per_seed)
    return dense


def deposit_variance(graph, seeds, particles_per_seed, energy, decay, steps):
    """Exact variance of each node's Monte Carlo total."""
    transition = graph.transition_matrix().toarray()
    powers = [np.eye(graph.num_nodes)]
    for _ in range(1, steps):
        powers.append(powers[-1] @ transition)
    # returns[m, v]: probability of being back on v after m moves
    returns = np.stack([np.diag(power) for power in powers])
    weights = energy * (1.0 - decay) ** np.arange(steps)

    variance = np.zeros(graph.num_nodes)
    for node, multiplicity in seeds.items():
        occupancy = np.stack([power[node] for power in powers])
        mean = weights @ occupancy
        second = (weights ** 2) @ occupancy
        for t in range(steps):
            for u in range(t + 1, steps):
                second += 2.0 * weights[t] * weights[u] * occupancy[t] * \
                    returns[u - t]
        variance += multiplicity * particles_per_seed * np.clip(
            second - mean ** 2, 0.0, None)
    return variance


def connected_seeds(graph, count, seed):
    candidates = np.flatnonzero(graph.degrees() > 0)
    chosen = np.random.default_rng(seed).choice(candidates, size=count,
                                                replace=False)
    return {int(node): 1 + i % 2 for i, node in enumerate(sorted(chosen))}


def test_energy_after_one_hundred_decays():
    assert 0.85 ** 100 == pytest.approx(8.74e-8, rel=1e-3)


def test_total_deposit_over_one_hundred_steps(two_node_graph):
    energy = ExpectationPropagator(silent=True).run(
        two_node_graph, {0: 1}, 1, 1.0, 0.15, 100, 0)
    assert energy.total() == pytest.approx((1.0 - 0.85 ** 100) / 0.15,
                                           rel=1e-12)


def test_seed_particles(triangle_graph):
    swarm = ParticleSwarm.seed_particles({2: 1, 0: 2, 1: 0}, 3, 1.5, 0.15,
                                         triangle_graph)
    assert len(swarm) == 9
    assert swarm.locations.tolist() == [0] * 6 + [2] * 3
    assert np.all(swarm.energies == 1.5)
    assert np.all(swarm.decays == 0.15)
    assert swarm.particles_per_node() == {0: 6, 2: 3}
    assert swarm.particles()[0] == Particle(1.5, 0.15, 0)


def test_seed_particles_errors(triangle_graph):
    with pytest.raises(EmptySeedError):
        ParticleSwarm.seed_particles({}, 10, 1.0, 0.15, triangle_graph)
    with pytest.raises(EmptySeedError):
        ParticleSwarm.seed_particles({0: 0}, 10, 1.0, 0.15, triangle_graph)
    with pytest.raises(UnknownNodeError):
        ParticleSwarm.seed_particles({7: 1}, 10, 1.0, 0.15, triangle_graph)


def test_step_particle(two_node_graph):
    accumulator = dict()
    rng = np.random.default_rng(0)
    particle = step_particle(Particle(1.0, 0.15, 0), two_node_graph, rng,
                             accumulator)
    assert accumulator == {0: 1.0}
    assert particle.location == 1
    assert particle.energy == pytest.approx(0.85)
    assert particle.is_alive

    particle = step_particle(particle, two_node_graph, rng, accumulator)
    assert accumulator[1] == pytest.approx(0.85)
    assert particle.location == 0
    assert particle.energy == pytest.approx(0.85 ** 2)


def test_step_particle_dies_at_sink():
    graph = make_graph([["a", "b"], ["c"]])
    accumulator = {2: 0.5}
    particle = step_particle(Particle(1.0, 0.15, 2), graph,
                             np.random.default_rng(0), accumulator)
    assert accumulator == {2: 1.5}
    assert not particle.is_alive


@pytest.mark.parametrize("propagator", [MonteCarloPropagator(1, silent=True),
                                        ExpectationPropagator(silent=True)])
def test_forced_path(two_node_graph, propagator):
    energy = propagator.run(two_node_graph, {0: 1}, 1, 1.0, 0.15, 4, 0)
    assert energy[0] == pytest.approx(1.0 + 0.85 ** 2, rel=1e-12)
    assert energy[1] == pytest.approx(0.85 + 0.85 ** 3, rel=1e-12)


@pytest.mark.parametrize("propagator", [MonteCarloPropagator(1, silent=True),
                                        ExpectationPropagator(silent=True)])
def test_locality(path_graph, propagator):
    energy = propagator.run(path_graph, {0: 1}, 50, 1.0, 0.15, 3, 0)
    assert set(energy.nodes.tolist()) <= {0, 1, 2}
    assert 0 in energy and 1 in energy


@pytest.mark.parametrize("propagator", [MonteCarloPropagator(1, silent=True),
                                        ExpectationPropagator(silent=True)])
def test_full_decay_deposits_only_at_seeds(triangle_graph, propagator):
    energy = propagator.run(triangle_graph, {1: 2}, 10, 1.0, 1.0, 100, 0)
    assert energy.to_dict() == {1: 20.0}


def test_seed_at_sink_deposits_once():
    graph = make_graph([["a", "b"], ["c"]])
    for propagator in (MonteCarloPropagator(1, silent=True),
                       ExpectationPropagator(silent=True)):
        energy = propagator.run(graph, {2: 1}, 5, 1.0, 0.15, 100, 0)
        assert energy.to_dict() == {2: 5.0}


def test_negative_swarm(path_graph):
    energy = MonteCarloPropagator(1, silent=True).run(
        path_graph, {2: 1}, 20, -1000.0, 0.0, 2, 0)
    assert np.all(energy.values < 0.0)
    assert energy.total() == pytest.approx(-40000.0)


@pytest.mark.parametrize("seed", range(20))
def test_conservation_on_sink_free_graphs(seed):
    generator = RandomCorpusGenerator(seed, silent=True)
    graph = generator.random_graph(int(generator.rng.integers(20, 201)), 400)
    seeds = connected_seeds(graph, 5, seed)
    num_particles = 10 * sum(seeds.values())
    expected = num_particles * geometric_deposit(1.0, 0.15, 30)

    monte_carlo = MonteCarloPropagator(1, silent=True).run(
        graph, seeds, 10, 1.0, 0.15, 30, seed)
    expectation = ExpectationPropagator(silent=True).run(
        graph, seeds, 10, 1.0, 0.15, 30)
    assert monte_carlo.total() == pytest.approx(expected, rel=1e-9)
    assert expectation.total() == pytest.approx(expected, rel=1e-9)


@pytest.mark.parametrize("seed", range(10))
def test_monte_carlo_matches_expectation(seed):
    generator = RandomCorpusGenerator(100 + seed, silent=True)
    graph = generator.random_graph(int(generator.rng.integers(10, 51)), 80)
    seeds = connected_seeds(graph, 2, seed)
    steps = int(generator.rng.integers(2, 21))
    decay = 0.15

    monte_carlo = MonteCarloPropagator(2, silent=True).run(
        graph, seeds, 100000, 1.0, decay, steps, seed).to_dense(
            graph.num_nodes)
    expectation = ExpectationPropagator(silent=True).run(
        graph, seeds, 100000, 1.0, decay, steps).to_dense(graph.num_nodes)

    standard_error = np.sqrt(deposit_variance(graph, seeds, 100000, 1.0,
                                              decay, steps))
    assert np.all(np.abs(monte_carlo - expectation) <=
                  5.0 * standard_error + 1e-9 * expectation.max())
    assert np.all(expectation[monte_carlo > 0.0] > 0.0)


@pytest.mark.parametrize("seed", range(10))
def test_expectation_matches_trajectory_enumeration(seed):
    generator = RandomCorpusGenerator(200 + seed, silent=True)
    graph = generator.random_graph(int(generator.rng.integers(2, 6)), 6)
    seeds = {int(node): 1 for node in range(graph.num_nodes)
             if node % 2 == 0}
    steps = int(generator.rng.integers(1, 7))

    expectation = ExpectationPropagator(silent=True).run(
        graph, seeds, 3, 1.0, 0.15, steps)
    reference = brute_force_deposits(graph, seeds, 3, 1.0, 0.15, steps)
    assert np.allclose(expectation.to_dense(graph.num_nodes), reference,
                       rtol=0.0, atol=1e-12)


def test_monte_carlo_independent_of_thread_count():
    graph = RandomCorpusGenerator(9, silent=True).random_graph(500, 2000)
    seeds = connected_seeds(graph, 10, 9)
    results = [MonteCarloPropagator(threads, block_size=256,
                                    silent=True).run(
        graph, seeds, 300, 1.0, 0.15, 100, 42) for threads in (1, 3, 4)]
    assert results[0] == results[1] == results[2]


def test_monte_carlo_seeds_and_streams(triangle_graph):
    propagator = MonteCarloPropagator(1, silent=True)
    first = propagator.run(triangle_graph, {0: 1}, 100, 1.0, 0.15, 100, 5)
    assert propagator.run(triangle_graph, {0: 1}, 100, 1.0, 0.15, 100,
                          5) == first
    assert propagator.run(triangle_graph, {0: 1}, 100, 1.0, 0.15, 100,
                          6) != first
    assert propagator.run(triangle_graph, {0: 1}, 100, 1.0, 0.15, 100, 5,
                          stream=1) != first


def test_propagate_uses_swarm_config(triangle_graph):
    config = SwarmConfig(particles_per_reference=4, initial_energy=2.0,
                         decay=0.5, max_steps=3, mode="expectation")
    energy = ExpectationPropagator(silent=True).propagate(
        triangle_graph, {0: 1}, config)
    assert energy.total() == pytest.approx(4 * 2.0 * (1 + 0.5 + 0.25))


def test_unnormalized_graph_rejected():
    graph = GraphBuilder(silent=True).build_graph(make_corpus([["a", "b"]]))
    with pytest.raises(ValueError):
        ExpectationPropagator(silent=True).run(graph, {0: 1}, 1, 1.0, 0.15,
                                               10)


def test_energy_vector():
    vector = EnergyVector.from_dict({4: 0.5, 1: 2.0, 3: 0.0, 2: 2.0})
    assert vector.nodes.tolist() == [1, 2, 4]
    assert len(vector) == 3
    assert vector[3] == 0.0
    assert 4 in vector and 3 not in vector
    assert vector.total() == 4.5
    assert vector.max() == 2.0
    assert vector.ranked_nodes().tolist() == [1, 2, 4]
    assert vector.normalize().to_dict() == {1: 1.0, 2: 1.0, 4: 0.25}
    assert vector.to_dense(5).tolist() == [0.0, 2.0, 2.0, 0.0, 0.5]
    assert EnergyVector.from_dense(vector.to_dense(5)) == vector

    other = EnergyVector.from_dict({1: -3.0, 2: -2.0, 0: 1.0})
    combined = vector.add(other)
    assert combined.to_dict() == {0: 1.0, 1: -1.0, 4: 0.5}
    assert combined.positive().to_dict() == {0: 1.0, 4: 0.5}


def test_energy_vector_without_positive_entries():
    with pytest.raises(NoEnergyError):
        EnergyVector.empty().normalize()
    with pytest.raises(NoEnergyError):
        EnergyVector.from_dict({0: -1.0}).normalize()
    with pytest.raises(NoEnergyError):
        EnergyVector.empty().max()


def test_thread_count(monkeypatch):
    monkeypatch.delenv("PEERSWARM_THREADS", raising=False)
    assert MiscHelper.resolve_thread_count() == 1
    monkeypatch.setenv("PEERSWARM_THREADS", "3")
    assert MiscHelper.resolve_thread_count() == 3
    assert MiscHelper.resolve_thread_count(2) == 2
    monkeypatch.setenv("PEERSWARM_THREADS", "many")
    with pytest.raises(ConfigurationError):
        MiscHelper.resolve_thread_count()
    with pytest.raises(ConfigurationError):
        MiscHelper.resolve_thread_count(0)


def test_id_resolver():
    assert isinstance(IdResolver.get_propagator("expectation", silent=True),
                      ExpectationPropagator)
    propagator = IdResolver.get_propagator("monte-carlo", 2, silent=True)
    assert isinstance(propagator, MonteCarloPropagator)
    assert propagator.threads == 2
    with pytest.raises(ConfigurationError):
        IdResolver.get_propagator("random")
