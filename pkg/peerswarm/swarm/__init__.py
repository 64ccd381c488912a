"""
Particle swarm propagation

Classes:
    - :class:`~peerswarm.swarm.particle.Particle`: energy, decay and location of a single particle
    - :class:`~peerswarm.swarm.particle.ParticleSwarm`: particle population seeded from a node multiset
    - :class:`~peerswarm.swarm.energyvector.EnergyVector`: sparse per-node energy
    - :class:`~peerswarm.swarm.propagator.Propagator`: abstract base class for propagators
    - :class:`~peerswarm.swarm.montecarlopropagator.MonteCarloPropagator`: sampled particle trajectories
    - :class:`~peerswarm.swarm.expectationpropagator.ExpectationPropagator`: exact expected deposits
    - :class:`~peerswarm.swarm.blackout.Blackout`: negative energy swarm from submission authors
"""
from peerswarm.swarm.particle import Particle
from peerswarm.swarm.particle import ParticleSwarm
from peerswarm.swarm.particle import step_particle
from peerswarm.swarm.energyvector import EnergyVector
from peerswarm.swarm.propagator import Propagator
from peerswarm.swarm.montecarlopropagator import MonteCarloPropagator
from peerswarm.swarm.expectationpropagator import ExpectationPropagator
from peerswarm.swarm.blackout import Blackout
