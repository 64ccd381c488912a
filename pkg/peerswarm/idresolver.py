"""
peerswarm

Resolves propagation mode IDs to propagator instances
"""
from typing import Optional

import peerswarm.constants as c
from peerswarm.errors import ConfigurationError
from peerswarm.swarm import ExpectationPropagator
from peerswarm.swarm import MonteCarloPropagator
from peerswarm.swarm import Propagator


class IdResolver:
    @staticmethod
    def get_propagator(mode: str, threads: Optional[int] = None,
                       silent: bool = False) -> Propagator:
        if mode == c.PropagationMode.MONTE_CARLO:
            return MonteCarloPropagator(threads, silent=silent)
        elif mode == c.PropagationMode.EXPECTATION:
            return ExpectationPropagator(silent=silent)
        else:
            raise ConfigurationError(
                "invalid propagation mode " + repr(mode) + "; valid modes: " +
                ", ".join(sorted(c.PropagationMode.ALL_MODES)))
