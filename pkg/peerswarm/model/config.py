"""
peerswarm

Swarm, blackout, evaluation and run configuration, markup language agnostic

"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

import peerswarm.constants as c
from peerswarm.errors import ConfigurationError


@dataclass(frozen=True)
class SwarmConfig:
    particles_per_reference: int = c.Defaults.PARTICLES_PER_REFERENCE
    initial_energy: float = c.Defaults.INITIAL_ENERGY
    decay: float = c.Defaults.DECAY
    max_steps: int = c.Defaults.MAX_STEPS
    rng_seed: int = c.Defaults.SEED
    mode: str = c.Defaults.MODE

    def __post_init__(self) -> None:
        if self.particles_per_reference < 1:
            raise ConfigurationError("particles per reference must be at "
                                     "least 1")
        if not 0.0 <= self.decay <= 1.0:
            raise ConfigurationError("decay must be in [0, 1], got " +
                                     str(self.decay))
        if self.max_steps < 1:
            raise ConfigurationError("max steps must be at least 1")
        if self.initial_energy == 0.0:
            raise ConfigurationError("initial energy must be non-zero")
        if not 0 <= self.rng_seed < 2 ** 64:
            raise ConfigurationError("seed must be a 64-bit unsigned integer")
        if self.mode not in c.PropagationMode.ALL_MODES:
            raise ConfigurationError(
                "invalid propagation mode " + repr(self.mode) + "; valid "
                "modes: " + ", ".join(sorted(c.PropagationMode.ALL_MODES)))

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def __str__(self) -> str:
        str_rep = ["Swarm:\n",
                   "\tMode: ", self.mode, "\n",
                   "\tParticles per reference: ",
                   str(self.particles_per_reference), "\n",
                   "\tInitial energy: ", str(self.initial_energy), "\n",
                   "\tDecay: ", str(self.decay), "\n",
                   "\tMaximum steps: ", str(self.max_steps), "\n",
                   "\tSeed: ", str(self.rng_seed), "\n"]
        return "".join(str_rep)


@dataclass(frozen=True)
class BlackoutConfig:
    """Negative energy swarm launched from the submission authors.

    ``blackout_steps`` counts hops: a depth of ``k`` reaches every node at
    most ``k`` edges away from an author; 0 disables the swarm.
    """
    enabled: bool = False
    blackout_energy: float = c.Defaults.BLACKOUT_ENERGY
    blackout_decay: float = c.Defaults.BLACKOUT_DECAY
    blackout_steps: int = c.Defaults.BLACKOUT_STEPS
    particles_per_author: int = c.Defaults.PARTICLES_PER_AUTHOR

    def __post_init__(self) -> None:
        if self.blackout_energy >= 0.0:
            raise ConfigurationError("blackout energy must be negative, got " +
                                     str(self.blackout_energy))
        if not 0.0 <= self.blackout_decay <= 1.0:
            raise ConfigurationError("blackout decay must be in [0, 1]")
        if self.blackout_steps < 0:
            raise ConfigurationError("blackout steps must be non-negative")
        if self.particles_per_author < 1:
            raise ConfigurationError("particles per author must be at "
                                     "least 1")

    @property
    def active(self) -> bool:
        return self.enabled and self.blackout_steps > 0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def __str__(self) -> str:
        str_rep = ["Blackout:\n",
                   "\tEnabled: ", str(self.enabled), "\n",
                   "\tEnergy: ", str(self.blackout_energy), "\n",
                   "\tDecay: ", str(self.blackout_decay), "\n",
                   "\tSteps: ", str(self.blackout_steps), "\n",
                   "\tParticles per author: ",
                   str(self.particles_per_author), "\n"]
        return "".join(str_rep)


@dataclass(frozen=True)
class EvaluationConfig:
    alpha: float = c.Defaults.ALPHA
    top_n: int = c.Defaults.TOP_N
    exclude_authors: bool = False
    emit_distributions: bool = False
    blackout_sweep: List[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise ConfigurationError("alpha must be in (0, 1)")
        if self.top_n < 1:
            raise ConfigurationError("top n must be at least 1")
        if any(k < 0 for k in self.blackout_sweep):
            raise ConfigurationError("blackout sweep depths must be "
                                     "non-negative")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def __str__(self) -> str:
        str_rep = ["Evaluation:\n",
                   "\tAlpha: ", str(self.alpha), "\n",
                   "\tTop n: ", str(self.top_n), "\n",
                   "\tExclude submission authors: ",
                   str(self.exclude_authors), "\n"]
        if self.blackout_sweep:
            str_rep += ["\tBlackout sweep: ",
                        ", ".join(str(k) for k in self.blackout_sweep), "\n"]
        return "".join(str_rep)


@dataclass(frozen=True)
class RunConfig:
    swarm: SwarmConfig = field(default_factory=SwarmConfig)
    blackout: BlackoutConfig = field(default_factory=BlackoutConfig)
    evaluation: EvaluationConfig = field(default_factory=EvaluationConfig)
    threads: Optional[int] = None

    def snapshot(self) -> Dict[str, Any]:
        """Parameters that determine a ranking. The thread count never
        changes results and is left out; an inactive blackout is recorded
        as None."""
        return {"swarm": self.swarm.to_dict(),
                "blackout": self.blackout.to_dict()
                if self.blackout.active else None,
                "exclude_authors": self.evaluation.exclude_authors}

    def __str__(self) -> str:
        str_rep: List[str] = ["peerswarm run configuration:\n"]
        for section in (self.swarm, self.blackout, self.evaluation):
            str_rep += ["\t" + s + "\n" for s in str(section).splitlines()]
        if self.threads is not None:
            str_rep += ["\tThreads: " + str(self.threads) + "\n"]
        return "".join(str_rep)
