from typing import FrozenSet, List


class PropagationMode:
    MONTE_CARLO: str = "monte-carlo"
    EXPECTATION: str = "expectation"
    ALL_MODES: FrozenSet[str] = frozenset([MONTE_CARLO, EXPECTATION])


class BidCode:
    EXPERT_WANTS_TO_REVIEW: int = 1
    EXPERT: int = 2
    NON_EXPERT: int = 3
    CONFLICT_OF_INTEREST: int = 4
    ALL_BIDS: List[int] = [EXPERT_WANTS_TO_REVIEW, EXPERT, NON_EXPERT,
                           CONFLICT_OF_INTEREST]
    DESCRIPTIONS = {
        EXPERT_WANTS_TO_REVIEW: "expert, wants to review",
        EXPERT: "expert",
        NON_EXPERT: "non-expert",
        CONFLICT_OF_INTEREST: "conflict of interest"}


class RandomStream:
    """spawn_key prefixes that keep swarms on disjoint random streams"""
    POSITIVE: int = 0
    BLACKOUT: int = 1


class ExitCode:
    SUCCESS: int = 0
    IO_ERROR: int = 1
    USAGE: int = 2
    PARSE_ERROR: int = 3
    NO_SEEDS: int = 4
    NO_ENERGY: int = 5
    INCONSISTENT: int = 6
    GRAPH_FORMAT: int = 7


class Defaults:
    PARTICLES_PER_REFERENCE: int = 100
    INITIAL_ENERGY: float = 1.0
    DECAY: float = 0.15
    MAX_STEPS: int = 100
    SEED: int = 0
    MODE: str = PropagationMode.MONTE_CARLO
    BLACKOUT_ENERGY: float = -1000.0
    BLACKOUT_DECAY: float = 0.0
    BLACKOUT_STEPS: int = 2
    PARTICLES_PER_AUTHOR: int = 100
    ALPHA: float = 0.05
    TOP_N: int = 5
    # fixed so that Monte Carlo results do not depend on the thread count
    BLOCK_SIZE: int = 8192
    THREADS_ENV_VAR: str = "PEERSWARM_THREADS"


class Subcommand:
    BUILD_GRAPH: str = "build-graph"
    RANK: str = "rank"
    EVALUATE: str = "evaluate"
    SIMULATE: str = "simulate"
