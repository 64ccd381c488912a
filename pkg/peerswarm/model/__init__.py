"""
Corpus and configuration definitions

Classes:
    - :class:`~peerswarm.model.corpus.Corpus`: manuscript collection
    - :class:`~peerswarm.model.config.SwarmConfig`: positive swarm parameters
    - :class:`~peerswarm.model.config.BlackoutConfig`: negative energy swarm parameters
    - :class:`~peerswarm.model.config.EvaluationConfig`: bid evaluation parameters
    - :class:`~peerswarm.model.config.RunConfig`: complete run configuration
"""
from peerswarm.model.corpus import Corpus
from peerswarm.model.config import SwarmConfig
from peerswarm.model.config import BlackoutConfig
from peerswarm.model.config import EvaluationConfig
from peerswarm.model.config import RunConfig
