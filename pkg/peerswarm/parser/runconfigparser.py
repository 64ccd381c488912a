"""
peerswarm

Abstract base class for run configuration file parser
(using Strategy design pattern)

"""
from abc import ABC, abstractmethod
from typing import Optional

from peerswarm.model import BlackoutConfig
from peerswarm.model import EvaluationConfig
from peerswarm.model import RunConfig
from peerswarm.model import SwarmConfig


class RunConfigParser(ABC):
    @abstractmethod
    def get_swarm_config(self) -> SwarmConfig:
        pass

    @abstractmethod
    def get_blackout_config(self) -> BlackoutConfig:
        pass

    @abstractmethod
    def get_evaluation_config(self) -> EvaluationConfig:
        pass

    @abstractmethod
    def get_threads(self) -> Optional[int]:
        pass

    def get_run_config(self) -> RunConfig:
        return RunConfig(self.get_swarm_config(),
                         self.get_blackout_config(),
                         self.get_evaluation_config(),
                         self.get_threads())
