"""
peerswarm

Abstract base class for run configuration file writer
"""
from abc import ABC, abstractmethod

from peerswarm.model import RunConfig


class RunConfigWriter(ABC):
    @staticmethod
    @abstractmethod
    def write_run_config_to_file(run_config: RunConfig, file_name: str):
        pass
