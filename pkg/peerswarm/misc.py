"""
Miscellaneous helper functions

Classes:
    - :class:`MiscHelper`: contains static helper functions
"""
import os
import sys
from typing import Optional

import numpy as np
import scipy

from peerswarm.constants import Defaults
from peerswarm.errors import ConfigurationError
from peerswarm.schema import SessionInfo


class MiscHelper:
    """
    Class with miscellaneous helper functions as static methods
    """

    @staticmethod
    def prepare_path(path: str, allow_exists: bool = True) -> str:
        path = path.replace("\\", "/").replace("//", "/").strip()
        if not path.endswith("/"):
            path += "/"

        if os.path.exists(path):
            if not os.path.isdir(path):
                raise FileExistsError("directory cannot be created "
                                      "(file with same name exists): " + path)
            if not allow_exists and len(os.listdir(path)) > 0:
                raise FileExistsError("directory cannot be created "
                                      "(non-empty folder with same "
                                      "name exists): " + path)
        else:
            os.makedirs(path)

        return path

    @staticmethod
    def read_config_file(file_name: str) -> str:
        with open(MiscHelper.get_valid_file(file_name),
                  encoding="utf-8") as f:
            config: str = f.read()
        return config

    @staticmethod
    def get_valid_file(data_file: str) -> str:
        data_file = data_file.replace("\\", "/").replace("//", "/").strip()
        if os.path.isfile(data_file):
            return data_file
        else:
            raise FileNotFoundError("file does not exist: " + data_file)

    @staticmethod
    def resolve_thread_count(threads: Optional[int] = None) -> int:
        if threads is None:
            env_value: str = os.environ.get(Defaults.THREADS_ENV_VAR, "1")
            try:
                threads = int(env_value)
            except ValueError:
                raise ConfigurationError(
                    Defaults.THREADS_ENV_VAR + " must be an integer, got " +
                    repr(env_value))
        if threads < 1:
            raise ConfigurationError("thread count must be positive")
        return threads

    @staticmethod
    def get_session_info() -> SessionInfo:
        import peerswarm  # pylint: disable=import-outside-toplevel
        return SessionInfo(peerswarm.__version__, np.version.version,
                           scipy.__version__, sys.version)

    @staticmethod
    def write_session_info(output_dir: str) -> None:
        info: SessionInfo = MiscHelper.get_session_info()
        with open(os.path.join(output_dir, "session-info.txt"), "w") as f:
            f.write("peerswarm package version: " +
                    info.peerswarm_version + "\n")
            f.write("NumPy version: " + info.numpy_version + "\n")
            f.write("SciPy version: " + info.scipy_version + "\n")
            f.write("Python version: " + info.python_version + "\n")
