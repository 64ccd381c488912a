"""
peerswarm exceptions

Classes:
    - :class:`PeerSwarmError`: root of all peerswarm exceptions
    - :class:`MalformedNameError`: author name cannot be normalized
    - :class:`CorpusParseError`: malformed corpus line
    - :class:`DuplicateManuscriptError`: manuscript ID used twice
    - :class:`BidParseError`: malformed bid line
    - :class:`GraphFormatError`: graph file has wrong magic or version
    - :class:`GraphCorruptionError`: graph file truncated or inconsistent
    - :class:`UnknownNodeError`: node ID not in graph
    - :class:`EmptySeedError`: swarm seeded with nothing
    - :class:`NoSeedsError`: no referenced author of a manuscript is in the graph
    - :class:`NoEnergyError`: energy vector has no positive entry
    - :class:`EmptySampleError`: statistical test on an empty sample
    - :class:`InconsistentDataError`: bids and corpus disagree
    - :class:`ConfigurationError`: invalid parameter
"""
from typing import Iterable, List, Optional


class PeerSwarmError(Exception):
    pass


class MalformedNameError(PeerSwarmError):
    pass


class CorpusParseError(PeerSwarmError):
    def __init__(self, message: str,
                 line_number: Optional[int] = None) -> None:
        self.line_number: Optional[int] = line_number
        if line_number is not None:
            message = "line " + str(line_number) + ": " + message
        super().__init__(message)


class DuplicateManuscriptError(CorpusParseError):
    pass


class BidParseError(CorpusParseError):
    pass


class GraphFormatError(PeerSwarmError):
    pass


class GraphCorruptionError(GraphFormatError):
    pass


class UnknownNodeError(PeerSwarmError):
    pass


class EmptySeedError(PeerSwarmError):
    pass


class NoSeedsError(PeerSwarmError):
    pass


class NoEnergyError(PeerSwarmError):
    pass


class EmptySampleError(PeerSwarmError):
    pass


class InconsistentDataError(PeerSwarmError):
    def __init__(self, message: str, offenders: Iterable[str] = ()) -> None:
        self.offenders: List[str] = sorted(set(offenders))
        if self.offenders:
            message += ": " + ", ".join(self.offenders)
        super().__init__(message)


class ConfigurationError(PeerSwarmError):
    pass
