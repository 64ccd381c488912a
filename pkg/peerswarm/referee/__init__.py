"""
Referee identification

Classes:
    - :class:`~peerswarm.referee.refereefinder.RefereeFinder`: seed set, swarm and blackout pipeline
    - :class:`~peerswarm.referee.refereeranking.RefereeRanking`: ranked referee candidates of one manuscript
"""
from peerswarm.referee.refereeranking import RefereeRanking
from peerswarm.referee.refereefinder import RefereeFinder
