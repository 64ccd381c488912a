"""
peerswarm schema and miscellaneous helper functions

Classes:
    - :class:`~peerswarm.schema.AuthorKey`: (last name, first initial, middle initial) author identity (named tuple)
    - :class:`~peerswarm.schema.ManuscriptRecord`: manuscript ID, authors, referenced authors (data class)
    - :class:`~peerswarm.schema.SeedSet`: resolved seed nodes with multiplicities, missing authors (named tuple)
    - :class:`~peerswarm.schema.RankingEntry`: (author, raw energy, membership) tuple (named tuple)
    - :class:`~peerswarm.schema.BidRecord`: (member, manuscript ID, bid code) tuple (named tuple)
    - :class:`~peerswarm.schema.KSResult`: (D, p) tuple of a two-sample Kolmogorov-Smirnov test (named tuple)
    - :class:`~peerswarm.schema.CoverageStats`: referenced authors found and missing in a graph (named tuple)
    - :class:`~peerswarm.schema.OrderingVerdict`: verdict of the bid category ordering check (named tuple)
    - :class:`~peerswarm.misc.MiscHelper`: miscellaneous helper functions
"""
from peerswarm.schema import AuthorKey
from peerswarm.schema import ManuscriptRecord
from peerswarm.schema import SeedSet
from peerswarm.schema import RankingEntry
from peerswarm.schema import BidRecord
from peerswarm.schema import KSResult
from peerswarm.schema import CoverageStats
from peerswarm.schema import OrderingVerdict
from peerswarm.schema import SessionInfo
from peerswarm.misc import MiscHelper
__version__ = "0.1.0"
