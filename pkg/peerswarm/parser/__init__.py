"""
Parsers for corpus, bid and run configuration files

Classes:
    - :class:`~peerswarm.parser.authornormalizer.AuthorNameNormalizer`: raw author names to canonical author keys
    - :class:`~peerswarm.parser.corpusparser.CorpusParser`: line-delimited JSON manuscript records
    - :class:`~peerswarm.parser.bidparser.BidParser`: tab-separated program committee bids
    - :class:`~peerswarm.parser.runconfigparser.RunConfigParser`: abstract base class for run configuration parsers
    - :class:`~peerswarm.parser.xmlrunconfigparser.XMLRunConfigParser`: implementation of XML-based run configuration parser
    - :class:`~peerswarm.parser.xmlhelper.XMLHelper`: XML helper class
"""
from peerswarm.parser.xmlhelper import XMLHelper
from peerswarm.parser.authornormalizer import AuthorNameNormalizer
from peerswarm.parser.corpusparser import CorpusParser
from peerswarm.parser.bidparser import BidParser
from peerswarm.parser.runconfigparser import RunConfigParser
from peerswarm.parser.xmlrunconfigparser import XMLRunConfigParser
