"""
Writers for corpus and run configuration files

Classes:
    - :class:`~peerswarm.writer.corpuswriter.CorpusWriter`: line-delimited JSON manuscript records
    - :class:`~peerswarm.writer.runconfigwriter.RunConfigWriter`: abstract base class for run configuration writers
    - :class:`~peerswarm.writer.xmlrunconfigwriter.XMLRunConfigWriter`: implementation of XML-based run configuration writer
"""
from peerswarm.writer.corpuswriter import CorpusWriter
from peerswarm.writer.runconfigwriter import RunConfigWriter
from peerswarm.writer.xmlrunconfigwriter import XMLRunConfigWriter
