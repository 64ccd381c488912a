"""
Co-authorship network

Classes:
    - :class:`~peerswarm.graph.coauthorgraph.CoauthorGraph`: weighted undirected author graph in CSR layout
    - :class:`~peerswarm.graph.graphbuilder.GraphBuilder`: builds the graph from a corpus
    - :class:`~peerswarm.graph.graphio.GraphIO`: versioned binary graph files
"""
from peerswarm.graph.coauthorgraph import CoauthorGraph
from peerswarm.graph.graphbuilder import GraphBuilder
from peerswarm.graph.graphio import GraphIO
