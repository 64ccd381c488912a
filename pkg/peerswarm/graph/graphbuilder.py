"""
peerswarm

Co-authorship network construction: every manuscript with A >= 2 authors
adds weight 1 / (A - 1) to each of its author pairs, single-author
manuscripts only add a node.

Pair contributions are sorted before they are summed, so the resulting
weights are bit-identical for any ordering of the corpus.
"""
import logging
import os
from typing import Dict, List

import numpy as np
import scipy.sparse

from peerswarm.graph.coauthorgraph import CoauthorGraph
from peerswarm.model import Corpus
from peerswarm.schema import AuthorKey


class GraphBuilder:
    def __init__(self, silent: bool = False) -> None:
        self.logger = logging.getLogger(__name__)
        if silent:
            self.logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))

    def build_graph(self, corpus: Corpus) -> CoauthorGraph:
        if len(corpus) == 0:
            raise ValueError("cannot build graph from empty corpus")

        authors: List[AuthorKey] = sorted(corpus.authors())
        node_ids: Dict[AuthorKey, int] = {
            author: node for node, author in enumerate(authors)}
        num_nodes: int = len(authors)

        sources: List[np.ndarray] = []
        targets: List[np.ndarray] = []
        weights: List[np.ndarray] = []
        for manuscript in corpus:
            nodes: np.ndarray = np.unique(np.array(
                [node_ids[a] for a in manuscript.authors], dtype=np.int64))
            num_authors: int = int(nodes.size)
            if num_authors < 2:
                continue
            upper_i, upper_j = np.triu_indices(num_authors, k=1)
            sources.append(nodes[upper_i])
            targets.append(nodes[upper_j])
            weights.append(np.full(upper_i.size, 1.0 / (num_authors - 1)))

        if not sources:
            self.logger.info("corpus has no multi-author manuscripts; "
                             "graph has %s isolated nodes", num_nodes)
            return CoauthorGraph(authors,
                                 np.zeros(num_nodes + 1, dtype=np.int64),
                                 np.zeros(0, dtype=np.int64),
                                 np.zeros(0, dtype=np.float64))

        source: np.ndarray = np.concatenate(sources)
        target: np.ndarray = np.concatenate(targets)
        weight: np.ndarray = np.concatenate(weights)

        pair_keys: np.ndarray = source * num_nodes + target
        order: np.ndarray = np.lexsort((weight, pair_keys))
        pair_keys = pair_keys[order]
        weight = weight[order]
        starts: np.ndarray = np.flatnonzero(
            np.concatenate(([True], pair_keys[1:] != pair_keys[:-1])))
        pair_weights: np.ndarray = np.add.reduceat(weight, starts)
        upper_source: np.ndarray = pair_keys[starts] // num_nodes
        upper_target: np.ndarray = pair_keys[starts] % num_nodes

        adjacency: scipy.sparse.csr_matrix = scipy.sparse.coo_matrix(
            (np.concatenate((pair_weights, pair_weights)),
             (np.concatenate((upper_source, upper_target)),
              np.concatenate((upper_target, upper_source)))),
            shape=(num_nodes, num_nodes)).tocsr()
        adjacency.sort_indices()

        graph: CoauthorGraph = CoauthorGraph(authors, adjacency.indptr,
                                             adjacency.indices,
                                             adjacency.data)
        self.logger.info("built co-authorship graph with %s nodes and %s "
                         "edges from %s manuscripts", graph.num_nodes,
                         graph.num_edges, len(corpus))
        return graph

    @staticmethod
    def normalize(graph: CoauthorGraph) -> CoauthorGraph:
        return graph.normalize()

    def build_normalized_graph(self, corpus: Corpus) -> CoauthorGraph:
        return GraphBuilder.normalize(self.build_graph(corpus))
