"""
peerswarm

Random corpora and random co-authorship graphs for property checks and
timing runs
"""
import logging
import os
import string
from typing import List, Optional, Sequence

import numpy as np
import scipy.sparse

from peerswarm.graph import CoauthorGraph
from peerswarm.model import Corpus
from peerswarm.schema import AuthorKey, ManuscriptRecord


class RandomCorpusGenerator:
    def __init__(self, seed: int = 0, silent: bool = False) -> None:
        self.logger = logging.getLogger(__name__)
        if silent:
            self.logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))
        self.seed: int = seed
        self.rng: np.random.Generator = np.random.default_rng(seed)

    @staticmethod
    def author_key(index: int) -> AuthorKey:
        return AuthorKey("author" + str(index).zfill(7),
                         string.ascii_lowercase[index % 26], "")

    def generate(self, num_manuscripts: int, num_authors: int,
                 min_authors: int = 1, max_authors: int = 5,
                 num_references: int = 5,
                 author_counts: Optional[Sequence[int]] = None) -> Corpus:
        """Draws manuscripts with authors and references from a pool of
        ``num_authors`` authors.

        Args:
            num_manuscripts: number of manuscripts
            num_authors: size of the author pool
            min_authors: fewest authors per manuscript
            max_authors: most authors per manuscript
            num_references: references per manuscript, drawn with
                replacement, so repeated citations occur
            author_counts: if given, author counts are drawn from these
                values instead of the ``min_authors`` to ``max_authors``
                range
        """
        if not 1 <= min_authors <= max_authors <= num_authors:
            raise ValueError("invalid author count range")
        pool: List[AuthorKey] = [RandomCorpusGenerator.author_key(i)
                                 for i in range(num_authors)]
        manuscripts: List[ManuscriptRecord] = []
        for i in range(num_manuscripts):
            if author_counts is not None:
                count: int = int(self.rng.choice(author_counts))
            else:
                count = int(self.rng.integers(min_authors, max_authors + 1))
            author_ids: np.ndarray = self.rng.choice(num_authors, size=count,
                                                     replace=False)
            reference_ids: np.ndarray = self.rng.integers(
                0, num_authors, size=num_references)
            manuscripts.append(ManuscriptRecord(
                "m" + str(i).zfill(7),
                tuple(pool[a] for a in author_ids.tolist()),
                tuple(pool[r] for r in reference_ids.tolist())))
        return Corpus(manuscripts)

    def random_graph(self, num_nodes: int, num_edges: int) -> CoauthorGraph:
        """Normalized graph with about ``num_edges`` undirected edges between
        uniformly drawn node pairs and weights in [0.1, 2.0)."""
        sources: np.ndarray = self.rng.integers(0, num_nodes, size=num_edges)
        targets: np.ndarray = self.rng.integers(0, num_nodes, size=num_edges)
        keep: np.ndarray = sources != targets
        low: np.ndarray = np.minimum(sources[keep], targets[keep])
        high: np.ndarray = np.maximum(sources[keep], targets[keep])
        pair_keys: np.ndarray = np.unique(low * num_nodes + high)
        low, high = pair_keys // num_nodes, pair_keys % num_nodes
        weights: np.ndarray = self.rng.uniform(0.1, 2.0, size=pair_keys.size)
        adjacency: scipy.sparse.csr_matrix = scipy.sparse.coo_matrix(
            (np.concatenate((weights, weights)),
             (np.concatenate((low, high)), np.concatenate((high, low)))),
            shape=(num_nodes, num_nodes)).tocsr()
        adjacency.sort_indices()
        authors: List[AuthorKey] = [RandomCorpusGenerator.author_key(i)
                                    for i in range(num_nodes)]
        graph: CoauthorGraph = CoauthorGraph(authors, adjacency.indptr,
                                             adjacency.indices,
                                             adjacency.data).normalize()
        self.logger.info("generated random graph with %s nodes and %s edges",
                         graph.num_nodes, graph.num_edges)
        return graph
