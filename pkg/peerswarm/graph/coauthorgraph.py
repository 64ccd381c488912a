"""
peerswarm

Weighted undirected co-authorship network in compressed sparse row layout

Node IDs are dense indices into the node table, which is sorted by author
key. Each node's adjacency slice ``indptr[l]:indptr[l + 1]`` lists its
neighbors in ascending order together with the raw co-authorship weight and,
once normalized, the transition probability of the edge.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np
import scipy.sparse
from scipy.sparse.csgraph import dijkstra

from peerswarm.errors import UnknownNodeError
from peerswarm.model import Corpus
from peerswarm.schema import AuthorKey, CoverageStats


class CoauthorGraph:
    def __init__(self, authors: Sequence[AuthorKey], indptr: np.ndarray,
                 indices: np.ndarray, raw_weights: np.ndarray,
                 probabilities: Optional[np.ndarray] = None) -> None:
        self.authors: List[AuthorKey] = list(authors)
        self.indptr: np.ndarray = np.asarray(indptr, dtype=np.int64)
        self.indices: np.ndarray = np.asarray(indices, dtype=np.int64)
        self.raw_weights: np.ndarray = np.asarray(raw_weights,
                                                  dtype=np.float64)
        self.probabilities: Optional[np.ndarray] = None
        if probabilities is not None:
            self.probabilities = np.asarray(probabilities, dtype=np.float64)
        self._node_ids: Dict[AuthorKey, int] = {
            author: node for node, author in enumerate(self.authors)}
        self._cumulative: Optional[np.ndarray] = None

    @property
    def num_nodes(self) -> int:
        return len(self.authors)

    @property
    def num_directed_edges(self) -> int:
        return int(self.indices.size)

    @property
    def num_edges(self) -> int:
        """undirected edges, each pair counted once"""
        return self.num_directed_edges // 2

    @property
    def is_normalized(self) -> bool:
        return self.probabilities is not None

    def __contains__(self, author: AuthorKey) -> bool:
        return author in self._node_ids

    def __len__(self) -> int:
        return self.num_nodes

    def get_node(self, author: AuthorKey) -> Optional[int]:
        return self._node_ids.get(author)

    def node_id(self, author: AuthorKey) -> int:
        node: Optional[int] = self._node_ids.get(author)
        if node is None:
            raise UnknownNodeError("author not in graph: " + author.render())
        return node

    def author(self, node: int) -> AuthorKey:
        self.check_nodes([node])
        return self.authors[node]

    def check_nodes(self, nodes: Iterable[int]) -> None:
        unknown: List[int] = [node for node in nodes
                              if not 0 <= node < self.num_nodes]
        if unknown:
            raise UnknownNodeError("node IDs not in graph: " +
                                   ", ".join(str(n) for n in unknown))

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def out_degree(self, node: int) -> int:
        self.check_nodes([node])
        return int(self.indptr[node + 1] - self.indptr[node])

    def neighbors(self, node: int) -> np.ndarray:
        self.check_nodes([node])
        return self.indices[self.indptr[node]:self.indptr[node + 1]]

    def raw_weight(self, source: int, target: int) -> float:
        start, end = self.indptr[source], self.indptr[source + 1]
        position: int = int(np.searchsorted(self.indices[start:end], target))
        if position < end - start and \
                self.indices[start + position] == target:
            return float(self.raw_weights[start + position])
        return 0.0

    def probability(self, source: int, target: int) -> float:
        if self.probabilities is None:
            raise ValueError("graph is not normalized")
        start, end = self.indptr[source], self.indptr[source + 1]
        position: int = int(np.searchsorted(self.indices[start:end], target))
        if position < end - start and \
                self.indices[start + position] == target:
            return float(self.probabilities[start + position])
        return 0.0

    def normalize(self) -> CoauthorGraph:
        degrees: np.ndarray = self.degrees()
        row_sums: np.ndarray = np.zeros(self.num_nodes, dtype=np.float64)
        non_isolated: np.ndarray = degrees > 0
        if self.raw_weights.size:
            row_sums[non_isolated] = np.add.reduceat(
                self.raw_weights, self.indptr[:-1][non_isolated])
        probabilities: np.ndarray = self.raw_weights / \
            np.repeat(row_sums, degrees)
        return CoauthorGraph(self.authors, self.indptr, self.indices,
                             self.raw_weights, probabilities)

    def weight_matrix(self) -> scipy.sparse.csr_matrix:
        return scipy.sparse.csr_matrix(
            (self.raw_weights, self.indices, self.indptr),
            shape=(self.num_nodes, self.num_nodes))

    def transition_matrix(self) -> scipy.sparse.csr_matrix:
        if self.probabilities is None:
            raise ValueError("graph is not normalized")
        return scipy.sparse.csr_matrix(
            (self.probabilities, self.indices, self.indptr),
            shape=(self.num_nodes, self.num_nodes))

    def cumulative_probabilities(self) -> np.ndarray:
        # row index plus within-row cumulative probability, so one sorted
        # array serves inverse transform sampling for every node
        if self._cumulative is None:
            if self.probabilities is None:
                raise ValueError("graph is not normalized")
            degrees: np.ndarray = self.degrees()
            running: np.ndarray = np.cumsum(self.probabilities)
            row_offsets: np.ndarray = np.concatenate(([0.0], running))[
                self.indptr[:-1]]
            within_row: np.ndarray = running - np.repeat(row_offsets, degrees)
            row_ends: np.ndarray = self.indptr[1:][degrees > 0] - 1
            within_row[row_ends] = 1.0
            rows: np.ndarray = np.repeat(
                np.arange(self.num_nodes, dtype=np.float64), degrees)
            self._cumulative = rows + within_row
        return self._cumulative

    def sample_neighbors(self, locations: np.ndarray,
                         uniforms: np.ndarray) -> Tuple[np.ndarray,
                                                        np.ndarray]:
        """Draws the next node for every particle from the outgoing
        distribution of its current node.

        Args:
            locations: current node of each particle
            uniforms: one draw from [0, 1) per particle

        Returns:
            next locations (unchanged at sinks) and a boolean mask that
            is False where the current node has no outgoing edges
        """
        starts: np.ndarray = self.indptr[locations]
        ends: np.ndarray = self.indptr[locations + 1]
        moved: np.ndarray = ends > starts
        if not moved.any():
            return locations.copy(), moved
        cumulative: np.ndarray = self.cumulative_probabilities()
        positions: np.ndarray = np.searchsorted(
            cumulative, locations + uniforms, side="right")
        positions = np.minimum(np.maximum(positions, starts), ends - 1)
        positions = np.where(moved, positions, 0)
        return np.where(moved, self.indices[positions], locations), moved

    def neighborhood(self, seeds: Iterable[int], radius: int) -> Set[int]:
        if radius < 0:
            raise ValueError("radius must be non-negative")
        seed_list: List[int] = sorted(set(int(s) for s in seeds))
        self.check_nodes(seed_list)
        if not seed_list or radius == 0:
            return set(seed_list)
        distances: np.ndarray = dijkstra(self.weight_matrix(),
                                         directed=False,
                                         indices=seed_list,
                                         unweighted=True,
                                         limit=radius + 0.5,
                                         min_only=True)
        return set(np.flatnonzero(distances <= radius).tolist())

    def coverage(self, corpus: Corpus) -> CoverageStats:
        referenced: Set[AuthorKey] = corpus.referenced_authors()
        distinct_found: int = sum(1 for a in referenced if a in self)
        references_found: int = sum(1 for m in corpus
                                    for a in m.referenced_authors
                                    if a in self)
        return CoverageStats(distinct_found,
                             len(referenced) - distinct_found,
                             references_found,
                             corpus.num_references - references_found)

    def summary(self) -> Dict[str, int]:
        return {"nodes": self.num_nodes,
                "undirected_edges": self.num_edges,
                "directed_edges": self.num_directed_edges,
                "isolated_nodes": int(np.count_nonzero(self.degrees() == 0))}

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoauthorGraph):
            return NotImplemented
        if self.authors != other.authors or \
                (self.probabilities is None) != (other.probabilities is None):
            return False
        arrays_equal: bool = np.array_equal(self.indptr, other.indptr) and \
            np.array_equal(self.indices, other.indices) and \
            np.array_equal(self.raw_weights, other.raw_weights)
        if self.probabilities is not None:
            arrays_equal = arrays_equal and \
                np.array_equal(self.probabilities, other.probabilities)
        return arrays_equal

    def __str__(self) -> str:
        summary: Dict[str, int] = self.summary()
        str_rep = ["Co-authorship graph:\n",
                   "\tNodes: ", str(summary["nodes"]), "\n",
                   "\tEdges (undirected): ",
                   str(summary["undirected_edges"]), "\n",
                   "\tEdges (directed): ", str(summary["directed_edges"]),
                   "\n",
                   "\tIsolated nodes: ", str(summary["isolated_nodes"]), "\n",
                   "\tNormalized: ", str(self.is_normalized), "\n"]
        return "".join(str_rep)
