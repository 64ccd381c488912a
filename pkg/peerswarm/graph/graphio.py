"""
peerswarm

Binary persistence of normalized co-authorship graphs

Layout (all numbers little-endian):
    - header: magic ``PSWG`` (4 bytes), format version (uint16),
      node count N (uint64), undirected edge count E (uint64)
    - node table, N entries in node ID order: last name, first initial,
      middle initial, each a uint32 byte length followed by UTF-8 bytes
    - row pointers: N + 1 uint64 values
    - adjacency: 2E packed records of neighbor node ID (uint32), raw weight
      (float64) and transition probability (float64)
"""
import logging
import os
import struct
from typing import BinaryIO, List

import numpy as np

from peerswarm.errors import GraphCorruptionError, GraphFormatError
from peerswarm.graph.coauthorgraph import CoauthorGraph
from peerswarm.schema import AuthorKey


class GraphIO:
    MAGIC: bytes = b"PSWG"
    VERSION: int = 1
    HEADER = struct.Struct("<4sHQQ")
    LENGTH = struct.Struct("<I")
    INDPTR_DTYPE = np.dtype("<u8")
    ADJACENCY_DTYPE = np.dtype([("neighbor", "<u4"), ("raw", "<f8"),
                                ("prob", "<f8")])

    def __init__(self, silent: bool = False) -> None:
        self.logger = logging.getLogger(__name__)
        if silent:
            self.logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))

    def save_graph(self, graph: CoauthorGraph, sink: BinaryIO) -> None:
        if not graph.is_normalized:
            raise GraphFormatError("only normalized graphs can be saved")
        sink.write(GraphIO.HEADER.pack(GraphIO.MAGIC, GraphIO.VERSION,
                                       graph.num_nodes, graph.num_edges))
        for author in graph.authors:
            for part in author:
                encoded: bytes = part.encode("utf-8")
                sink.write(GraphIO.LENGTH.pack(len(encoded)))
                sink.write(encoded)
        sink.write(graph.indptr.astype(GraphIO.INDPTR_DTYPE).tobytes())
        adjacency: np.ndarray = np.empty(graph.num_directed_edges,
                                         dtype=GraphIO.ADJACENCY_DTYPE)
        adjacency["neighbor"] = graph.indices
        adjacency["raw"] = graph.raw_weights
        adjacency["prob"] = graph.probabilities
        sink.write(adjacency.tobytes())

    def save_graph_to_file(self, graph: CoauthorGraph, file_name: str) -> None:
        with open(file_name, "wb") as graph_file:
            self.save_graph(graph, graph_file)
        self.logger.info("saved graph with %s nodes to %s", graph.num_nodes,
                         file_name)

    def load_graph(self, source: BinaryIO) -> CoauthorGraph:
        data: bytes = source.read()
        if not data:
            raise GraphFormatError("empty graph file")
        if len(data) < len(GraphIO.MAGIC) or \
                data[:len(GraphIO.MAGIC)] != GraphIO.MAGIC:
            raise GraphFormatError("not a peerswarm graph file (bad magic "
                                   "bytes)")
        if len(data) < GraphIO.HEADER.size:
            raise GraphCorruptionError("truncated graph file header")
        _, version, num_nodes, num_edges = GraphIO.HEADER.unpack_from(data)
        if version != GraphIO.VERSION:
            raise GraphFormatError("unsupported graph format version " +
                                   str(version) + ", expected " +
                                   str(GraphIO.VERSION))

        offset: int = GraphIO.HEADER.size
        authors: List[AuthorKey] = []
        for _ in range(num_nodes):
            parts: List[str] = []
            for _ in range(3):
                if offset + GraphIO.LENGTH.size > len(data):
                    raise GraphCorruptionError("truncated node table")
                (length,) = GraphIO.LENGTH.unpack_from(data, offset)
                offset += GraphIO.LENGTH.size
                if offset + length > len(data):
                    raise GraphCorruptionError("truncated node table")
                try:
                    parts.append(data[offset:offset + length].decode("utf-8"))
                except UnicodeDecodeError as exception:
                    raise GraphCorruptionError(
                        "invalid author name encoding") from exception
                offset += length
            authors.append(AuthorKey(*parts))

        indptr_size: int = (num_nodes + 1) * GraphIO.INDPTR_DTYPE.itemsize
        adjacency_size: int = 2 * num_edges * GraphIO.ADJACENCY_DTYPE.itemsize
        expected_size: int = offset + indptr_size + adjacency_size
        if len(data) < expected_size:
            raise GraphCorruptionError("truncated graph file: expected " +
                                       str(expected_size) + " bytes, found " +
                                       str(len(data)))
        if len(data) > expected_size:
            raise GraphCorruptionError("trailing bytes after adjacency data")

        indptr: np.ndarray = np.frombuffer(
            data, dtype=GraphIO.INDPTR_DTYPE, count=num_nodes + 1,
            offset=offset).astype(np.int64)
        offset += indptr_size
        adjacency: np.ndarray = np.frombuffer(
            data, dtype=GraphIO.ADJACENCY_DTYPE, count=2 * num_edges,
            offset=offset)

        if indptr[0] != 0 or indptr[-1] != 2 * num_edges or \
                np.any(np.diff(indptr) < 0):
            raise GraphCorruptionError("inconsistent row pointers")
        indices: np.ndarray = adjacency["neighbor"].astype(np.int64)
        if indices.size and indices.max() >= num_nodes:
            raise GraphCorruptionError("neighbor ID out of range")

        graph: CoauthorGraph = CoauthorGraph(
            authors, indptr, indices, adjacency["raw"].astype(np.float64),
            adjacency["prob"].astype(np.float64))
        return graph

    def load_graph_from_file(self, file_name: str) -> CoauthorGraph:
        with open(file_name, "rb") as graph_file:
            graph: CoauthorGraph = self.load_graph(graph_file)
        self.logger.info("loaded graph with %s nodes and %s edges from %s",
                         graph.num_nodes, graph.num_edges, file_name)
        return graph
