"""
peerswarm

Sparse per-node energy accumulator

Classes:
    - :class:`EnergyVector`: node IDs and accumulated energies, zero entries
      dropped, nodes in ascending order
"""
from __future__ import annotations

import math
from typing import Dict, IO, Iterator, List, Mapping, Tuple

import numpy as np

from peerswarm.errors import NoEnergyError
from peerswarm.schema import AuthorKey


class EnergyVector:
    def __init__(self, nodes: np.ndarray, values: np.ndarray) -> None:
        nodes = np.asarray(nodes, dtype=np.int64)
        values = np.asarray(values, dtype=np.float64)
        if nodes.shape != values.shape:
            raise ValueError("nodes and values differ in length")
        if nodes.size and np.unique(nodes).size != nodes.size:
            raise ValueError("duplicate node IDs in energy vector")
        order: np.ndarray = np.argsort(nodes, kind="stable")
        nodes, values = nodes[order], values[order]
        nonzero: np.ndarray = values != 0.0
        self._nodes: np.ndarray = nodes[nonzero]
        self._values: np.ndarray = values[nonzero]
        self._nodes.flags.writeable = False
        self._values.flags.writeable = False

    @classmethod
    def empty(cls) -> EnergyVector:
        return cls(np.zeros(0, dtype=np.int64), np.zeros(0))

    @classmethod
    def from_dense(cls, dense: np.ndarray) -> EnergyVector:
        nodes: np.ndarray = np.flatnonzero(dense)
        return cls(nodes, dense[nodes])

    @classmethod
    def from_dict(cls, energies: Mapping[int, float]) -> EnergyVector:
        nodes: List[int] = list(energies.keys())
        return cls(np.array(nodes, dtype=np.int64),
                   np.array([energies[n] for n in nodes], dtype=np.float64))

    @property
    def nodes(self) -> np.ndarray:
        return self._nodes

    @property
    def values(self) -> np.ndarray:
        return self._values

    def __len__(self) -> int:
        return int(self._nodes.size)

    def __contains__(self, node: int) -> bool:
        position: int = int(np.searchsorted(self._nodes, node))
        return position < self._nodes.size and self._nodes[position] == node

    def __getitem__(self, node: int) -> float:
        position: int = int(np.searchsorted(self._nodes, node))
        if position < self._nodes.size and self._nodes[position] == node:
            return float(self._values[position])
        return 0.0

    def __iter__(self) -> Iterator[Tuple[int, float]]:
        return zip(self._nodes.tolist(), self._values.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, EnergyVector):
            return NotImplemented
        return np.array_equal(self._nodes, other._nodes) and \
            np.array_equal(self._values, other._values)

    def to_dict(self) -> Dict[int, float]:
        return dict(iter(self))

    def to_dense(self, num_nodes: int) -> np.ndarray:
        dense: np.ndarray = np.zeros(num_nodes, dtype=np.float64)
        dense[self._nodes] = self._values
        return dense

    def total(self) -> float:
        return math.fsum(self._values.tolist())

    def max(self) -> float:
        if not self._values.size:
            raise NoEnergyError("energy vector is empty")
        return float(self._values.max())

    def add(self, other: EnergyVector) -> EnergyVector:
        nodes: np.ndarray = np.union1d(self._nodes, other._nodes)
        values: np.ndarray = np.zeros(nodes.size, dtype=np.float64)
        values[np.searchsorted(nodes, self._nodes)] += self._values
        values[np.searchsorted(nodes, other._nodes)] += other._values
        return EnergyVector(nodes, values)

    def clamp(self, minimum: float = 0.0) -> EnergyVector:
        keep: np.ndarray = self._values > minimum
        return EnergyVector(self._nodes[keep], self._values[keep])

    def positive(self) -> EnergyVector:
        return self.clamp(0.0)

    def normalize(self) -> EnergyVector:
        """Divides every entry by the maximum entry.

        Raises:
            NoEnergyError: no strictly positive entry, so no referee
                candidate was reached
        """
        if not self._values.size or self._values.max() <= 0.0:
            raise NoEnergyError("no node received positive energy")
        return EnergyVector(self._nodes, self._values / self._values.max())

    def ranked_nodes(self) -> np.ndarray:
        # node IDs follow author key order, so the secondary key on node ID
        # breaks ties by author key
        order: np.ndarray = np.lexsort((self._nodes, -self._values))
        return self._nodes[order]

    def write_tsv(self, sink: IO[str], authors: List[AuthorKey]) -> None:
        for node in self.ranked_nodes().tolist():
            sink.write(authors[node].render() + "\t" +
                       repr(self[node]) + "\n")

    def __str__(self) -> str:
        str_rep = ["Energy vector:\n",
                   "\tNon-zero entries: ", str(len(self)), "\n"]
        if len(self):
            str_rep += ["\tTotal energy: ", str(self.total()), "\n",
                        "\tMaximum energy: ", str(self.max()), "\n"]
        return "".join(str_rep)
