"""
peerswarm

Records shared across corpus, graph, swarm, referee and evaluator packages
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple


class AuthorKey(NamedTuple):
    """Canonical author identity: last name, first initial, middle initial.

    Two raw name strings that agree on these three parts (after
    case-folding) are the same author. Tuple ordering is used for all
    deterministic tie-breaking.
    """
    last_name: str
    first_initial: str = ""
    middle_initial: str = ""

    def render(self) -> str:
        parts: List[str] = [p for p in (self.first_initial,
                                        self.middle_initial,
                                        self.last_name) if p]
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class ManuscriptRecord:
    manuscript_id: str
    authors: Tuple[AuthorKey, ...]
    # one entry per citing reference, repeats allowed
    referenced_authors: Tuple[AuthorKey, ...] = ()

    @property
    def num_authors(self) -> int:
        return len(self.authors)

    def reference_counts(self) -> Dict[AuthorKey, int]:
        counts: Dict[AuthorKey, int] = dict()
        for author in self.referenced_authors:
            counts[author] = counts.get(author, 0) + 1
        return counts


class SeedSet(NamedTuple):
    # node id -> reference multiplicity
    resolved: Dict[int, int]
    missing: List[AuthorKey]

    @property
    def num_references(self) -> int:
        return sum(self.resolved.values())


class RankingEntry(NamedTuple):
    author: AuthorKey
    raw_energy: float
    membership: float


class BidRecord(NamedTuple):
    member: AuthorKey
    manuscript_id: str
    bid: int


class KSResult(NamedTuple):
    statistic: float
    p_value: float


class CoverageStats(NamedTuple):
    distinct_found: int
    distinct_missing: int
    references_found: int
    references_missing: int

    @property
    def distinct_fraction(self) -> float:
        total: int = self.distinct_found + self.distinct_missing
        return self.distinct_found / total if total else 0.0


class SessionInfo(NamedTuple):
    peerswarm_version: str
    numpy_version: str
    scipy_version: str
    python_version: str


class OrderingVerdict(NamedTuple):
    # None when a bid category has no samples
    holds: Optional[bool]
    reason: str

    @property
    def label(self) -> str:
        if self.holds is None:
            return "inconclusive"
        return "holds" if self.holds else "fails"
