"""
peerswarm

Ranked referee candidates of one manuscript

Entries are sorted by raw energy descending, ties by author key ascending;
membership is raw energy divided by the largest raw energy.
"""
from __future__ import annotations

import json
from typing import Any, Dict, List, Optional

from peerswarm.schema import AuthorKey, RankingEntry


class RefereeRanking:
    def __init__(self, manuscript_id: str, entries: List[RankingEntry],
                 config: Optional[Dict[str, Any]] = None,
                 missing: Optional[List[AuthorKey]] = None) -> None:
        self.manuscript_id: str = manuscript_id
        self.entries: List[RankingEntry] = list(entries)
        self.config: Dict[str, Any] = dict(config or {})
        self.missing: List[AuthorKey] = list(missing or [])
        self._membership: Dict[AuthorKey, float] = {
            entry.author: entry.membership for entry in self.entries}

    @staticmethod
    def from_raw_energies(manuscript_id: str,
                          energies: List[RankingEntry],
                          config: Optional[Dict[str, Any]] = None,
                          missing: Optional[List[AuthorKey]] = None
                          ) -> RefereeRanking:
        """Sorts and re-normalizes entries; only the ``raw_energy`` field of
        the given entries is used. Without a positive entry the ranking is
        empty."""
        positive: List[RankingEntry] = [e for e in energies
                                        if e.raw_energy > 0.0]
        positive.sort(key=lambda e: (-e.raw_energy, e.author))
        entries: List[RankingEntry] = []
        if positive:
            maximum: float = positive[0].raw_energy
            entries = [RankingEntry(e.author, e.raw_energy,
                                    e.raw_energy / maximum)
                       for e in positive]
        return RefereeRanking(manuscript_id, entries, config, missing)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, author: AuthorKey) -> bool:
        return author in self._membership

    def membership(self, author: AuthorKey) -> float:
        return self._membership.get(author, 0.0)

    def authors(self) -> List[AuthorKey]:
        return [entry.author for entry in self.entries]

    def top(self, n: int) -> List[RankingEntry]:
        return self.entries[:n]

    def to_dict(self) -> Dict[str, Any]:
        return {"manuscript_id": self.manuscript_id,
                "config": self.config,
                "missing_authors": [a.render() for a in self.missing],
                "entries": [{"author": e.author.render(),
                             "raw_energy": e.raw_energy,
                             "membership": e.membership}
                            for e in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def write_json(self, file_name: str) -> None:
        with open(file_name, "w", encoding="utf-8") as ranking_file:
            ranking_file.write(self.to_json())

    def __str__(self) -> str:
        str_rep = ["Referee ranking for manuscript ", self.manuscript_id,
                   ":\n",
                   "\tCandidates: ", str(len(self)), "\n",
                   "\tReferenced authors not in graph: ",
                   str(len(self.missing)), "\n"]
        for rank, entry in enumerate(self.entries[:10], start=1):
            str_rep += ["\t", str(rank), ". ", entry.author.render(), " (",
                        "{:.6f}".format(entry.membership), ")\n"]
        if len(self) > 10:
            str_rep += ["\t...\n"]
        return "".join(str_rep)
