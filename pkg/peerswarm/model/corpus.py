"""
peerswarm

Manuscript collection: the set of manuscripts the co-authorship network is
built from and swarms are seeded from

"""
from __future__ import annotations

from typing import Dict, Iterator, List, Optional, Set

from peerswarm.errors import DuplicateManuscriptError
from peerswarm.schema import AuthorKey, ManuscriptRecord


class Corpus:
    def __init__(self, manuscripts: Optional[List[ManuscriptRecord]] = None) -> None:
        self.manuscripts: List[ManuscriptRecord] = list(manuscripts or [])
        self._by_id: Dict[str, ManuscriptRecord] = dict()
        for manuscript in self.manuscripts:
            if manuscript.manuscript_id in self._by_id:
                raise DuplicateManuscriptError(
                    "duplicate manuscript ID: " + manuscript.manuscript_id)
            self._by_id[manuscript.manuscript_id] = manuscript

    def __len__(self) -> int:
        return len(self.manuscripts)

    def __iter__(self) -> Iterator[ManuscriptRecord]:
        return iter(self.manuscripts)

    def __contains__(self, manuscript_id: str) -> bool:
        return manuscript_id in self._by_id

    def __eq__(self, other) -> bool:
        if not isinstance(other, Corpus):
            return NotImplemented
        return self.manuscripts == other.manuscripts

    def get(self, manuscript_id: str) -> Optional[ManuscriptRecord]:
        return self._by_id.get(manuscript_id)

    def ids(self) -> List[str]:
        return [m.manuscript_id for m in self.manuscripts]

    def authors(self) -> Set[AuthorKey]:
        return {author for m in self.manuscripts for author in m.authors}

    def referenced_authors(self) -> Set[AuthorKey]:
        return {author for m in self.manuscripts
                for author in m.referenced_authors}

    @property
    def num_references(self) -> int:
        return sum(len(m.referenced_authors) for m in self.manuscripts)

    def __str__(self) -> str:
        str_rep: List[str] = ["Corpus:\n",
                              "\tManuscripts: " + str(len(self)) + "\n",
                              "\tDistinct authors: " +
                              str(len(self.authors())) + "\n",
                              "\tReferences: " +
                              str(self.num_references) + "\n",
                              "\tDistinct referenced authors: " +
                              str(len(self.referenced_authors())) + "\n"]
        return "".join(str_rep)
