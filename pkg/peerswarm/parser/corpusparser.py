"""
peerswarm

Parser for line-delimited JSON manuscript records:

    {"id": "m1", "authors": ["Grace A. Hopper"], "references": ["Alan Turing"]}

One record per line, UTF-8 encoded; blank lines are ignored.
"""
import json
import logging
import os
from typing import Any, Dict, Iterable, List, Set

from peerswarm.errors import CorpusParseError
from peerswarm.errors import DuplicateManuscriptError
from peerswarm.errors import MalformedNameError
from peerswarm.misc import MiscHelper
from peerswarm.model import Corpus
from peerswarm.parser.authornormalizer import AuthorNameNormalizer
from peerswarm.schema import AuthorKey, ManuscriptRecord


class CorpusParser:
    def __init__(self, silent: bool = False) -> None:
        self.logger = logging.getLogger(__name__)
        if silent:
            self.logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))

    def parse_file(self, file_name: str) -> Corpus:
        file_name = MiscHelper.get_valid_file(file_name)
        with open(file_name, "r", encoding="utf-8") as corpus_file:
            corpus: Corpus = self.parse_corpus(corpus_file)
        self.logger.info("parsed %s manuscripts from %s", len(corpus),
                         file_name)
        return corpus

    def parse_corpus(self, stream: Iterable[str]) -> Corpus:
        manuscripts: List[ManuscriptRecord] = []
        seen_ids: Set[str] = set()
        for line_number, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            manuscript: ManuscriptRecord = self.parse_record(line,
                                                             line_number)
            if manuscript.manuscript_id in seen_ids:
                raise DuplicateManuscriptError(
                    "duplicate manuscript ID " +
                    repr(manuscript.manuscript_id), line_number)
            seen_ids.add(manuscript.manuscript_id)
            manuscripts.append(manuscript)
        return Corpus(manuscripts)

    def parse_record(self, line: str, line_number: int = 1) -> ManuscriptRecord:
        try:
            record: Any = json.loads(line)
        except json.JSONDecodeError as exception:
            raise CorpusParseError("invalid JSON: " + exception.msg,
                                   line_number) from exception
        if not isinstance(record, dict):
            raise CorpusParseError("record is not a JSON object", line_number)

        manuscript_id: Any = record.get("id")
        if not isinstance(manuscript_id, str) or not manuscript_id:
            raise CorpusParseError("missing or empty manuscript ID",
                                   line_number)

        raw_authors: List[str] = CorpusParser._read_string_list(
            record, "authors", line_number)
        if not raw_authors:
            raise CorpusParseError("manuscript " + repr(manuscript_id) +
                                   " has no authors", line_number)
        raw_references: List[str] = []
        if "references" in record:
            raw_references = CorpusParser._read_string_list(
                record, "references", line_number)

        authors: List[AuthorKey] = self._normalize_all(raw_authors,
                                                       line_number)
        unique_authors: List[AuthorKey] = list(dict.fromkeys(authors))
        if len(unique_authors) < len(authors):
            self.logger.warning("line %s: manuscript %s lists the same "
                                "author key more than once; duplicates "
                                "collapsed", line_number, manuscript_id)
        references: List[AuthorKey] = self._normalize_all(raw_references,
                                                          line_number)
        return ManuscriptRecord(manuscript_id, tuple(unique_authors),
                                tuple(references))

    @staticmethod
    def _read_string_list(record: Dict[str, Any], field_name: str,
                          line_number: int) -> List[str]:
        values: Any = record.get(field_name)
        if not isinstance(values, list) or \
                not all(isinstance(value, str) for value in values):
            raise CorpusParseError("field " + repr(field_name) +
                                   " must be an array of strings",
                                   line_number)
        return values

    @staticmethod
    def _normalize_all(raw_names: List[str],
                       line_number: int) -> List[AuthorKey]:
        try:
            return [AuthorNameNormalizer.normalize(raw_name)
                    for raw_name in raw_names]
        except MalformedNameError as exception:
            raise CorpusParseError(str(exception), line_number) from exception
