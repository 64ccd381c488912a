"""
peerswarm

Writes a corpus as line-delimited JSON manuscript records, the format read
by :class:`~peerswarm.parser.corpusparser.CorpusParser`
"""
import json
from typing import Any, Dict, IO

from peerswarm.model import Corpus
from peerswarm.schema import ManuscriptRecord


class CorpusWriter:
    @staticmethod
    def to_record(manuscript: ManuscriptRecord) -> Dict[str, Any]:
        return {"id": manuscript.manuscript_id,
                "authors": [a.render() for a in manuscript.authors],
                "references": [a.render()
                               for a in manuscript.referenced_authors]}

    @staticmethod
    def write_corpus(corpus: Corpus, sink: IO[str]) -> None:
        for manuscript in corpus:
            sink.write(json.dumps(CorpusWriter.to_record(manuscript),
                                  ensure_ascii=False) + "\n")

    @staticmethod
    def write_corpus_to_file(corpus: Corpus, file_name: str) -> None:
        with open(file_name, "w", encoding="utf-8") as corpus_file:
            CorpusWriter.write_corpus(corpus, corpus_file)
