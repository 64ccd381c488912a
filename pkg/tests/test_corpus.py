import io
import logging

import pytest

from peerswarm.errors import BidParseError
from peerswarm.errors import CorpusParseError
from peerswarm.errors import DuplicateManuscriptError
from peerswarm.errors import MalformedNameError
from peerswarm.parser import AuthorNameNormalizer
from peerswarm.parser import BidParser
from peerswarm.parser import CorpusParser
from peerswarm.schema import AuthorKey, BidRecord
from peerswarm.writer import CorpusWriter


@pytest.mark.parametrize("raw, expected", [
    ("Grace A. Hopper", AuthorKey("hopper", "g", "a")),
    ("Hopper, Grace A.", AuthorKey("hopper", "g", "a")),
    ("G. A. HOPPER", AuthorKey("hopper", "g", "a")),
    ("A. Turing", AuthorKey("turing", "a", "")),
    ("Turing", AuthorKey("turing", "", "")),
    ("Johannes Van der Waals", AuthorKey("waals", "j", "d")),
    ("  Alan   Turing  ", AuthorKey("turing", "a", "")),
])
def test_normalize_author_name(raw, expected):
    assert AuthorNameNormalizer.normalize(raw) == expected


@pytest.mark.parametrize("raw", ["", "   ", "...", ", ."])
def test_normalize_rejects_names_without_letters(raw):
    with pytest.raises(MalformedNameError):
        AuthorNameNormalizer.normalize(raw)


@pytest.mark.parametrize("author", [AuthorKey("hopper", "g", "a"),
                                    AuthorKey("turing", "a", ""),
                                    AuthorKey("turing", "", "")])
def test_rendered_key_normalizes_to_itself(author):
    assert AuthorNameNormalizer.normalize(author.render()) == author


def test_parse_corpus():
    lines = [
        '{"id": "m1", "authors": ["Grace A. Hopper", "Alan Turing"], '
        '"references": ["A. Turing", "Turing, Alan", "J. Van der Waals"]}',
        "",
        '{"id": "m2", "authors": ["Alan Turing"]}',
    ]
    corpus = CorpusParser(silent=True).parse_corpus(lines)

    assert len(corpus) == 2
    assert corpus.ids() == ["m1", "m2"]
    m1 = corpus.get("m1")
    assert m1.num_authors == 2
    assert m1.reference_counts() == {AuthorKey("turing", "a", ""): 2,
                                     AuthorKey("waals", "j", "d"): 1}
    assert corpus.get("m2").referenced_authors == ()
    assert corpus.num_references == 3
    assert corpus.get("m3") is None


def test_duplicate_authors_collapsed(caplog):
    line = '{"id": "m1", "authors": ["A. Turing", "Alan Turing", "A. Smith"]}'
    with caplog.at_level(logging.WARNING):
        manuscript = CorpusParser().parse_record(line, 7)
    assert manuscript.authors == (AuthorKey("turing", "a", ""),
                                  AuthorKey("smith", "a", ""))
    assert "duplicates collapsed" in caplog.text


@pytest.mark.parametrize("line", [
    '{"id": "m1", "authors": ["A. Smith"]',
    '["m1"]',
    '{"authors": ["A. Smith"]}',
    '{"id": "m1", "authors": []}',
    '{"id": "m1", "authors": "A. Smith"}',
    '{"id": "m1", "authors": ["A. Smith"], "references": [1]}',
    '{"id": "m1", "authors": ["..."]}',
])
def test_malformed_records(line):
    with pytest.raises(CorpusParseError) as exception:
        CorpusParser(silent=True).parse_corpus(
            ['{"id": "m0", "authors": ["B. Jones"]}', line])
    assert exception.value.line_number == 2
    assert str(exception.value).startswith("line 2: ")


def test_duplicate_manuscript_id():
    with pytest.raises(DuplicateManuscriptError) as exception:
        CorpusParser(silent=True).parse_corpus(
            ['{"id": "m1", "authors": ["A. Smith"]}',
             '{"id": "m1", "authors": ["B. Jones"]}'])
    assert exception.value.line_number == 2


def test_missing_corpus_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        CorpusParser(silent=True).parse_file(str(tmp_path / "missing.jsonl"))


def test_corpus_round_trip(tmp_path):
    lines = [
        '{"id": "m1", "authors": ["Grace A. Hopper", "Alan Turing"], '
        '"references": ["A. Turing", "A. Turing", "Waals"]}',
        '{"id": "m2", "authors": ["José Müller"], "references": []}',
    ]
    corpus = CorpusParser(silent=True).parse_corpus(lines)

    sink = io.StringIO()
    CorpusWriter.write_corpus(corpus, sink)
    assert CorpusParser(silent=True).parse_corpus(
        sink.getvalue().splitlines()) == corpus

    file_name = str(tmp_path / "corpus.jsonl")
    CorpusWriter.write_corpus_to_file(corpus, file_name)
    assert CorpusParser(silent=True).parse_file(file_name) == corpus


def test_parse_bids():
    lines = ["# member\tmanuscript\tbid",
             "Alan Turing\tm1\t1",
             "",
             "Hopper, Grace A.\tm1\t4\n"]
    bids = BidParser(silent=True).parse_bids(lines)
    assert bids == [BidRecord(AuthorKey("turing", "a", ""), "m1", 1),
                    BidRecord(AuthorKey("hopper", "g", "a"), "m1", 4)]


@pytest.mark.parametrize("line", [
    "Alan Turing\tm1",
    "Alan Turing\tm1\t1\textra",
    "Alan Turing\tm1\t5",
    "Alan Turing\tm1\tone",
    "Alan Turing\t\t1",
    "...\tm1\t1",
])
def test_malformed_bids(line):
    with pytest.raises(BidParseError) as exception:
        BidParser(silent=True).parse_bids(["A. Smith\tm1\t3", line])
    assert exception.value.line_number == 2


def test_second_bid_on_same_manuscript():
    with pytest.raises(BidParseError) as exception:
        BidParser(silent=True).parse_bids(["A. Turing\tm1\t1",
                                           "Alan Turing\tm1\t2"])
    assert "first on line 1" in str(exception.value)
