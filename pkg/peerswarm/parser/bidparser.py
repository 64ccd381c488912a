"""
peerswarm

Parser for program committee bid files, one tab-separated record per line:

    member_name<TAB>manuscript_id<TAB>bid_code

Blank lines and lines starting with ``#`` are ignored.
"""
import logging
import os
from typing import Dict, Iterable, List, Tuple

import peerswarm.constants as c
from peerswarm.errors import BidParseError
from peerswarm.errors import MalformedNameError
from peerswarm.misc import MiscHelper
from peerswarm.parser.authornormalizer import AuthorNameNormalizer
from peerswarm.schema import AuthorKey, BidRecord


class BidParser:
    def __init__(self, silent: bool = False) -> None:
        self.logger = logging.getLogger(__name__)
        if silent:
            self.logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))

    def parse_file(self, file_name: str) -> List[BidRecord]:
        file_name = MiscHelper.get_valid_file(file_name)
        with open(file_name, "r", encoding="utf-8") as bid_file:
            bids: List[BidRecord] = self.parse_bids(bid_file)
        self.logger.info("parsed %s bids from %s", len(bids), file_name)
        return bids

    def parse_bids(self, stream: Iterable[str]) -> List[BidRecord]:
        bids: List[BidRecord] = []
        first_line: Dict[Tuple[AuthorKey, str], int] = dict()
        for line_number, line in enumerate(stream, start=1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            columns: List[str] = line.split("\t")
            if len(columns) != 3:
                raise BidParseError("expected 3 tab-separated columns, "
                                    "found " + str(len(columns)),
                                    line_number)
            member_name, manuscript_id, bid_code = \
                [column.strip() for column in columns]
            try:
                member: AuthorKey = AuthorNameNormalizer.normalize(
                    member_name)
            except MalformedNameError as exception:
                raise BidParseError(str(exception),
                                    line_number) from exception
            if not manuscript_id:
                raise BidParseError("empty manuscript ID", line_number)
            try:
                bid: int = int(bid_code)
            except ValueError:
                bid = -1
            if bid not in c.BidCode.ALL_BIDS:
                raise BidParseError("invalid bid code " + repr(bid_code) +
                                    "; valid codes: 1, 2, 3, 4", line_number)

            pair: Tuple[AuthorKey, str] = (member, manuscript_id)
            if pair in first_line:
                raise BidParseError(
                    "second bid of " + member.render() + " on manuscript " +
                    manuscript_id + " (first on line " +
                    str(first_line[pair]) + ")", line_number)
            first_line[pair] = line_number
            bids.append(BidRecord(member, manuscript_id, bid))
        return bids
