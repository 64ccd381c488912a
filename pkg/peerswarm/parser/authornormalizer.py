"""
peerswarm

Author name normalization: raw bibliographic name strings to canonical
(last name, first initial, middle initial) keys

Token rules:
    - "Last, First Middle" is reordered to "First Middle Last"
    - tokens are split on whitespace, leading and trailing punctuation is
      stripped, empty tokens are dropped
    - the last token is the last name
    - the first token yields the first initial (if there are at least
      two tokens)
    - with exactly three tokens the middle token yields the middle initial,
      with more than three tokens the second-to-last token does
"""
import re
from typing import List

from peerswarm.errors import MalformedNameError
from peerswarm.schema import AuthorKey


class AuthorNameNormalizer:
    _EDGE_PUNCTUATION = re.compile(r"^[\W_]+|[\W_]+$")

    @staticmethod
    def normalize(raw: str) -> AuthorKey:
        if raw is None or not raw.strip():
            raise MalformedNameError("empty author name")

        name: str = raw.strip().casefold()
        if "," in name:
            last, _, rest = name.partition(",")
            name = rest + " " + last

        tokens: List[str] = AuthorNameNormalizer._tokenize(name)
        if not tokens:
            raise MalformedNameError("author name without letters: " +
                                     repr(raw))

        last_name: str = tokens[-1]
        first_initial: str = ""
        middle_initial: str = ""
        if len(tokens) >= 2:
            first_initial = AuthorNameNormalizer._initial(tokens[0])
        if len(tokens) == 3:
            middle_initial = AuthorNameNormalizer._initial(tokens[1])
        elif len(tokens) > 3:
            middle_initial = AuthorNameNormalizer._initial(tokens[-2])

        return AuthorKey(last_name, first_initial, middle_initial)

    @staticmethod
    def _tokenize(name: str) -> List[str]:
        tokens: List[str] = []
        for token in name.split():
            token = AuthorNameNormalizer._EDGE_PUNCTUATION.sub("", token)
            if token:
                tokens.append(token)
        return tokens

    @staticmethod
    def _initial(token: str) -> str:
        for character in token:
            if character.isalnum():
                return character
        return ""
