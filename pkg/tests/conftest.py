import os
from typing import List, Sequence

import pytest

from peerswarm.graph import CoauthorGraph
from peerswarm.graph import GraphBuilder
from peerswarm.model import Corpus
from peerswarm.schema import AuthorKey, ManuscriptRecord


def key(name: str) -> AuthorKey:
    return AuthorKey(name)


def make_corpus(author_lists: Sequence[Sequence[str]],
                references: Sequence[Sequence[str]] = ()) -> Corpus:
    manuscripts: List[ManuscriptRecord] = []
    for i, authors in enumerate(author_lists):
        cited: Sequence[str] = references[i] if i < len(references) else ()
        manuscripts.append(ManuscriptRecord(
            "m" + str(i + 1), tuple(key(a) for a in authors),
            tuple(key(r) for r in cited)))
    return Corpus(manuscripts)


def make_graph(author_lists: Sequence[Sequence[str]]) -> CoauthorGraph:
    return GraphBuilder(silent=True).build_normalized_graph(
        make_corpus(author_lists))


@pytest.fixture
def triangle_graph() -> CoauthorGraph:
    return make_graph([["a", "b"], ["b", "c"], ["a", "c"]])


@pytest.fixture
def path_graph() -> CoauthorGraph:
    return make_graph([["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"]])


@pytest.fixture
def star_graph() -> CoauthorGraph:
    # hub with four leaves, "far" hangs off leaf1
    return make_graph([["hub", "leaf1"], ["hub", "leaf2"], ["hub", "leaf3"],
                       ["hub", "leaf4"], ["leaf1", "far"]])


@pytest.fixture
def two_node_graph() -> CoauthorGraph:
    return make_graph([["a", "b"]])


def pytest_collection_modifyitems(config, items):
    if os.environ.get("PEERSWARM_RUN_SLOW") == "1":
        return
    skip_slow = pytest.mark.skip(reason="set PEERSWARM_RUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
