import pytest

import peerswarm.constants as c
from conftest import key, make_corpus, make_graph
from peerswarm.errors import ConfigurationError
from peerswarm.evaluator import BidEvaluator
from peerswarm.evaluator import BlackoutSweep
from peerswarm.graph import GraphBuilder
from peerswarm.model import RunConfig
from peerswarm.model import SwarmConfig
from peerswarm.parser import BidParser
from peerswarm.parser import CorpusParser
from peerswarm.referee import RefereeFinder
from peerswarm.schema import BidRecord
from peerswarm.simulator import PlantedCommunityGenerator
from peerswarm.simulator import RandomCorpusGenerator


@pytest.fixture(scope="module")
def bundle():
    return PlantedCommunityGenerator(seed=3, silent=True).generate()


@pytest.fixture(scope="module")
def finder(bundle):
    graph = GraphBuilder(silent=True).build_normalized_graph(bundle.corpus)
    return RefereeFinder(graph, RunConfig(swarm=SwarmConfig(
        mode=c.PropagationMode.EXPECTATION)), silent=True)


def test_random_corpus_is_reproducible():
    first = RandomCorpusGenerator(seed=1, silent=True).generate(50, 30)
    second = RandomCorpusGenerator(seed=1, silent=True).generate(50, 30)
    other = RandomCorpusGenerator(seed=2, silent=True).generate(50, 30)
    assert first == second
    assert first != other
    assert len(first) == 50
    assert all(1 <= m.num_authors <= 5 for m in first)
    assert all(len(m.referenced_authors) == 5 for m in first)


def test_random_corpus_author_counts():
    corpus = RandomCorpusGenerator(seed=4, silent=True).generate(
        40, 20, author_counts=[2, 7])
    assert {m.num_authors for m in corpus} <= {2, 7}
    with pytest.raises(ValueError):
        RandomCorpusGenerator(silent=True).generate(5, 3, 2, 4)


def test_random_graph():
    first = RandomCorpusGenerator(seed=9, silent=True).random_graph(200, 600)
    second = RandomCorpusGenerator(seed=9, silent=True).random_graph(200, 600)
    assert first == second
    assert first.is_normalized
    assert first.num_nodes == 200
    assert 0 < first.num_edges <= 600


def test_planted_bundle_sizes(bundle):
    assert len(bundle.submission_ids) == 40
    assert len(set(bundle.submission_ids)) == 40
    # 1 clique, 4 expert papers and 4 records per submission for each topic
    assert len(bundle.corpus) == 10 * (1 + 4 + 4 * 4)
    assert len(bundle.bids) == 40 * (10 * 4 + 1 + 2)
    members = {b.member for b in bundle.bids}
    assert len(members) >= 50
    codes = [b.bid for b in bundle.bids]
    assert codes.count(c.BidCode.EXPERT_WANTS_TO_REVIEW) == 80
    assert codes.count(c.BidCode.EXPERT) == 80
    assert codes.count(c.BidCode.CONFLICT_OF_INTEREST) == 40


def test_planted_bundle_is_reproducible(bundle):
    again = PlantedCommunityGenerator(seed=3, silent=True).generate()
    assert again.corpus == bundle.corpus
    assert again.bids == bundle.bids
    assert again.submission_ids == bundle.submission_ids


@pytest.mark.parametrize("parameters", [
    {"topics": 0}, {"submissions_per_topic": 0}, {"cited_per_topic": 1},
    {"experts_per_topic": 3}, {"experts_per_topic": 0}])
def test_planted_invalid_parameters(parameters):
    with pytest.raises(ConfigurationError):
        PlantedCommunityGenerator(silent=True, **parameters)


def test_planted_bundle_write(tmp_path, bundle):
    generator = PlantedCommunityGenerator(seed=3, silent=True)
    generator.write(bundle, str(tmp_path / "bundle"))
    corpus = CorpusParser(silent=True).parse_file(
        str(tmp_path / "bundle" / "corpus.jsonl"))
    bids = BidParser(silent=True).parse_file(
        str(tmp_path / "bundle" / "bids.txt"))
    assert corpus == bundle.corpus
    assert bids == bundle.bids


def test_planted_ordering_holds(bundle, finder):
    rankings, skipped = finder.rank_corpus(bundle.corpus,
                                           bundle.submission_ids)
    assert skipped == []
    report = BidEvaluator(silent=True).evaluate(
        rankings, bundle.bids, finder.graph, bundle.corpus.ids(), skipped)
    assert report.verdict.holds is True
    # experts of a topic are structurally identical
    assert report.ks_statistics[0, 1] == 0.0
    assert report.recall[c.BidCode.EXPERT_WANTS_TO_REVIEW] == 1.0
    assert report.recall[c.BidCode.NON_EXPERT] == 0.0
    assert report.recall[c.BidCode.CONFLICT_OF_INTEREST] == 1.0
    assert len(report.members_not_in_graph) == 2


def test_planted_blackout_sweep(bundle, finder):
    df = BlackoutSweep(finder, BidEvaluator(silent=True),
                       silent=True).sweep(bundle.corpus, bundle.bids, [0, 2])
    recall = {(row.blackout_steps, row.bid): row.recall
              for row in df.itertuples()}
    assert recall[(0, c.BidCode.CONFLICT_OF_INTEREST)] == 1.0
    assert recall[(2, c.BidCode.CONFLICT_OF_INTEREST)] == 0.0
    for depth in (0, 2):
        assert recall[(depth, c.BidCode.EXPERT_WANTS_TO_REVIEW)] == 1.0
        assert recall[(depth, c.BidCode.EXPERT)] == 1.0
    assert df.shape == (8, 6)


def test_blackout_sweep_counts_emptied_manuscripts():
    # every swarm node of m1 lies within two hops of its author s1
    graph = make_graph([["s1", "k1"], ["s1", "c1"], ["c1", "e1"],
                        ["s2", "k2"], ["s2", "x"], ["x", "y"], ["y", "c2"],
                        ["c2", "e2"]])
    corpus = make_corpus([["s1"], ["s2"]], [["c1"], ["c2"]])
    bids = [BidRecord(key(member), manuscript_id, bid)
            for member, manuscript_id, bid in [
                ("e1", "m1", c.BidCode.EXPERT_WANTS_TO_REVIEW),
                ("k1", "m1", c.BidCode.CONFLICT_OF_INTEREST),
                ("e2", "m2", c.BidCode.EXPERT_WANTS_TO_REVIEW),
                ("k2", "m2", c.BidCode.CONFLICT_OF_INTEREST),
                ("e1", "m2", c.BidCode.NON_EXPERT)]]
    finder = RefereeFinder(graph, RunConfig(swarm=SwarmConfig(
        mode=c.PropagationMode.EXPECTATION)), silent=True)

    df = BlackoutSweep(finder, BidEvaluator(silent=True),
                       silent=True).sweep(corpus, bids, [0, 2])
    rows = {(row["blackout_steps"], row["bid"]): row
            for row in df.to_dict("records")}
    for bid in c.BidCode.ALL_BIDS:
        assert rows[(0, bid)]["count"] == rows[(2, bid)]["count"]
    assert rows[(2, c.BidCode.EXPERT_WANTS_TO_REVIEW)]["count"] == 2
    assert rows[(2, c.BidCode.CONFLICT_OF_INTEREST)]["count"] == 2
    assert rows[(2, c.BidCode.NON_EXPERT)]["count"] == 1

    assert rows[(0, c.BidCode.EXPERT_WANTS_TO_REVIEW)]["recall"] == 1.0
    assert rows[(0, c.BidCode.CONFLICT_OF_INTEREST)]["recall"] == 1.0
    assert rows[(2, c.BidCode.EXPERT_WANTS_TO_REVIEW)]["recall"] == 0.5
    assert rows[(2, c.BidCode.CONFLICT_OF_INTEREST)]["recall"] == 0.0
    assert rows[(2, c.BidCode.NON_EXPERT)]["total"] == 0.0
