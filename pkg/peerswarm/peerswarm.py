#!/usr/bin/env python

"""
peerswarm command line interface

Subcommands:
1. build-graph: co-authorship graph from a corpus of manuscript records
2. rank: referee candidates of one manuscript
3. evaluate: rank all manuscripts with bids and compare memberships with
   program committee bids
4. simulate: planted community corpus and bids
"""
import argparse
import dataclasses
import logging
import os
import sys
from typing import Dict, List, Optional

import peerswarm
import peerswarm.constants as c
from peerswarm import MiscHelper
from peerswarm.errors import ConfigurationError
from peerswarm.errors import CorpusParseError
from peerswarm.errors import EmptySeedError
from peerswarm.errors import GraphFormatError
from peerswarm.errors import InconsistentDataError
from peerswarm.errors import MalformedNameError
from peerswarm.errors import NoEnergyError
from peerswarm.errors import NoSeedsError
from peerswarm.errors import UnknownNodeError
from peerswarm.evaluator import BidEvaluator
from peerswarm.evaluator import BlackoutSweep
from peerswarm.evaluator import EvaluationReport
from peerswarm.graph import CoauthorGraph
from peerswarm.graph import GraphBuilder
from peerswarm.graph import GraphIO
from peerswarm.model import Corpus
from peerswarm.model import RunConfig
from peerswarm.parser import BidParser
from peerswarm.parser import CorpusParser
from peerswarm.parser import XMLRunConfigParser
from peerswarm.referee import RefereeFinder
from peerswarm.referee import RefereeRanking
from peerswarm.schema import BidRecord, CoverageStats, ManuscriptRecord
from peerswarm.simulator import PlantedBundle
from peerswarm.simulator import PlantedCommunityGenerator
from peerswarm.swarm import EnergyVector
from peerswarm.writer import XMLRunConfigWriter


def run_build_graph(corpus_file: str, graph_file: str,
                    silent: bool = False) -> None:
    corpus: Corpus = CorpusParser(silent).parse_file(corpus_file)
    graph: CoauthorGraph = GraphBuilder(silent).build_normalized_graph(corpus)
    GraphIO(silent).save_graph_to_file(graph, graph_file)

    coverage: CoverageStats = graph.coverage(corpus)
    print(str(graph), end="")
    print("Referenced authors:")
    print("\tFound in graph (distinct): " + str(coverage.distinct_found))
    print("\tMissing from graph (distinct): " +
          str(coverage.distinct_missing))
    print("\tFound in graph (references): " + str(coverage.references_found))
    print("\tMissing from graph (references): " +
          str(coverage.references_missing))


def select_manuscript(corpus: Corpus,
                      manuscript_id: Optional[str]) -> ManuscriptRecord:
    if manuscript_id is not None:
        manuscript: Optional[ManuscriptRecord] = corpus.get(manuscript_id)
        if manuscript is None:
            raise InconsistentDataError("manuscript not in file",
                                        [manuscript_id])
        return manuscript
    if len(corpus) != 1:
        raise ConfigurationError("manuscript file contains " +
                                 str(len(corpus)) + " records; select one "
                                 "with --manuscript-id")
    return corpus.manuscripts[0]


def run_rank(graph_file: str, manuscript_file: str,
             manuscript_id: Optional[str], run_config: RunConfig,
             output_file: Optional[str], energy_output_file: Optional[str],
             silent: bool = False) -> None:
    logger = logging.getLogger(__name__)
    if silent:
        logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))

    graph: CoauthorGraph = GraphIO(silent).load_graph_from_file(graph_file)
    corpus: Corpus = CorpusParser(silent).parse_file(manuscript_file)
    manuscript: ManuscriptRecord = select_manuscript(corpus, manuscript_id)

    finder: RefereeFinder = RefereeFinder(graph, run_config, silent)
    energy, seed_set = finder.positive_energy(manuscript)
    ranking: RefereeRanking = finder.rank_from_energy(manuscript, energy,
                                                      seed_set)

    if energy_output_file is not None:
        final_energy: EnergyVector = finder.final_energy(manuscript, energy)
        with open(energy_output_file, "w", encoding="utf-8") as energy_file:
            final_energy.write_tsv(energy_file, graph.authors)

    if output_file is None:
        sys.stdout.write(ranking.to_json())
    else:
        ranking.write_json(output_file)
        logger.info("wrote %s referee candidates of manuscript %s to %s",
                    len(ranking), manuscript.manuscript_id, output_file)


def run_evaluate(graph_file: str, corpus_file: str, bids_file: str,
                 output_dir: str, run_config: RunConfig,
                 silent: bool = False) -> EvaluationReport:
    logger = logging.getLogger(__name__)
    if silent:
        logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))

    graph: CoauthorGraph = GraphIO(silent).load_graph_from_file(graph_file)
    corpus: Corpus = CorpusParser(silent).parse_file(corpus_file)
    bids: List[BidRecord] = BidParser(silent).parse_file(bids_file)
    if not bids:
        raise InconsistentDataError("no bids in " + bids_file)
    unknown: List[str] = [b.manuscript_id for b in bids
                          if b.manuscript_id not in corpus]
    if unknown:
        raise InconsistentDataError("bids reference manuscripts not in "
                                    "corpus", unknown)
    output_dir = MiscHelper.prepare_path(output_dir)

    finder: RefereeFinder = RefereeFinder(graph, run_config, silent)
    rankings: Dict[str, RefereeRanking]
    rankings, skipped = finder.rank_corpus(
        corpus, {b.manuscript_id for b in bids})
    evaluator: BidEvaluator = BidEvaluator(run_config.evaluation.alpha,
                                           run_config.evaluation.top_n,
                                           silent)
    report: EvaluationReport = evaluator.evaluate(rankings, bids, graph,
                                                  corpus.ids(), skipped)
    report.write(output_dir, run_config.evaluation.emit_distributions)

    if run_config.evaluation.blackout_sweep:
        sweep: BlackoutSweep = BlackoutSweep(finder, evaluator, silent)
        sweep.write(sweep.sweep(corpus, bids,
                                run_config.evaluation.blackout_sweep),
                    output_dir)

    MiscHelper.write_session_info(output_dir)
    XMLRunConfigWriter.write_run_config_to_file(
        run_config, os.path.join(output_dir, "run-config.xml"))
    logger.info("wrote evaluation results to %s", output_dir)
    print(str(report), end="")
    return report


def run_simulate(output_dir: str, seed: int, topics: int,
                 submissions_per_topic: int, cited_per_topic: int,
                 experts_per_topic: int, missing_references: int,
                 absent_members: int, silent: bool = False) -> None:
    generator: PlantedCommunityGenerator = PlantedCommunityGenerator(
        seed, topics, submissions_per_topic, cited_per_topic,
        experts_per_topic, missing_references, absent_members, silent)
    bundle: PlantedBundle = generator.generate()
    generator.write(bundle, output_dir)


def get_run_config(args: argparse.Namespace) -> RunConfig:
    """Flags override the config file, the config file overrides
    defaults."""
    if args.config_file is not None:
        run_config: RunConfig = XMLRunConfigParser(
            MiscHelper.read_config_file(args.config_file),
            args.silent).get_run_config()
    else:
        run_config = RunConfig()

    swarm_overrides = {
        "mode": args.mode,
        "particles_per_reference": args.particles,
        "initial_energy": args.energy,
        "decay": args.decay,
        "max_steps": args.steps,
        "rng_seed": args.seed}
    blackout_overrides = {
        "blackout_energy": args.blackout_energy,
        "blackout_decay": args.blackout_decay,
        "blackout_steps": args.blackout_steps,
        "particles_per_author": args.blackout_particles}
    if args.blackout or args.blackout_steps is not None:
        blackout_overrides["enabled"] = True
    evaluation_overrides = {
        "exclude_authors": args.exclude_authors,
        "alpha": getattr(args, "alpha", None),
        "top_n": getattr(args, "top_n", None),
        "emit_distributions": getattr(args, "emit_distributions", None),
        "blackout_sweep": getattr(args, "blackout_sweep", None)}

    return RunConfig(
        swarm=_replace(run_config.swarm, swarm_overrides),
        blackout=_replace(run_config.blackout, blackout_overrides),
        evaluation=_replace(run_config.evaluation, evaluation_overrides),
        threads=args.threads if args.threads is not None
        else run_config.threads)


def _replace(config, overrides):
    return dataclasses.replace(
        config, **{k: v for k, v in overrides.items() if v is not None})


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-s",
        "--silent",
        action="store_true",
        help="only print warnings (takes precedence over --verbose)"
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="print debug messages"
    )


def add_swarm_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--config-file",
        type=str,
        default=None,
        help="path to the peerswarm XML run configuration file; flags "
        "override its values"
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="number of threads for Monte Carlo propagation, never changes "
        "results; defaults to $" + c.Defaults.THREADS_ENV_VAR + " or 1"
    )
    parser.add_argument(
        "--mode",
        type=str,
        default=None,
        choices=sorted(c.PropagationMode.ALL_MODES),
        help="propagation mode, defaults to " + c.Defaults.MODE
    )
    parser.add_argument(
        "--particles",
        type=int,
        default=None,
        help="particles per reference, defaults to " +
        str(c.Defaults.PARTICLES_PER_REFERENCE)
    )
    parser.add_argument(
        "--energy",
        type=float,
        default=None,
        help="initial particle energy, defaults to " +
        str(c.Defaults.INITIAL_ENERGY)
    )
    parser.add_argument(
        "--decay",
        type=float,
        default=None,
        help="fraction of energy a particle loses per step, defaults to " +
        str(c.Defaults.DECAY)
    )
    parser.add_argument(
        "--steps",
        type=int,
        default=None,
        help="number of propagation steps, defaults to " +
        str(c.Defaults.MAX_STEPS)
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="random seed, defaults to " + str(c.Defaults.SEED)
    )
    parser.add_argument(
        "--blackout",
        action="store_true",
        default=None,
        help="launch a negative energy swarm from the manuscript's authors"
    )
    parser.add_argument(
        "--blackout-energy",
        type=float,
        default=None,
        help="blackout particle energy, defaults to " +
        str(c.Defaults.BLACKOUT_ENERGY)
    )
    parser.add_argument(
        "--blackout-decay",
        type=float,
        default=None,
        help="blackout particle decay, defaults to " +
        str(c.Defaults.BLACKOUT_DECAY)
    )
    parser.add_argument(
        "--blackout-steps",
        type=int,
        default=None,
        help="blackout depth in hops, implies --blackout; 0 leaves the "
        "energy unchanged; defaults to " + str(c.Defaults.BLACKOUT_STEPS)
    )
    parser.add_argument(
        "--blackout-particles",
        type=int,
        default=None,
        help="blackout particles per author, defaults to " +
        str(c.Defaults.PARTICLES_PER_AUTHOR)
    )
    parser.add_argument(
        "--exclude-authors",
        action="store_true",
        default=None,
        help="remove the manuscript's own authors from the ranking"
    )


def create_parser():
    parser = argparse.ArgumentParser(
        prog="peerswarm",
        description="Rank referee candidates of a manuscript with a "
        "decaying particle swarm over the co-authorship network and "
        "evaluate rankings against program committee bids")
    parser.add_argument(
        "-v",
        "--version",
        action="version",
        version="%(prog)s " + peerswarm.__version__)
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    build_parser = subparsers.add_parser(
        c.Subcommand.BUILD_GRAPH,
        help="build the co-authorship graph from a corpus")
    add_common_arguments(build_parser)
    build_parser.add_argument(
        "-c",
        "--corpus",
        type=str,
        required=True,
        help="corpus file, one JSON manuscript record per line"
    )
    build_parser.add_argument(
        "-o",
        "--output",
        type=str,
        required=True,
        help="graph output file"
    )

    rank_parser = subparsers.add_parser(
        c.Subcommand.RANK, help="rank referee candidates of a manuscript")
    add_common_arguments(rank_parser)
    add_swarm_arguments(rank_parser)
    rank_parser.add_argument(
        "-g",
        "--graph",
        type=str,
        required=True,
        help="graph file written by build-graph"
    )
    rank_parser.add_argument(
        "-m",
        "--manuscript",
        type=str,
        required=True,
        help="file with one or more JSON manuscript records"
    )
    rank_parser.add_argument(
        "--manuscript-id",
        type=str,
        default=None,
        help="ID of the manuscript to rank, required if the manuscript "
        "file holds more than one record"
    )
    rank_parser.add_argument(
        "-o",
        "--output",
        type=str,
        default=None,
        help="ranking output file (JSON), defaults to standard output"
    )
    rank_parser.add_argument(
        "--energy-output",
        type=str,
        default=None,
        help="energy vector output file, author key and energy per line"
    )

    evaluate_parser = subparsers.add_parser(
        c.Subcommand.EVALUATE,
        help="compare rankings with program committee bids")
    add_common_arguments(evaluate_parser)
    add_swarm_arguments(evaluate_parser)
    evaluate_parser.add_argument(
        "-g",
        "--graph",
        type=str,
        required=True,
        help="graph file written by build-graph"
    )
    evaluate_parser.add_argument(
        "-c",
        "--corpus",
        type=str,
        required=True,
        help="corpus file containing the submissions"
    )
    evaluate_parser.add_argument(
        "-b",
        "--bids",
        type=str,
        required=True,
        help="bid file, member name, manuscript ID and bid code separated "
        "by tabs"
    )
    evaluate_parser.add_argument(
        "-o",
        "--output-dir",
        type=str,
        required=True,
        help="output directory"
    )
    evaluate_parser.add_argument(
        "--alpha",
        type=float,
        default=None,
        help="significance level of the ordering check, defaults to " +
        str(c.Defaults.ALPHA)
    )
    evaluate_parser.add_argument(
        "--top-n",
        type=int,
        default=None,
        help="number of top memberships per bid category, defaults to " +
        str(c.Defaults.TOP_N)
    )
    evaluate_parser.add_argument(
        "--emit-distributions",
        action="store_true",
        default=None,
        help="write per category membership samples and histograms"
    )
    evaluate_parser.add_argument(
        "--blackout-sweep",
        type=int,
        nargs="+",
        default=None,
        metavar="K",
        help="blackout depths for the blackout sweep table"
    )

    simulate_parser = subparsers.add_parser(
        c.Subcommand.SIMULATE,
        help="generate a planted community corpus with bids")
    add_common_arguments(simulate_parser)
    simulate_parser.add_argument(
        "-o",
        "--output-dir",
        type=str,
        required=True,
        help="output directory for corpus.jsonl and bids.txt"
    )
    simulate_parser.add_argument(
        "--seed",
        type=int,
        default=c.Defaults.SEED,
        help="random seed, defaults to " + str(c.Defaults.SEED)
    )
    simulate_parser.add_argument(
        "--topics",
        type=int,
        default=10,
        help="number of topics, defaults to 10"
    )
    simulate_parser.add_argument(
        "--submissions-per-topic",
        type=int,
        default=4,
        help="submissions per topic, defaults to 4"
    )
    simulate_parser.add_argument(
        "--cited-per-topic",
        type=int,
        default=4,
        help="cited authors per topic, defaults to 4"
    )
    simulate_parser.add_argument(
        "--experts-per-topic",
        type=int,
        default=4,
        help="expert program committee members per topic (even), defaults "
        "to 4"
    )
    simulate_parser.add_argument(
        "--missing-references",
        type=int,
        default=2,
        help="references per submission to authors outside the corpus, "
        "defaults to 2"
    )
    simulate_parser.add_argument(
        "--absent-members",
        type=int,
        default=2,
        help="program committee members without publications, defaults "
        "to 2"
    )

    return parser


def run(args: argparse.Namespace) -> None:
    if args.subcommand == c.Subcommand.BUILD_GRAPH:
        run_build_graph(args.corpus, args.output, args.silent)
    elif args.subcommand == c.Subcommand.RANK:
        run_rank(args.graph, args.manuscript, args.manuscript_id,
                 get_run_config(args), args.output, args.energy_output,
                 args.silent)
    elif args.subcommand == c.Subcommand.EVALUATE:
        run_evaluate(args.graph, args.corpus, args.bids, args.output_dir,
                     get_run_config(args), args.silent)
    elif args.subcommand == c.Subcommand.SIMULATE:
        run_simulate(args.output_dir, args.seed, args.topics,
                     args.submissions_per_topic, args.cited_per_topic,
                     args.experts_per_topic, args.missing_references,
                     args.absent_members, args.silent)


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=logging.INFO)
    logger = logging.getLogger(__name__)

    parser = create_parser()
    args = parser.parse_args(argv)

    if args.silent:
        logging.getLogger().setLevel(logging.WARNING)
    elif args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        run(args)
    except (NoSeedsError, EmptySeedError) as exception:
        logger.error("%s", exception)
        return c.ExitCode.NO_SEEDS
    except NoEnergyError as exception:
        logger.error("%s", exception)
        return c.ExitCode.NO_ENERGY
    except (InconsistentDataError, UnknownNodeError) as exception:
        logger.error("%s", exception)
        return c.ExitCode.INCONSISTENT
    except GraphFormatError as exception:
        logger.error("invalid graph file: %s", exception)
        return c.ExitCode.GRAPH_FORMAT
    except (CorpusParseError, MalformedNameError,
            ConfigurationError) as exception:
        logger.error("%s", exception)
        return c.ExitCode.PARSE_ERROR
    except OSError as exception:
        logger.error("%s", exception)
        return c.ExitCode.IO_ERROR
    return c.ExitCode.SUCCESS


if __name__ == "__main__":
    sys.exit(main())
