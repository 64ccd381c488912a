"""
Evaluation of referee rankings against program committee bids

Classes:
    - :class:`~peerswarm.evaluator.kolmogorovsmirnov.KolmogorovSmirnov`: two-sample Kolmogorov-Smirnov test
    - :class:`~peerswarm.evaluator.report.EvaluationReport`: per bid category results and output files
    - :class:`~peerswarm.evaluator.bidevaluator.BidEvaluator`: aggregates memberships per bid category, recall, top memberships, ordering check
    - :class:`~peerswarm.evaluator.blackoutsweep.BlackoutSweep`: bid category results for a list of blackout depths
"""
from peerswarm.evaluator.kolmogorovsmirnov import KolmogorovSmirnov
from peerswarm.evaluator.report import EvaluationReport
from peerswarm.evaluator.bidevaluator import BidEvaluator
from peerswarm.evaluator.blackoutsweep import BlackoutSweep
