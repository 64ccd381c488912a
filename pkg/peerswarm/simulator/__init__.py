"""
Synthetic corpora, graphs and bids

Classes:
    - :class:`~peerswarm.simulator.randomcorpus.RandomCorpusGenerator`: random corpora and random graphs
    - :class:`~peerswarm.simulator.plantedcommunity.PlantedCommunityGenerator`: planted expert communities with bids
    - :class:`~peerswarm.simulator.plantedcommunity.PlantedBundle`: corpus, bids and submission IDs (named tuple)
"""
from peerswarm.simulator.randomcorpus import RandomCorpusGenerator
from peerswarm.simulator.plantedcommunity import PlantedBundle
from peerswarm.simulator.plantedcommunity import PlantedCommunityGenerator
