"""
peerswarm

Implementation of RunConfigWriter for XML configuration files
"""
from lxml import etree

from peerswarm.model import BlackoutConfig
from peerswarm.model import EvaluationConfig
from peerswarm.model import RunConfig
from peerswarm.model import SwarmConfig
from peerswarm.writer.runconfigwriter import RunConfigWriter


class XMLRunConfigWriter(RunConfigWriter):
    @staticmethod
    def _bool(value: bool) -> str:
        return "true" if value else "false"

    @staticmethod
    def _attach(parent, name: str, text: str) -> None:
        element = etree.SubElement(parent, name)
        element.text = text

    @staticmethod
    def attach_swarm_element(root, swarm: SwarmConfig) -> None:
        swarm_element = etree.SubElement(root, "swarm")
        XMLRunConfigWriter._attach(swarm_element, "mode", swarm.mode)
        XMLRunConfigWriter._attach(swarm_element, "particlesperreference",
                                   str(swarm.particles_per_reference))
        XMLRunConfigWriter._attach(swarm_element, "initialenergy",
                                   repr(swarm.initial_energy))
        XMLRunConfigWriter._attach(swarm_element, "decay", repr(swarm.decay))
        XMLRunConfigWriter._attach(swarm_element, "maxsteps",
                                   str(swarm.max_steps))
        XMLRunConfigWriter._attach(swarm_element, "seed", str(swarm.rng_seed))

    @staticmethod
    def attach_blackout_element(root, blackout: BlackoutConfig) -> None:
        blackout_element = etree.SubElement(
            root, "blackout",
            {"enabled": XMLRunConfigWriter._bool(blackout.enabled)})
        XMLRunConfigWriter._attach(blackout_element, "energy",
                                   repr(blackout.blackout_energy))
        XMLRunConfigWriter._attach(blackout_element, "decay",
                                   repr(blackout.blackout_decay))
        XMLRunConfigWriter._attach(blackout_element, "steps",
                                   str(blackout.blackout_steps))
        XMLRunConfigWriter._attach(blackout_element, "particlesperauthor",
                                   str(blackout.particles_per_author))

    @staticmethod
    def attach_evaluation_element(root, evaluation: EvaluationConfig) -> None:
        evaluation_element = etree.SubElement(root, "evaluation")
        XMLRunConfigWriter._attach(evaluation_element, "alpha",
                                   repr(evaluation.alpha))
        XMLRunConfigWriter._attach(evaluation_element, "topn",
                                   str(evaluation.top_n))
        XMLRunConfigWriter._attach(
            evaluation_element, "excludeauthors",
            XMLRunConfigWriter._bool(evaluation.exclude_authors))
        XMLRunConfigWriter._attach(
            evaluation_element, "emitdistributions",
            XMLRunConfigWriter._bool(evaluation.emit_distributions))
        if evaluation.blackout_sweep:
            sweep_element = etree.SubElement(evaluation_element,
                                             "blackoutsweep")
            for k in evaluation.blackout_sweep:
                XMLRunConfigWriter._attach(sweep_element, "k", str(k))

    @staticmethod
    def to_string(run_config: RunConfig) -> bytes:
        root = etree.Element("peerswarmconfig")
        XMLRunConfigWriter.attach_swarm_element(root, run_config.swarm)
        XMLRunConfigWriter.attach_blackout_element(root, run_config.blackout)
        XMLRunConfigWriter.attach_evaluation_element(root,
                                                     run_config.evaluation)
        if run_config.threads is not None:
            XMLRunConfigWriter._attach(root, "threads",
                                       str(run_config.threads))
        return etree.tostring(root, pretty_print=True, encoding="UTF-8",
                              method="xml", xml_declaration=True)

    @staticmethod
    def write_run_config_to_file(run_config: RunConfig, file_name: str):
        with open(file_name, "wb") as config_file:
            config_file.write(XMLRunConfigWriter.to_string(run_config))
