"""
peerswarm

Implementation of RunConfigParser for XML configuration files
(using Strategy design pattern)

"""
import io
import logging
import os
from typing import Any, List, Optional
from xml.dom.minidom import Document, parseString

from lxml import etree

import peerswarm.constants as c
from peerswarm.errors import ConfigurationError
from peerswarm.model import BlackoutConfig
from peerswarm.model import EvaluationConfig
from peerswarm.model import SwarmConfig
from peerswarm.parser.runconfigparser import RunConfigParser
from peerswarm.parser.xmlhelper import XMLHelper


class XMLRunConfigParser(RunConfigParser):
    SCHEMA_FILE: str = os.path.join(os.path.dirname(os.path.dirname(
        os.path.abspath(__file__))), "run-config.xsd")

    def __init__(self, config: str, silent: bool = False) -> None:
        self.logger = logging.getLogger(__name__)
        if silent:
            self.logger.setLevel(os.environ.get("LOGLEVEL", "WARNING"))
        self.validate(config)
        self._dom: Document = parseString(config)
        self._root: Any = self._dom.documentElement

    def validate(self, xml_config: str) -> None:
        xmlschema_doc = etree.parse(XMLRunConfigParser.SCHEMA_FILE)
        xmlschema = etree.XMLSchema(xmlschema_doc)
        try:
            xml_doc = etree.parse(io.BytesIO(xml_config.encode()))
            xmlschema.assertValid(xml_doc)
        except (etree.XMLSyntaxError, etree.DocumentInvalid) as exception:
            raise ConfigurationError("invalid run configuration: " +
                                     str(exception)) from exception
        self.logger.info("peerswarm run configuration XML "
                         "file is well-formed and valid")

    def _section(self, name: str) -> Optional[Any]:
        elements: Any = self._root.getElementsByTagName(name)
        if elements:
            return elements[0]
        return None

    def get_swarm_config(self) -> SwarmConfig:
        element: Optional[Any] = self._section("swarm")
        if element is None:
            return SwarmConfig()
        mode: Optional[str] = XMLHelper.read_text_node(element, "mode")
        return SwarmConfig(
            particles_per_reference=XMLHelper.read_int_node(
                element, "particlesperreference",
                c.Defaults.PARTICLES_PER_REFERENCE),
            initial_energy=XMLHelper.read_float_node(
                element, "initialenergy", c.Defaults.INITIAL_ENERGY),
            decay=XMLHelper.read_float_node(element, "decay",
                                            c.Defaults.DECAY),
            max_steps=XMLHelper.read_int_node(element, "maxsteps",
                                              c.Defaults.MAX_STEPS),
            rng_seed=XMLHelper.read_int_node(element, "seed",
                                             c.Defaults.SEED),
            mode=mode if mode else c.Defaults.MODE)

    def get_blackout_config(self) -> BlackoutConfig:
        element: Optional[Any] = self._section("blackout")
        if element is None:
            return BlackoutConfig()
        enabled: bool = element.hasAttribute("enabled") and \
            XMLHelper.parse_bool(element.getAttribute("enabled"))
        return BlackoutConfig(
            enabled=enabled,
            blackout_energy=XMLHelper.read_float_node(
                element, "energy", c.Defaults.BLACKOUT_ENERGY),
            blackout_decay=XMLHelper.read_float_node(
                element, "decay", c.Defaults.BLACKOUT_DECAY),
            blackout_steps=XMLHelper.read_int_node(
                element, "steps", c.Defaults.BLACKOUT_STEPS),
            particles_per_author=XMLHelper.read_int_node(
                element, "particlesperauthor",
                c.Defaults.PARTICLES_PER_AUTHOR))

    def get_evaluation_config(self) -> EvaluationConfig:
        element: Optional[Any] = self._section("evaluation")
        if element is None:
            return EvaluationConfig()
        sweep: List[int] = [
            int(k_element.firstChild.nodeValue.strip())
            for k_element in element.getElementsByTagName("k")]
        return EvaluationConfig(
            alpha=XMLHelper.read_float_node(element, "alpha",
                                            c.Defaults.ALPHA),
            top_n=XMLHelper.read_int_node(element, "topn", c.Defaults.TOP_N),
            exclude_authors=XMLHelper.read_bool_node(
                element, "excludeauthors", False),
            emit_distributions=XMLHelper.read_bool_node(
                element, "emitdistributions", False),
            blackout_sweep=sweep)

    def get_threads(self) -> Optional[int]:
        # only a direct child counts
        for child in self._root.childNodes:
            if child.nodeType == child.ELEMENT_NODE and \
                    child.tagName == "threads":
                return int(child.firstChild.nodeValue.strip())
        return None
