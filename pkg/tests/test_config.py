import dataclasses

import pytest

from peerswarm.errors import ConfigurationError
from peerswarm.model import BlackoutConfig
from peerswarm.model import EvaluationConfig
from peerswarm.model import RunConfig
from peerswarm.model import SwarmConfig
from peerswarm.parser import XMLRunConfigParser
from peerswarm.writer import XMLRunConfigWriter


def test_defaults():
    run_config = RunConfig()
    assert run_config.swarm == SwarmConfig(
        particles_per_reference=100, initial_energy=1.0, decay=0.15,
        max_steps=100, rng_seed=0, mode="monte-carlo")
    assert run_config.blackout.blackout_energy == -1000.0
    assert run_config.blackout.blackout_decay == 0.0
    assert run_config.blackout.blackout_steps == 2
    assert run_config.blackout.particles_per_author == 100
    assert not run_config.blackout.active
    assert run_config.evaluation.alpha == 0.05
    assert run_config.evaluation.top_n == 5
    assert run_config.threads is None


@pytest.mark.parametrize("factory", [
    lambda: SwarmConfig(decay=1.5),
    lambda: SwarmConfig(decay=-0.1),
    lambda: SwarmConfig(particles_per_reference=0),
    lambda: SwarmConfig(max_steps=0),
    lambda: SwarmConfig(initial_energy=0.0),
    lambda: SwarmConfig(rng_seed=-1),
    lambda: SwarmConfig(mode="random"),
    lambda: BlackoutConfig(blackout_energy=1.0),
    lambda: BlackoutConfig(blackout_steps=-1),
    lambda: BlackoutConfig(particles_per_author=0),
    lambda: EvaluationConfig(alpha=0.0),
    lambda: EvaluationConfig(top_n=0),
    lambda: EvaluationConfig(blackout_sweep=[2, -1]),
])
def test_invalid_parameters(factory):
    with pytest.raises(ConfigurationError):
        factory()


def test_blackout_active():
    assert BlackoutConfig(enabled=True).active
    assert not BlackoutConfig(enabled=True, blackout_steps=0).active
    assert not BlackoutConfig(enabled=False, blackout_steps=3).active


def test_inactive_blackout_snapshot():
    disabled = RunConfig()
    zero_depth = RunConfig(blackout=BlackoutConfig(enabled=True,
                                                   blackout_steps=0))
    assert disabled.snapshot() == zero_depth.snapshot()
    assert disabled.snapshot()["blackout"] is None
    assert RunConfig(blackout=BlackoutConfig(enabled=True)).snapshot()[
        "blackout"]["blackout_steps"] == 2


def test_parse_xml_run_config():
    xml = """<?xml version="1.0" encoding="UTF-8"?>
<peerswarmconfig>
  <swarm>
    <mode>expectation</mode>
    <decay>0.2</decay>
    <seed>7</seed>
  </swarm>
  <blackout enabled="true">
    <steps>3</steps>
  </blackout>
  <evaluation>
    <topn>3</topn>
    <excludeauthors>true</excludeauthors>
    <blackoutsweep>
      <k>0</k>
      <k>2</k>
    </blackoutsweep>
  </evaluation>
  <threads>4</threads>
</peerswarmconfig>
"""
    run_config = XMLRunConfigParser(xml, silent=True).get_run_config()
    assert run_config.swarm == SwarmConfig(decay=0.2, rng_seed=7,
                                           mode="expectation")
    assert run_config.blackout == BlackoutConfig(enabled=True,
                                                 blackout_steps=3)
    assert run_config.evaluation == EvaluationConfig(
        top_n=3, exclude_authors=True, blackout_sweep=[0, 2])
    assert run_config.threads == 4


def test_empty_xml_run_config_gives_defaults():
    run_config = XMLRunConfigParser("<peerswarmconfig/>",
                                    silent=True).get_run_config()
    assert run_config == RunConfig()


@pytest.mark.parametrize("xml", [
    "<peerswarmconfig>",
    "<config/>",
    "<peerswarmconfig><swarm><mode>random</mode></swarm></peerswarmconfig>",
    "<peerswarmconfig><swarm><decay>1.5</decay></swarm></peerswarmconfig>",
    "<peerswarmconfig><threads>0</threads></peerswarmconfig>",
    "<peerswarmconfig><unknown/></peerswarmconfig>",
])
def test_invalid_xml_run_config(xml):
    with pytest.raises(ConfigurationError):
        XMLRunConfigParser(xml, silent=True)


def test_positive_blackout_energy_in_xml():
    xml = ("<peerswarmconfig><blackout><energy>5.0</energy></blackout>"
           "</peerswarmconfig>")
    with pytest.raises(ConfigurationError):
        XMLRunConfigParser(xml, silent=True).get_run_config()


def test_xml_run_config_round_trip(tmp_path):
    run_config = RunConfig(
        swarm=SwarmConfig(particles_per_reference=250, initial_energy=2.5,
                          decay=0.1, max_steps=40, rng_seed=2 ** 63,
                          mode="expectation"),
        blackout=BlackoutConfig(enabled=True, blackout_energy=-1e6,
                                blackout_decay=0.05, blackout_steps=1,
                                particles_per_author=10),
        evaluation=EvaluationConfig(alpha=0.01, top_n=10,
                                    exclude_authors=True,
                                    emit_distributions=True,
                                    blackout_sweep=[0, 1, 2, 3]),
        threads=8)
    xml = XMLRunConfigWriter.to_string(run_config).decode("utf-8")
    assert XMLRunConfigParser(xml, silent=True).get_run_config() == \
        run_config

    file_name = str(tmp_path / "run-config.xml")
    XMLRunConfigWriter.write_run_config_to_file(
        dataclasses.replace(run_config, threads=None), file_name)
    with open(file_name, encoding="utf-8") as config_file:
        parsed = XMLRunConfigParser(config_file.read(),
                                    silent=True).get_run_config()
    assert parsed.threads is None
    assert parsed.swarm == run_config.swarm
