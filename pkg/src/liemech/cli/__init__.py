"""Command-line front end: scenario files, runs and reports."""

from liemech.cli.main import main, roots_report
from liemech.cli.runner import run
from liemech.cli.scenario import Scenario, parse_scenario, scenario_digest, serialize

__all__ = ["Scenario", "main", "parse_scenario", "roots_report", "run", "scenario_digest", "serialize"]
