"""Exact divisor-class lattices for Coble surfaces and their degenerations.

Thin wrapper around the C++ core. Integers are arbitrary precision,
rationals come back as fractions.Fraction, and verification reports are
plain dicts decoded from the deterministic machine format.
"""

import json as _json

from ._core import (
    admissible_degenerations,
    hj_evaluate,
    hj_expand,
    is_t_chain,
    is_wahl,
    kernel_basis,
    milnor_rank,
    present_group,
    root_configuration_rank,
    run_all_scenarios_json,
    run_scenario_json,
    saturate,
    scenario_names,
    snf,
    t_chain_from_s,
    verify_surface_file,
    wahl_family_chain,
)

__all__ = [
    "admissible_degenerations",
    "hj_evaluate",
    "hj_expand",
    "is_t_chain",
    "is_wahl",
    "kernel_basis",
    "milnor_rank",
    "present_group",
    "root_configuration_rank",
    "run_all_scenarios",
    "run_scenario",
    "scenario_names",
    "snf",
    "saturate",
    "t_chain_from_s",
    "verify_surface",
    "wahl_family_chain",
]


def run_scenario(name, allow_known_discrepancies=False):
    """Run one built-in scenario and return the report as a dict."""
    return _json.loads(run_scenario_json(name, allow_known_discrepancies))


def run_all_scenarios(allow_known_discrepancies=False):
    """Run every built-in scenario and return the merged report as a dict."""
    return _json.loads(run_all_scenarios_json(allow_known_discrepancies))


def verify_surface(path):
    """Verify a surface description file and return the report as a dict."""
    return _json.loads(verify_surface_file(str(path)))
