"""Exact Chern-character image lattices for complex reflection groups."""

import json
import os
from importlib import resources

# Point the core library at the packaged fixed-point fixture unless the
# caller already chose one.
if "CMREES_G4_FIXTURE" not in os.environ:
    _fixture = resources.files(__package__) / "data" / "g4_fixture.txt"
    if _fixture.is_file():
        os.environ["CMREES_G4_FIXTURE"] = str(_fixture)

from ._cmrees import (  # noqa: E402
    character_table_tsv,
    filtration_dims,
    group_info,
    group_names,
    run_suite_json,
    theorem_a_dims,
    weighted_degree,
)

__all__ = [
    "character_table_tsv",
    "filtration_dims",
    "group_info",
    "group_names",
    "run_suite",
    "run_suite_json",
    "theorem_a_dims",
    "weighted_degree",
]


def run_suite(suite, group=None, order=0, families=None):
    """Run a verification suite and return the report as a dict."""
    return json.loads(run_suite_json(suite, group=group, order=order, families=families))
