"""Exact walls and chambers for stability of sheaves along a segment of polarizations."""

import json
import os
from pathlib import Path

_data = Path(__file__).resolve().parent / "data"
if _data.is_dir():
    os.environ.setdefault("STABWALLS_DATA", str(_data))

from ._core import (  # noqa: E402
    ComputationError,
    InputError,
    chi,
    data_dir,
    is_semistable,
    isolate_roots,
    report_text,
)
from ._core import report_json as _report_json  # noqa: E402

COMMANDS = ("walls", "classes", "l0", "beta", "parabolic", "vgit")


def report(command, scenario, *, threads=1, require_star=False, verify=False, l=None):
    """Run a subcommand on a scenario file or bundled scenario name; returns the JSON report as a dict."""
    if command not in COMMANDS:
        raise InputError(f"unknown command {command}")
    return json.loads(_report_json(command, str(scenario), threads, require_star, verify, l))


__all__ = [
    "COMMANDS",
    "ComputationError",
    "InputError",
    "chi",
    "data_dir",
    "is_semistable",
    "isolate_roots",
    "report",
    "report_text",
]
