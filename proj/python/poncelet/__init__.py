"""Poncelet triangle families between nested ellipses."""

import json

from ._poncelet import (
    Config,
    PonceletError,
    caustic,
    center_locus,
    check_names,
    isog_circle,
    isogonal_locus,
    region,
    triangle,
    x4_locus,
)
from ._poncelet import run_check_json as _run_check_json

__all__ = [
    "Config",
    "PonceletError",
    "caustic",
    "center_locus",
    "check_names",
    "isog_circle",
    "isogonal_locus",
    "region",
    "run_check",
    "triangle",
    "x4_locus",
]


def run_check(name, trials=0, seed=None):
    """Run a named check and return its report as a dict."""
    args = {"trials": trials}
    if seed is not None:
        args["seed"] = seed
    return json.loads(_run_check_json(name, **args))
