"""Discretized quantization on exponential Lie groups."""

import json as _json

from ._gq import ConfigError, Level as _Level, UnsupportedError, check_names, inverse, modular, multiply
from ._gq import run_check as _run_check


def _text(config):
    if isinstance(config, (str, bytes)):
        return config
    return _json.dumps(config)


def run_check(config, check=""):
    """Run a named check (default: the config's own) and return the report dict."""
    return _json.loads(_run_check(_text(config), check))


def level(config, index=0):
    return _Level(_text(config), index)


__all__ = ["ConfigError", "UnsupportedError", "check_names", "inverse", "level", "modular", "multiply", "run_check"]
