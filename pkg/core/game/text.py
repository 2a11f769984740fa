"""Text form of configurations: comma-separated counts in position order, e.g. "4,1,1"."""
from __future__ import annotations

import re
from typing import Optional

from core.errors import ConfigurationError
from core.game.models import Configuration, GameParams
from core.game.rules import configuration

_CONFIG_RE = re.compile(r"^\s*\d+(\s*,\s*\d+)+\s*$")


def parse_configuration(text: str, params: Optional[GameParams] = None) -> Configuration:
    if text is None or not _CONFIG_RE.match(text):
        raise ConfigurationError(f"not a configuration (expected e.g. '4,1,1'): {text!r}")
    return configuration([int(part) for part in text.split(",")], params)


def format_configuration(a: Configuration) -> str:
    return str(a)


__all__ = ["parse_configuration", "format_configuration"]
