"""Configuration utilities for the card game toolkit.

负责配置文件的读取与合并，保持主 CLI 更轻量。

Functions:
    load_config(path: str | None) -> dict
    profile_path(name: str) -> Path
    section_defaults(cfg: dict, command: str) -> dict
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Optional

try:  # Python 3.11+
    import tomllib  # type: ignore
except ImportError:  # pragma: no cover
    import tomli as tomllib  # type: ignore

logger = logging.getLogger(__name__)

CONFIG_DIR = Path(__file__).parent.parent / "config"
DEFAULT_CONFIG = CONFIG_DIR / "cardgame.toml"


def load_config(path: Optional[str]) -> Dict:
    """Load a TOML config file.

    If path is None, try the default config/cardgame.toml.
    Returns a dict, or an empty dict if the file is missing or does not parse.
    """
    cfg_path = Path(path) if path else DEFAULT_CONFIG
    if not cfg_path.exists():
        logger.info("no config at %s", cfg_path)
        return {}
    try:
        with open(cfg_path, "rb") as f:
            data = tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError) as e:
        logger.warning("ignoring config %s: %s", cfg_path, e)
        return {}
    logger.info("loaded config %s", cfg_path)
    return data or {}


def profile_path(name: str) -> Path:
    """config/verify_<name>.toml"""
    return CONFIG_DIR / f"verify_{name}.toml"


def section_defaults(cfg: Dict, command: str) -> Dict:
    """Values of [common] overlaid with the section named after the subcommand.

    Section names use underscores where subcommands use dashes.
    """
    merged: Dict = {}
    common = cfg.get("common")
    if isinstance(common, dict):
        merged.update(common)
    section = cfg.get(command.replace("-", "_"))
    if isinstance(section, dict):
        merged.update(section)
    return merged


__all__ = ["CONFIG_DIR", "DEFAULT_CONFIG", "load_config", "profile_path", "section_defaults"]
