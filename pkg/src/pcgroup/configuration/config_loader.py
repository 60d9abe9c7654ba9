""" Loads config.yaml, applies environment overrides and caches the result. """
from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import ValidationError

from pcgroup.configuration.models import Config
from pcgroup.errors import ConfigurationError

logger = logging.getLogger(__name__)

DEFAULT_PATH = "config.yaml"

# env var -> (section, key)
ENV_OVERRIDES = {
    "PCGROUP_MAX_GENERATORS": ("limits", "max_generators"),
    "PCGROUP_MAX_ENUMERATION_ORDER": ("limits", "max_enumeration_order"),
    "PCGROUP_BRUTE_FORCE_ORDER": ("limits", "brute_force_centralizer_order"),
}

_cached: Optional[Config] = None


def _read_yaml(p: Path) -> Dict[str, Any]:
    try:
        data = yaml.safe_load(p.read_text(encoding="utf-8")) or {}
    except yaml.YAMLError as e:
        raise ConfigurationError(f"unreadable config: {p}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigurationError(f"config must be a mapping: {p}")
    return data


def _apply_env(data: Dict[str, Any]) -> Dict[str, Any]:
    for var, (section, key) in ENV_OVERRIDES.items():
        raw = os.environ.get(var)
        if raw is None:
            continue
        try:
            value = int(raw)
        except ValueError as e:
            raise ConfigurationError(f"{var} must be an integer, got {raw!r}") from e
        data.setdefault(section, {})[key] = value
        logger.debug("override %s.%s=%d from %s", section, key, value, var)
    return data


def load_config(path: str | Path | None = None) -> Config:
    """Returns the active configuration; missing file means built-in defaults."""
    global _cached
    if _cached is not None and path is None:
        return _cached

    p = Path(path or os.environ.get("PCGROUP_CONFIG", DEFAULT_PATH))
    data: Dict[str, Any] = {}
    if p.exists():
        data = _read_yaml(p)
    else:
        logger.debug("config %s not found, using defaults", p)

    try:
        cfg = Config.model_validate(_apply_env(data))
    except ValidationError as e:
        raise ConfigurationError(str(e)) from e

    if path is None:
        _cached = cfg
    return cfg


def reset_config() -> None:
    """Forget the cached configuration (tests change env vars between runs)."""
    global _cached
    _cached = None
