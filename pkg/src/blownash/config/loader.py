from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import yaml

from ..errors import ConfigError
from .defaults import DEFAULTS

METHODS = ("direct", "newton", "file", "auto")
FORMATS = ("text", "machine")
_KEYS = ("default_order", "default_method", "output_format", "logs_root", "log_level")
_ENV = {
    "BLOWNASH_ORDER": "default_order",
    "BLOWNASH_METHOD": "default_method",
    "BLOWNASH_FORMAT": "output_format",
    "BLOWNASH_LOGS_ROOT": "logs_root",
    "BLOWNASH_LOG_LEVEL": "log_level",
}


@dataclass(frozen=True)
class Config:
    default_order: int
    default_method: str
    output_format: str
    logs_root: Path | None
    log_level: str

    @property
    def log_level_no(self) -> int:
        return int(logging.getLevelName(self.log_level))


def _opt_path(base: dict[str, Any], key: str) -> Path | None:
    val = base.get(key)
    return Path(val) if val else None


def _order(value: Any) -> int:
    if isinstance(value, bool):
        raise ConfigError(f"default_order must be a positive integer, got {value!r}")
    try:
        n = int(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"default_order must be a positive integer, got {value!r}") from exc
    if n < 1:
        raise ConfigError(f"default_order must be >= 1, got {n}")
    return n


def _choice(key: str, value: Any, allowed: tuple[str, ...]) -> str:
    s = str(value).strip().lower()
    if s not in allowed:
        raise ConfigError(f"{key} must be one of {', '.join(allowed)}; got {value!r}")
    return s


def _level(value: Any) -> str:
    s = str(value).strip().upper()
    if not isinstance(logging.getLevelName(s), int):
        raise ConfigError(f"log_level {value!r} is not a logging level name")
    return s


def _apply_yaml_overrides(base: dict[str, Any], yml: dict[str, Any]) -> dict[str, Any]:
    out = dict(base)
    for k in _KEYS:
        if k in yml:
            out[k] = yml[k]
    return out


def _apply_env_overrides(base: dict[str, Any]) -> dict[str, Any]:
    out = dict(base)
    for env, key in _ENV.items():
        if v := os.getenv(env):
            out[key] = v
    return out


def load_config(yaml_path: Path | None = None) -> Config:
    base: dict[str, Any] = {k: getattr(DEFAULTS, k) for k in _KEYS}

    # ENV overrides (middle precedence)
    base = _apply_env_overrides(base)

    # YAML overrides (highest precedence)
    if yaml_path:
        data = yaml.safe_load(Path(yaml_path).read_text(encoding="utf-8"))
        if not isinstance(data, dict):
            raise ValueError("Config YAML must be a mapping at the top level.")
        base = _apply_yaml_overrides(base, data)

    return Config(
        default_order=_order(base["default_order"]),
        default_method=_choice("default_method", base["default_method"], METHODS),
        output_format=_choice("output_format", base["output_format"], FORMATS),
        logs_root=_opt_path(base, "logs_root"),
        log_level=_level(base["log_level"]),
    )
