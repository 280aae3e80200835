#!/usr/bin/env python3
"""
Settings loader.

Precedence (low → high): built-in defaults, config.yaml, environment
(BD_CONFIG, BD_SEED), CLI flags (applied by run.py).
"""
from __future__ import annotations

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Mapping, Optional

import yaml

from errors import DomainError
from graph_core import MIN_CUT_ENUMERATION_LIMIT
from oracle import DEFAULT_BDN_MAX_N, DEFAULT_MAX_N

SCRIPT_DIR = Path(__file__).parent
DEFAULT_CONFIG_PATH = SCRIPT_DIR.parent / "config.yaml"


@dataclass(frozen=True)
class Settings:
    oracle_max_n: int = DEFAULT_MAX_N
    bdn_max_n: int = DEFAULT_BDN_MAX_N
    min_cut_enumeration_limit: int = MIN_CUT_ENUMERATION_LIMIT
    sweep_nmax: int = 5
    sweep_samples: int = 0
    sweep_seed: int = 7
    sweep_exhaustive_max_n: int = 6
    sweep_colorings_max_n: int = 5
    sweep_oracle_equivalence_max_n: int = 5
    sweep_max_seconds: float = 0.0
    source: Optional[str] = None


# yaml section -> key -> Settings field
_FIELDS = {
    "oracle": {"max_n": "oracle_max_n", "bdn_max_n": "bdn_max_n"},
    "min_cut": {"enumeration_limit": "min_cut_enumeration_limit"},
    "sweep": {
        "nmax": "sweep_nmax",
        "samples": "sweep_samples",
        "seed": "sweep_seed",
        "exhaustive_max_n": "sweep_exhaustive_max_n",
        "colorings_max_n": "sweep_colorings_max_n",
        "oracle_equivalence_max_n": "sweep_oracle_equivalence_max_n",
        "max_seconds": "sweep_max_seconds",
    },
}


def _coerce(name: str, value: Any, current: Any) -> Any:
    kind = float if isinstance(current, float) else int
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DomainError(f"config value {name} must be a number, got {value!r}")
    if kind is int and value != int(value):
        raise DomainError(f"config value {name} must be an integer, got {value!r}")
    if value < 0:
        raise DomainError(f"config value {name} must be non-negative, got {value!r}")
    return kind(value)


def apply_mapping(settings: Settings, data: Mapping[str, Any]) -> Settings:
    updates: dict[str, Any] = {}
    for section, body in data.items():
        if section == "config_version":
            continue
        if section not in _FIELDS or not isinstance(body, Mapping):
            raise DomainError(f"unknown config section: {section!r}")
        for key, value in body.items():
            if key not in _FIELDS[section]:
                raise DomainError(f"unknown config key: {section}.{key}")
            field_name = _FIELDS[section][key]
            updates[field_name] = _coerce(f"{section}.{key}", value, getattr(settings, field_name))
    return replace(settings, **updates)


def load_settings(path: Optional[str] = None, environ: Optional[Mapping[str, str]] = None) -> Settings:
    env = os.environ if environ is None else environ
    config_path = Path(path or env.get("BD_CONFIG") or DEFAULT_CONFIG_PATH)

    settings = Settings()
    if config_path.exists():
        try:
            data = yaml.safe_load(config_path.read_text(encoding="utf-8")) or {}
        except yaml.YAMLError as exc:
            raise DomainError(f"cannot parse config {config_path}: {exc}") from exc
        if not isinstance(data, Mapping):
            raise DomainError(f"config {config_path} must be a mapping")
        settings = replace(apply_mapping(settings, data), source=str(config_path))
    elif path:
        raise DomainError(f"config file not found: {config_path}")

    seed = env.get("BD_SEED")
    if seed:
        try:
            settings = replace(settings, sweep_seed=int(seed))
        except ValueError as exc:
            raise DomainError(f"BD_SEED must be an integer, got {seed!r}") from exc
    return settings
