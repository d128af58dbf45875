"""
Settings Loader

Loads config/defaults.yaml, merges an optional user file over it section by
section, and resolves the result into a RunConfig.
"""

import os
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

DEFAULTS_PATH = Path(__file__).resolve().parent / "config" / "defaults.yaml"
WORKERS_ENV = "DIHOM_WORKERS"
PINNED_RNG = "numpy.random.PCG64"
OUTPUT_MODES = ("text", "json")


class ConfigError(Exception):
    """Exception raised for configuration loading errors."""
    pass


@dataclass
class RunConfig:
    """Resolved configuration handed to every subcommand."""
    seed: int = 0
    workers: int = 1
    output: str = "text"
    default_suite_size: int = 500
    suite_sizes: Dict[str, int] = field(default_factory=dict)
    mc_standard_errors: float = 3.0
    mc_slack: float = 0.01
    mc_rerun_factor: int = 4
    heavy_tail_truncation: int = 10 ** 6
    heavy_tail_slack: float = 0.05
    schema: str = "dihom/1"
    rng_name: str = PINNED_RNG

    def suite_size(self, suite: str) -> int:
        return self.suite_sizes.get(suite, self.default_suite_size)


def read_yaml(path: str) -> Dict[str, Any]:
    """
    Read one YAML mapping.

    Raises:
        ConfigError: If file cannot be found, read or parsed, or is empty
    """
    path = os.path.expanduser(path)

    if not os.path.isfile(path):
        raise ConfigError(f"Config file not found: {path}")

    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigError(f"Failed to parse config file: {e}")
    except IOError as e:
        raise ConfigError(f"Failed to read config file: {e}")

    if not data:
        raise ConfigError(f"Config file is empty: {path}")
    if not isinstance(data, dict):
        raise ConfigError(f"Config file must hold a mapping: {path}")
    return data


def merge_sections(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """Per-key override inside each section; nested mappings merge the same way."""
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_sections(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[str] = None, env: Optional[Dict[str, str]] = None) -> RunConfig:
    """
    Load packaged defaults, then the user file, then the environment.

    Args:
        path: Optional user config file
        env: Environment mapping (default: os.environ)

    Returns:
        RunConfig

    Raises:
        ConfigError: If a file cannot be loaded or a value is invalid
    """
    data = read_yaml(str(DEFAULTS_PATH))
    if path:
        logger.info(f"Loading config from {path}")
        data = merge_sections(data, read_yaml(path))

    config = _resolve(data)

    env = os.environ if env is None else env
    raw = env.get(WORKERS_ENV)
    if raw:
        try:
            config.workers = int(raw)
        except ValueError:
            raise ConfigError(f"{WORKERS_ENV} must be an integer, got {raw!r}")
        logger.debug(f"Worker count {config.workers} from {WORKERS_ENV}")

    _validate(config)
    return config


def _resolve(data: Dict[str, Any]) -> RunConfig:
    run = data.get("run") or {}
    suites = data.get("suites") or {}
    mc = data.get("montecarlo") or {}
    tail = data.get("heavy_tail") or {}

    try:
        return RunConfig(
            seed=int(run.get("seed", 0)),
            workers=int(run.get("workers", 1)),
            output=str(run.get("output", "text")),
            default_suite_size=int(suites.get("default_size", 500)),
            suite_sizes={str(k): int(v) for k, v in (suites.get("sizes") or {}).items()},
            mc_standard_errors=float(mc.get("standard_errors", 3.0)),
            mc_slack=float(mc.get("slack", 0.01)),
            mc_rerun_factor=int(mc.get("rerun_factor", 4)),
            heavy_tail_truncation=int(tail.get("truncation", 10 ** 6)),
            heavy_tail_slack=float(tail.get("slack", 0.05)),
            schema=str((data.get("output") or {}).get("schema", "dihom/1")),
            rng_name=str((data.get("rng") or {}).get("name", PINNED_RNG)),
        )
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Invalid config value: {e}")


def _validate(config: RunConfig) -> None:
    if config.workers < 1:
        raise ConfigError(f"Worker count must be at least 1, got {config.workers}")
    if config.output not in OUTPUT_MODES:
        raise ConfigError(f"Output mode must be one of {', '.join(OUTPUT_MODES)}, got {config.output!r}")
    if config.rng_name != PINNED_RNG:
        raise ConfigError(f"Only {PINNED_RNG} is supported, config names {config.rng_name!r}")
    for suite, size in config.suite_sizes.items():
        if size < 0:
            raise ConfigError(f"Suite size for {suite} must be nonnegative, got {size}")
    if config.mc_rerun_factor < 1:
        raise ConfigError(f"Rerun factor must be at least 1, got {config.mc_rerun_factor}")
