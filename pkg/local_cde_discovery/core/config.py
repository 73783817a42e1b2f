# Location: local_cde_discovery/core/config.py
"""
Configuration Management

This module handles loading and accessing discovery and benchmark settings.
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Callable, Dict, List, Optional, Tuple

from local_cde_discovery.core.exceptions import ConfigurationError

CONFIG_ENV_VAR = "LOCAL_CDE_CONFIG"

logger = logging.getLogger(__name__)


@dataclass
class DiscoveryConfig:
    """Discovery and benchmark configuration."""

    # CI testing
    alpha: float = 0.05
    ci_kind: str = "continuous"  # continuous | binary
    condition_limit: float = 1e12  # Fisher-z pseudo-inverse fallback
    g2_samples_per_df: int = 10

    # Search
    subset_warn_size: int = 12

    # Data generation
    max_draws: int = 10000
    n_samples: int = 5000
    seed: int = 42

    # Benchmark
    bench_sizes: List[int] = field(default_factory=lambda: [10, 20, 50])
    bench_reps: int = 20
    workers: int = 4

    # Other settings
    log_level: str = "INFO"

    # Extra configurations
    extra: Dict[str, Any] = field(default_factory=dict)

    def validate(self) -> None:
        """
        Check value ranges.

        Raises:
            ConfigurationError: If any value is out of range
        """
        if not 0.0 < self.alpha < 1.0:
            raise ConfigurationError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.ci_kind not in ("continuous", "binary"):
            raise ConfigurationError(f"Unknown ci_kind: {self.ci_kind}")
        if self.workers < 1:
            raise ConfigurationError(f"workers must be >= 1, got {self.workers}")
        if self.max_draws < 1:
            raise ConfigurationError(f"max_draws must be >= 1, got {self.max_draws}")
        if self.bench_reps < 1 or not self.bench_sizes:
            raise ConfigurationError("Benchmark needs at least one size and one rep")


_FIELDS = {f.name for f in fields(DiscoveryConfig)}

# Environment variable -> (field, parser)
ENV_OVERRIDES: Dict[str, Tuple[str, Callable[[str], Any]]] = {
    "LOCAL_CDE_ALPHA": ("alpha", float),
    "LOCAL_CDE_WORKERS": ("workers", int),
    "LOCAL_CDE_SEED": ("seed", int),
    "LOCAL_CDE_LOG_LEVEL": ("log_level", str),
}


def _read_config_file(config: DiscoveryConfig, config_file: str) -> None:
    """Apply a JSON settings file; unknown keys are kept in ``extra``."""
    try:
        with open(config_file, "r") as f:
            settings = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"Ignoring unreadable config file {config_file}: {e}")
        return
    for key, value in settings.items():
        if key in _FIELDS and key != "extra":
            setattr(config, key, value)
        else:
            config.extra[key] = value
    logger.info(f"Loaded configuration from {config_file}")


def load_config() -> DiscoveryConfig:
    """
    Load configuration from an optional JSON file and environment variables.

    Returns:
        DiscoveryConfig object with loaded configuration

    Raises:
        ConfigurationError: If an override cannot be parsed or a value is out
            of range
    """
    config = DiscoveryConfig()

    config_file = os.environ.get(CONFIG_ENV_VAR, "")
    if config_file and os.path.exists(config_file):
        _read_config_file(config, config_file)

    for env_var, (key, cast) in ENV_OVERRIDES.items():
        raw = os.environ.get(env_var)
        if not raw:
            continue
        try:
            setattr(config, key, cast(raw))
        except ValueError as e:
            raise ConfigurationError(f"Invalid value for {env_var}: {raw!r}") from e

    config.validate()
    return config


def default_config_path() -> str:
    """``LOCAL_CDE_CONFIG`` if set, else a file under ``~/.config``."""
    if path := os.environ.get(CONFIG_ENV_VAR):
        return path
    config_dir = os.path.join(os.path.expanduser("~"), ".config", "local-cde-discovery")
    os.makedirs(config_dir, exist_ok=True)
    return os.path.join(config_dir, "config.json")


def save_config(config: DiscoveryConfig, path: Optional[str] = None) -> bool:
    """
    Save configuration as JSON, with ``extra`` keys written at top level.

    Args:
        config: The configuration to save
        path: Target file; defaults to ``default_config_path()``

    Returns:
        True if saved successfully, False otherwise
    """
    settings = asdict(config)
    settings.update(settings.pop("extra"))
    target = path or default_config_path()
    try:
        with open(target, "w") as f:
            json.dump(settings, f, indent=2)
    except OSError as e:
        logger.error(f"Could not save configuration to {target}: {e}")
        return False
    logger.info(f"Configuration saved to {target}")
    return True
