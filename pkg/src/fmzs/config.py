"""Run configuration for relation generation and elimination.

Provides YAML-based configuration for the knobs that control a run:
- Worker pool size and block count for relation generation
- Largest word degree kept in the shuffle memo
- Debug-mode invariant checks in the elimination engine
- Size guards for the dense oracle and for large weights

Example YAML structure:
    threads: 8
    block_count: 16
    memo_max_degree: 7
    debug_checks: false
    oracle_max_columns: 4096
    output_dir: data
    large_weight: 18
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

THREADS_ENV = "FMZS_THREADS"
CONFIG_ENV = "FMZS_CONFIG"


class RunConfig:
    """Load and manage run configuration.

    Values come from (lowest to highest precedence) the built-in defaults,
    the YAML file, and the ``FMZS_THREADS`` environment variable.
    """

    def __init__(self, config_path: Optional[Path] = None):
        """Initialize run configuration.

        Args:
            config_path: Path to a YAML file. Defaults to ``$FMZS_CONFIG`` or
                config/fmzs.yaml at the repository root
        """
        if config_path is None:
            env_path = os.getenv(CONFIG_ENV)
            if env_path:
                config_path = Path(env_path)
            else:
                config_path = Path(__file__).parent.parent.parent / "config" / "fmzs.yaml"

        self.config_path = Path(config_path)
        self.config: Dict[str, Any] = {}
        self._load_config()

    def _load_config(self) -> None:
        """Load configuration from YAML file."""
        if not self.config_path.exists():
            logger.debug("Run config not found at %s, using defaults", self.config_path)
            self.config = self._get_default_config()
            return

        try:
            with open(self.config_path) as f:
                loaded = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            logger.error("Failed to load run config: %s", e)
            self.config = self._get_default_config()
            return

        if not isinstance(loaded, dict):
            logger.warning("Run config %s is not a mapping, using defaults", self.config_path)
            self.config = self._get_default_config()
            return

        self.config = {**self._get_default_config(), **loaded}
        logger.info("Loaded run config from %s", self.config_path)

    def _get_default_config(self) -> Dict[str, Any]:
        """Return the built-in defaults."""
        return {
            "threads": 4,
            "block_count": None,
            "memo_max_degree": None,
            "debug_checks": False,
            "oracle_max_columns": 4096,
            "output_dir": "data",
            "large_weight": 18,
        }

    def _positive_int(self, key: str, value: Any, default: Optional[int]) -> Optional[int]:
        if value is None:
            return default
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            logger.warning("Invalid value for '%s': %r. Expected a positive integer.", key, value)
            return default
        return value

    @property
    def threads(self) -> int:
        """Worker pool size; ``FMZS_THREADS`` wins over the file."""
        env_value = os.getenv(THREADS_ENV)
        if env_value:
            try:
                parsed = int(env_value)
            except ValueError:
                parsed = 0
            if parsed >= 1:
                return parsed
            logger.warning("Ignoring invalid %s=%r", THREADS_ENV, env_value)
        return self._positive_int("threads", self.config.get("threads"), 4) or 4

    @property
    def block_count(self) -> int:
        """Number of pair blocks; defaults to the thread count."""
        return self._positive_int("block_count", self.config.get("block_count"), self.threads) or 1

    def memo_max_degree(self, weight: int) -> int:
        """Largest total word degree cached by the shuffle memo for a weight."""
        default = max(1, (weight + 1) // 2)
        return self._positive_int("memo_max_degree", self.config.get("memo_max_degree"), default) or default

    @property
    def debug_checks(self) -> bool:
        """Whether the elimination engine asserts conflict-search conditions."""
        return bool(self.config.get("debug_checks", False))

    @property
    def oracle_max_columns(self) -> int:
        """Column guard of the dense oracle."""
        return self._positive_int("oracle_max_columns", self.config.get("oracle_max_columns"), 4096) or 4096

    @property
    def output_dir(self) -> Path:
        """Default artifact directory."""
        return Path(self.config.get("output_dir") or "data")

    @property
    def large_weight(self) -> int:
        """Smallest weight that requires an explicit large-run opt in."""
        return self._positive_int("large_weight", self.config.get("large_weight"), 18) or 18


# Global instance - loaded once
_run_config: Optional[RunConfig] = None


def get_run_config(config_path: Optional[Path] = None) -> RunConfig:
    """Get global run configuration instance.

    Args:
        config_path: Optional path to config file (only used on first call or to reload)

    Returns:
        RunConfig instance
    """
    global _run_config
    if _run_config is None or config_path is not None:
        _run_config = RunConfig(config_path)
    return _run_config
