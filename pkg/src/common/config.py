"""Configuration for the census experiments.

Loads ``config/census_config.yaml`` over built-in defaults and applies
environment variable overrides (a project ``.env`` is read first).
"""

import os
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(os.environ.get('PROJECT_ROOT', Path(__file__).resolve().parents[2]))

env_path = PROJECT_ROOT / '.env'
if env_path.exists():
    load_dotenv(env_path)


class CensusConfig:
    """Configuration manager for the census packages and CLI."""

    def __init__(self, config_path: Optional[Union[str, Path]] = None):
        """Initialize configuration loader.

        Args:
            config_path: Path to YAML configuration file. If None, uses
                ``config/census_config.yaml`` under the project root.
        """
        self.project_root = PROJECT_ROOT
        if config_path is None:
            config_path = self.project_root / 'config' / 'census_config.yaml'

        self.config_path = Path(config_path)
        self._config: Dict[str, Any] = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from YAML file with defaults."""
        defaults = self._get_defaults()

        if self.config_path.exists():
            try:
                with open(self.config_path, 'r', encoding='utf-8') as f:
                    loaded_config = yaml.safe_load(f) or {}
                config = self._deep_merge(defaults, loaded_config)
                logger.debug(f"Loaded configuration from {self.config_path}")
            except (OSError, yaml.YAMLError) as e:
                logger.error(f"Failed to load config from {self.config_path}: {e}")
                config = defaults
        else:
            logger.debug(f"Config file not found at {self.config_path}, using defaults")
            config = defaults

        return self._apply_env_overrides(config)

    @staticmethod
    def _get_defaults() -> Dict[str, Any]:
        """Get default configuration values."""
        return {
            'general': {
                'log_level': 'INFO',
                'output_dir': 'outputs',
                'log_dir': 'logs',
                'log_to_file': False,
                'workers': 0,
            },
            'free_group': {
                'enumeration_cutoff': 7,
            },
            'family': {
                'default_mode': 'all-below-half',
                'default_budget': 1000,
                'exact_digit_limit': 1_000_000,
                'k': 100,
            },
            'schreier': {
                'full_bfs_limit': 2 ** 13,
                'bfs_chunk': 512,
                'refine_sweeps': 16,
            },
            'hyperbolic': {
                'a': 1.0,
                'b': 1.0,
                'c': 3.0,
                'k': 729.0,
                'c1': 1.0,
                'c2': 1.0,
                'c3': 1.0,
                'c4': 1.0,
                'quad_tol': 1e-12,
                'clamp_warn': 1e-6,
                'nerve_block': 512,
                'default_sep': 0.05,
            },
        }

    def _deep_merge(self, base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        """Deep merge two dictionaries."""
        result = base.copy()

        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._deep_merge(result[key], value)
            else:
                result[key] = value

        return result

    @staticmethod
    def _apply_env_overrides(config: Dict[str, Any]) -> Dict[str, Any]:
        """Apply environment variable overrides to configuration."""
        if 'CENSUS_LOG_LEVEL' in os.environ:
            config['general']['log_level'] = os.environ['CENSUS_LOG_LEVEL']

        if 'CENSUS_OUTPUT_DIR' in os.environ:
            config['general']['output_dir'] = os.environ['CENSUS_OUTPUT_DIR']

        if 'CENSUS_WORKERS' in os.environ:
            config['general']['workers'] = int(os.environ['CENSUS_WORKERS'])

        if 'CENSUS_ENUMERATION_CUTOFF' in os.environ:
            config['free_group']['enumeration_cutoff'] = int(os.environ['CENSUS_ENUMERATION_CUTOFF'])

        return config

    def get_section(self, section: str) -> Dict[str, Any]:
        """Get a whole configuration section (empty dict if missing)."""
        return dict(self._config.get(section, {}))

    def get_setting(self, section: str, key: str, default: Any = None) -> Any:
        """Get a single setting.

        Args:
            section: Top-level section, e.g. 'schreier'
            key: Setting key inside the section
            default: Value returned when the setting is absent

        Returns:
            Configuration value
        """
        return self._config.get(section, {}).get(key, default)

    def get_path(self, path_key: str) -> Path:
        """Resolve a path setting from ``general`` against the project root."""
        path_str = self.get_setting('general', path_key, '')
        if not path_str:
            return self.project_root
        path = Path(path_str)
        return path if path.is_absolute() else self.project_root / path

    def constants(self) -> Dict[str, float]:
        """Free constants of the counting bounds (a, b, c, c1..c4, k)."""
        section = self.get_section('hyperbolic')
        return {key: float(section[key]) for key in ('a', 'b', 'c', 'c1', 'c2', 'c3', 'c4', 'k')}

    @property
    def log_level(self) -> str:
        return str(self.get_setting('general', 'log_level', 'INFO'))

    @property
    def workers(self) -> int:
        """Worker processes; 0 or less means one per CPU."""
        value = int(self.get_setting('general', 'workers', 0))
        return value if value > 0 else (os.cpu_count() or 1)
