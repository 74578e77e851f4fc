"""Configuration management module"""

import copy
import json
import logging
import os

from dotenv import load_dotenv

from liecurve.models.search import SearchConfig

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS = {
    'search': {
        'seed': 20240229,
        'restarts': 64,
        'max_iters': 500,
        'step_init': 0.1,
        'step_min': 1e-10,
        'tol': 1e-9,
    },
    'spectrum': {
        'cluster_tol': 1e-6,
    },
    'flags': {
        'hopf_tol': 1e-9,
    },
    'parallel': {
        'workers': 1,
    },
    'logging': {
        'level': 'WARNING',
        'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        'file_enabled': False,
    },
    'paths': {
        'logs_directory': '.config/logs',
    },
}


def _deep_merge(base: dict, override: dict) -> dict:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """Centralized configuration management using Singleton pattern"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(ConfigManager, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return

        self._initialized = True

        # Load environment variables from .env file
        load_dotenv()

        self.config_dir = os.getenv('LIECURVE_CONFIG_DIR', '.config')
        self.settings = _deep_merge(DEFAULT_SETTINGS, self._load_json('settings.json'))

    @classmethod
    def reset(cls):
        """Drop the singleton so the next construction re-reads env and files"""
        cls._instance = None

    def _load_json(self, filename):
        """Load a JSON settings file, falling back to its .example template"""
        filepath = os.path.join(self.config_dir, filename)
        for candidate in (filepath, filepath + '.example'):
            if not os.path.exists(candidate):
                continue
            try:
                with open(candidate, 'r', encoding='utf-8') as f:
                    data = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                logger.warning("Failed to read %s: %s", candidate, e)
                continue
            if isinstance(data, dict):
                return data
            logger.warning("Ignoring %s: top level is not an object", candidate)
        logger.debug("No settings file under %s, using defaults", self.config_dir)
        return {}

    def get_setting(self, *keys, default=None):
        """Get a nested setting
        Example: get_setting('search', 'restarts')
        """
        value = self.settings
        for key in keys:
            if isinstance(value, dict):
                value = value.get(key)
            else:
                return default
            if value is None:
                return default
        return value

    def _env(self, name, cast):
        raw = os.getenv(name)
        if raw is None or raw == '':
            return None
        try:
            return cast(raw)
        except ValueError:
            logger.warning("Ignoring %s=%r: not a valid %s", name, raw, cast.__name__)
            return None

    def get_search_seed(self):
        """Search seed: LIECURVE_SEED, then settings search.seed

        Returns:
            int: unsigned 64-bit seed
        """
        seed = self._env('LIECURVE_SEED', int)
        if seed is not None and not 0 <= seed < 2 ** 64:
            logger.warning("Ignoring LIECURVE_SEED=%d: outside the unsigned 64-bit range", seed)
            seed = None
        if seed is None:
            seed = int(self.get_setting('search', 'seed', default=20240229))
        return seed

    def get_cluster_tol(self):
        tol = self._env('LIECURVE_CLUSTER_TOL', float)
        if tol is None:
            tol = float(self.get_setting('spectrum', 'cluster_tol', default=1e-6))
        return tol

    def get_hopf_tol(self):
        return float(self.get_setting('flags', 'hopf_tol', default=1e-9))

    def get_workers(self):
        """Thread count for restarts and sweep rows

        Returns:
            int: at least 1
        """
        workers = self._env('LIECURVE_WORKERS', int)
        if workers is None:
            workers = int(self.get_setting('parallel', 'workers', default=1))
        return max(1, workers)

    def get_log_level(self):
        return str(os.getenv('LOG_LEVEL') or self.get_setting('logging', 'level', default='WARNING')).upper()

    def get_search_config(self):
        """SearchConfig from settings search.*, seeded by get_search_seed()

        Returns:
            SearchConfig
        """
        search = self.get_setting('search', default={})
        return SearchConfig(
            seed=self.get_search_seed(),
            restarts=int(search.get('restarts', 64)),
            max_iters=int(search.get('max_iters', 500)),
            step_init=float(search.get('step_init', 0.1)),
            step_min=float(search.get('step_min', 1e-10)),
            tol=float(search.get('tol', 1e-9)),
        )
