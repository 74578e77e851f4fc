"""Configuration tests

Tests for liecurve.config.manager.ConfigManager: defaults, settings files and
environment overrides.
"""
import json

import pytest

from liecurve.config.manager import ConfigManager
from liecurve.models.search import SearchConfig


@pytest.fixture
def fresh_config(tmp_path, monkeypatch):
    """ConfigManager reading from an isolated directory; singleton restored afterwards"""
    monkeypatch.setenv('LIECURVE_CONFIG_DIR', str(tmp_path))
    for name in ('LIECURVE_SEED', 'LIECURVE_CLUSTER_TOL', 'LIECURVE_WORKERS', 'LOG_LEVEL'):
        monkeypatch.delenv(name, raising=False)
    ConfigManager.reset()

    def make():
        ConfigManager.reset()
        return ConfigManager()

    yield make
    ConfigManager.reset()


class TestConfigManager:
    """Settings resolution"""

    def test_singleton(self, fresh_config):
        """Repeated construction returns the same instance"""
        config = fresh_config()
        assert ConfigManager() is config

    def test_defaults(self, fresh_config):
        """Without files or environment the built-in defaults apply"""
        config = fresh_config()
        assert config.get_search_seed() == 20240229
        assert config.get_cluster_tol() == 1e-6
        assert config.get_hopf_tol() == 1e-9
        assert config.get_workers() == 1
        assert config.get_log_level() == 'WARNING'
        assert config.get_search_config() == SearchConfig()

    def test_settings_file(self, fresh_config, tmp_path):
        """settings.json values are merged over the defaults"""
        (tmp_path / 'settings.json').write_text(json.dumps({'search': {'restarts': 8}}), encoding='utf-8')
        config = fresh_config()
        cfg = config.get_search_config()
        assert cfg.restarts == 8
        assert cfg.max_iters == 500

    def test_example_fallback(self, fresh_config, tmp_path):
        """settings.json.example is used when settings.json is missing"""
        (tmp_path / 'settings.json.example').write_text(json.dumps({'parallel': {'workers': 3}}), encoding='utf-8')
        assert fresh_config().get_workers() == 3

    def test_corrupt_file_ignored(self, fresh_config, tmp_path):
        """Unparseable settings fall back to defaults"""
        (tmp_path / 'settings.json').write_text('{not json', encoding='utf-8')
        assert fresh_config().get_search_seed() == 20240229

    def test_env_overrides(self, fresh_config, monkeypatch):
        """Environment variables win over settings"""
        monkeypatch.setenv('LIECURVE_SEED', '42')
        monkeypatch.setenv('LIECURVE_CLUSTER_TOL', '1e-4')
        monkeypatch.setenv('LIECURVE_WORKERS', '4')
        monkeypatch.setenv('LOG_LEVEL', 'debug')
        config = fresh_config()
        assert config.get_search_seed() == 42
        assert config.get_search_config().seed == 42
        assert config.get_cluster_tol() == 1e-4
        assert config.get_workers() == 4
        assert config.get_log_level() == 'DEBUG'

    def test_bad_env_ignored(self, fresh_config, monkeypatch):
        """Unparseable or out-of-range environment values are ignored"""
        monkeypatch.setenv('LIECURVE_SEED', '-5')
        monkeypatch.setenv('LIECURVE_WORKERS', 'many')
        config = fresh_config()
        assert config.get_search_seed() == 20240229
        assert config.get_workers() == 1

    def test_get_setting_nested(self, fresh_config):
        """Missing keys return the default"""
        config = fresh_config()
        assert config.get_setting('search', 'tol') == 1e-9
        assert config.get_setting('search', 'missing', default='x') == 'x'
        assert config.get_setting('search', 'tol', 'deeper', default=None) is None
