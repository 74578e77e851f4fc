"""Pytest configuration and fixtures"""
import json
import math
import os

import numpy as np
import pytest

from liecurve.config.manager import ConfigManager
from liecurve.core.chn_model import build_chn
from liecurve.core.hypersurface import build_hypersurface
from liecurve.models.search import SearchConfig

THETA_GRID = [0.0, math.pi / 8, math.pi / 4, 3 * math.pi / 8, math.pi / 2]


@pytest.fixture(scope="session")
def config(tmp_path_factory):
    """Configuration from a scratch directory with a reduced restart count"""
    config_dir = tmp_path_factory.mktemp('config')
    (config_dir / 'settings.json').write_text(json.dumps({'search': {'restarts': 8}}), encoding='utf-8')
    os.environ['LIECURVE_CONFIG_DIR'] = str(config_dir)
    os.environ.pop('LIECURVE_SEED', None)
    ConfigManager.reset()
    return ConfigManager()


@pytest.fixture
def rng():
    """Seeded generator for random vectors and planes"""
    return np.random.default_rng(12345)


@pytest.fixture
def fast_cfg():
    """Plane search with fewer restarts, enough for dims up to 7"""
    return SearchConfig(seed=20240229, restarts=16, max_iters=500)


@pytest.fixture
def ch2():
    return build_chn(2)


@pytest.fixture
def ch3():
    return build_chn(3)


@pytest.fixture
def ruled_n2():
    """s(0) in CH^2, the ruled minimal hypersurface"""
    return build_hypersurface(2, 0.0)


@pytest.fixture
def horosphere_n2():
    """s(pi/2) in CH^2, the 3-dimensional Heisenberg algebra"""
    return build_hypersurface(2, math.pi / 2)
