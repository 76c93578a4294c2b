import os.path as op
from pathlib import Path

import pytest
import yaml

from permpattern_utils import utils


with open(op.join(op.dirname(__file__), "worked_examples.yaml"), encoding='utf8') as data:
    TEST_DATA = yaml.safe_load(data)


@pytest.fixture(autouse=True)
def default_settings():
    """Restores the default settings around each test"""
    utils.apply_config(utils.DEFAULT_CONFIG)
    yield
    utils.apply_config(utils.DEFAULT_CONFIG)


@pytest.fixture
def config_file(tmp_path: Path, case):
    """Writes ``case['config']`` as config.yaml to a temp dir"""
    config_fname = tmp_path / 'config.yaml'
    with config_fname.open('w') as fdes:
        yaml.dump(case.get('config', {}), fdes)
    yield config_fname
