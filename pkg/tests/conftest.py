import logging
import sys
from pathlib import Path

import numpy as np
import pytest

# Ensure src/ is on the path for imports
sys.path.insert(0, str(Path(__file__).resolve().parents[1] / 'src'))


@pytest.fixture
def rng():
    return np.random.default_rng(20240501)


@pytest.fixture
def run_cli(tmp_path, monkeypatch):
    """Run the census CLI into a fresh output directory; returns (status, output_dir).

    Root logging handlers installed by the CLI are removed afterwards.
    """
    for name in ('CENSUS_LOG_LEVEL', 'CENSUS_OUTPUT_DIR', 'CENSUS_WORKERS', 'CENSUS_ENUMERATION_CUTOFF'):
        monkeypatch.delenv(name, raising=False)
    from census_cli.main import main

    counter = {'runs': 0}

    def _run(*args):
        counter['runs'] += 1
        output_dir = tmp_path / f"run{counter['runs']}"
        status = main(['--output-dir', str(output_dir), *args])
        return status, output_dir

    root = logging.getLogger()
    saved_handlers, saved_level = root.handlers[:], root.level
    yield _run
    root.handlers[:] = saved_handlers
    root.setLevel(saved_level)
