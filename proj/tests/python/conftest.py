import os
from pathlib import Path

import pytest


@pytest.fixture(scope="session")
def data_dir():
    return Path(os.environ.get("FLOODWATCH_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("FLOODWATCH_CLI")
    if not path:
        pytest.skip("FLOODWATCH_CLI not set")
    return path
