import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ceclab import make_ec, make_pr


@pytest.fixture(scope="session")
def ec():
    return make_ec()


@pytest.fixture(scope="session")
def prc():
    return make_pr()
