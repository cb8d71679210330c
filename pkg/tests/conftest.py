import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from artinword.core import GroupParams


@pytest.fixture(scope="session")
def params5():
    return GroupParams(5)


@pytest.fixture(scope="session")
def params6():
    return GroupParams(6)


@pytest.fixture(scope="session")
def params4():
    return GroupParams(4, allow_small_n=True)
