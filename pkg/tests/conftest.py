import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from linrel import witnesses  # noqa: E402

FIELDS = ["real", "complex"]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(params=FIELDS)
def field(request):
    return request.param


@pytest.fixture
def t0():
    return witnesses.t0()


E1 = np.array([1.0, 0.0])
E2 = np.array([0.0, 1.0])
