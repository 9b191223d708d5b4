import numpy as np
import pytest

import helpers


@pytest.fixture
def rng() -> np.random.Generator:
    return helpers.make_rng()
