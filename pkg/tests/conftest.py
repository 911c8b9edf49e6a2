from pathlib import Path

import numpy as np
import pytest

from chaodna.imageio import read_pgm
from chaodna.keys import parse_key

DATA = Path(__file__).parent / "data"

# FIPS-197 example key, fixed before any ciphertext statistics were looked at
FIXED_KEY_HEX = "2b7e151628aed2a6abf7158809cf4f3c"


@pytest.fixture(scope="session")
def camera():
    return read_pgm((DATA / "camera256.pgm").read_bytes())


@pytest.fixture(scope="session")
def fixed_key():
    return parse_key(FIXED_KEY_HEX)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
