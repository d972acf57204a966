import math

import numpy as np
import pytest

from lctbank import LctParams, bank_from_prototype, design_prototype

from helpers import HAAR, T_EXAMPLE


@pytest.fixture
def frft():
    return LctParams.frft(math.pi / 4)


@pytest.fixture
def fourier():
    return LctParams.fourier()


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture
def haar_bank(frft):
    return bank_from_prototype(HAAR, frft, T_EXAMPLE)


@pytest.fixture(scope="session")
def designed_prototype():
    return design_prototype(14)


@pytest.fixture(scope="session")
def designed_bank(designed_prototype):
    return bank_from_prototype(designed_prototype, LctParams.frft(math.pi / 4), T_EXAMPLE)
