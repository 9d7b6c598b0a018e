"""Shared fixtures; puts src/ on the import path like the scripts do."""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(__file__)), 'src'))

from fadinggrand.codebook import hamming_7_4  # noqa: E402


@pytest.fixture
def hamming():
    return hamming_7_4()


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


HAMMING_ALIST = """7 3
3 4
2 2 2 3 1 1 1
4 4 4
1 2 0
1 3 0
2 3 0
1 2 3
1 0 0
2 0 0
3 0 0
1 2 4 5
1 3 4 6
2 3 4 7
"""


@pytest.fixture
def hamming_alist():
    return HAMMING_ALIST
