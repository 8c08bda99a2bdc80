import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from ttg import chain_model, support_model, table_operator

MODELS_DIR = os.path.join(os.path.dirname(__file__), "..", "models")


@pytest.fixture(scope="session")
def support2():
    return support_model(2)


@pytest.fixture(scope="session")
def support3():
    return support_model(3)


@pytest.fixture(scope="session")
def chain3():
    return chain_model(3)


@pytest.fixture(scope="session")
def promote(chain3):
    return table_operator(chain3, {0: {0}, 1: {0, 1, 2},
                                   2: {0, 1, 2, 3}, 3: {0, 1, 2, 3}})


@pytest.fixture(scope="session")
def models_dir():
    return MODELS_DIR
