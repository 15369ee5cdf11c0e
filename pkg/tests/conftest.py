# -*- coding: utf-8 -*-
# file: conftest.py
# time: 2026/10/17

import logging
import random

import pytest

from varkit.tasks.exact import DenseMatrix, RATIONALS, prime_field
from varkit.tasks.ncpoly import NCPolynomial
from varkit.utils.logger import release_logger
from varkit.utils.varkit_utils import init_config


@pytest.fixture
def config():
    return init_config()


@pytest.fixture
def rng():
    return random.Random(20261017)


@pytest.fixture
def f2():
    return prime_field(2)


@pytest.fixture
def f3():
    return prime_field(3)


@pytest.fixture
def units2():
    """Matrix units E11, E12, E21, E22 of M2(Q)."""
    return [DenseMatrix.unit(RATIONALS, 2, 2, i, j) for i in range(2) for j in range(2)]


@pytest.fixture
def commutator_poly():
    return NCPolynomial(RATIONALS, {(1, 2): 1, (2, 1): -1})


@pytest.fixture
def write_file(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write


@pytest.fixture(autouse=True)
def fresh_logger():
    # handlers keep a reference to the stream captured for the previous test
    yield
    release_logger(logging.getLogger('varkit'))
