#-*- coding:utf-8 -*-

import pytest

import entringer.tree as tree
import entringer.triangles as triangles


RUNNING_TREE = '1(2(3(7,9)),4(5,6(8)))'
SIGNED_RUNNING_TREE = '-8(-4(-3(6,9)),-1(2,5(7)))'

ENTRINGER_ROWS = {
    1: [1],
    2: [0, 1],
    3: [0, 1, 1],
    4: [0, 1, 2, 2],
    5: [0, 2, 4, 5, 5],
    6: [0, 5, 10, 14, 16, 16],
    7: [0, 16, 32, 46, 56, 61, 61],
}

# k = -n..-1 followed by k = 1..n
ARNOLD_ROWS = {
    1: [1, 1],
    2: [0, 1, 1, 2],
    3: [0, 2, 3, 3, 4, 4],
    4: [0, 4, 8, 11, 11, 14, 16, 16],
    5: [0, 16, 32, 46, 57, 57, 68, 76, 80, 80],
    6: [0, 80, 160, 236, 304, 361, 361, 418, 464, 496, 512, 512],
}


def pytest_configure(config):
    config.addinivalue_line('markers',
        'slow: exhaustive sweeps at the default verification sizes')


### Data fixtures ###
@pytest.fixture(scope='session')
def entringer_rows():
    return ENTRINGER_ROWS

@pytest.fixture(scope='session')
def arnold_rows():
    return ARNOLD_ROWS

@pytest.fixture(scope='session')
def entringer7():
    return triangles.entringer_table(7)

@pytest.fixture(scope='session')
def arnold6():
    return triangles.arnold_table(6)

@pytest.fixture(scope='session')
def running_tree():
    return tree.tree_from_literal(RUNNING_TREE)

@pytest.fixture(scope='session')
def signed_running_tree():
    return tree.tree_from_literal(SIGNED_RUNNING_TREE)
